/*=========================================================================
 *
 *  Copyright the defc contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *         http://www.apache.org/licenses/LICENSE-2.0.txt
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 *=========================================================================*/
#ifndef DEFC_IMAGE_IO_HPP
#define DEFC_IMAGE_IO_HPP

#include <filesystem>

#include "defc/image.hpp"

namespace defc {

/// Load a PNG (8/16-bit, gray or RGB; palettes expanded, alpha stripped) or
/// a binary PGM (P5) / PPM (P6) raster. The container is detected from the
/// file's magic bytes, not its extension. 8-bit samples are scaled by 1/255,
/// 16-bit by 1/65535. Throws std::runtime_error on unreadable files,
/// unsupported formats, or zero-size rasters.
Image load_image(const std::filesystem::path& path);

/// Write an 8-bit raster. The container is chosen by extension: ".png"
/// (gray or RGB), ".pgm" (1 channel), ".ppm" (3 channels; a 1-channel image
/// is replicated). Samples are clamped to [0,1] and quantized with
/// round-half-up: byte = floor(sample*255 + 0.5).
void save_image(const Image& img, const std::filesystem::path& path);

}  // namespace defc

#endif
