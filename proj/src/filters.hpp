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
#ifndef DEFC_FILTERS_HPP
#define DEFC_FILTERS_HPP

#include <vector>

#include "defc/image.hpp"

namespace defc::detail {

// Separable Gaussian, kernel truncated at 3*sigma and renormalized to unit
// sum, half-sample symmetric boundary (which keeps the total mass of the
// plane exactly). sigma <= 0 returns the input unchanged.
void gaussian_blur_plane(std::vector<double>& plane, int w, int h, double sigma);

Image gaussian_blur(const Image& img, double sigma);

// Sobel gradient magnitude of a 1-channel image, half-sample symmetric
// boundary.
Image sobel_magnitude(const Image& gray);

// Value below which a `q` fraction of the samples lie; q in [0,1].
double percentile(std::vector<double> values, double q);

// Resample a plane to new dimensions with bicubic (images) or bilinear
// (flow components) interpolation, pixel centers aligned.
std::vector<double> resize_plane_bicubic(const std::vector<double>& src, int sw,
                                         int sh, int dw, int dh);
std::vector<double> resize_plane_bilinear(const std::vector<double>& src, int sw,
                                          int sh, int dw, int dh);

Image resize_bicubic(const Image& img, int dw, int dh);

}  // namespace defc::detail

#endif
