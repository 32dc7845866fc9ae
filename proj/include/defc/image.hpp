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
#ifndef DEFC_IMAGE_HPP
#define DEFC_IMAGE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace defc {

/// Planar floating-point raster. Samples are doubles, nominally in [0,1]
/// (rasters loaded from files are scaled into that range; intermediate
/// results of the pipeline may drift slightly outside and are clamped only
/// at output time). Planes are row-major, one per channel.
class Image {
public:
  Image() = default;
  Image(int width, int height, int channels, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }

  std::size_t plane_size() const {
    return static_cast<std::size_t>(width_) * height_;
  }
  std::size_t sample_count() const { return data_.size(); }

  std::span<double> plane(int c) {
    return {data_.data() + c * plane_size(), plane_size()};
  }
  std::span<const double> plane(int c) const {
    return {data_.data() + c * plane_size(), plane_size()};
  }

  double at(int c, int x, int y) const {
    return data_[c * plane_size() + static_cast<std::size_t>(y) * width_ + x];
  }
  double& at(int c, int x, int y) {
    return data_[c * plane_size() + static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<double> samples() { return data_; }
  std::span<const double> samples() const { return data_; }

  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

/// Sum of squared sample differences over all channels. Summation order is
/// fixed (sequential over the planar layout) so results are reproducible.
/// Throws std::invalid_argument on shape mismatch.
double ssd(const Image& a, const Image& b);

/// PSNR in dB against peak 1.0: 10*log10(N/ssd) for N total samples.
/// Returns +infinity when ssd is zero.
double psnr_from_ssd(double ssd_value, std::size_t total_samples);

/// Collapse to one channel. 3-channel input uses the Rec. 601 weights
/// 0.299 R + 0.587 G + 0.114 B; 1-channel input is copied unchanged.
Image luminance(const Image& img);

/// Clamp every sample to [0,1] in place.
void clamp01(Image& img);

}  // namespace defc

#endif
