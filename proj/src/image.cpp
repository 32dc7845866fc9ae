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
#include "defc/image.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace defc {

Image::Image(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  if (width <= 0 || height <= 0 || (channels != 1 && channels != 3))
    throw std::invalid_argument("Image: bad dimensions or channel count");
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

double ssd(const Image& a, const Image& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("ssd: shape mismatch");
  double acc = 0.0;
  auto sa = a.samples();
  auto sb = b.samples();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double d = sa[i] - sb[i];
    acc += d * d;
  }
  return acc;
}

double psnr_from_ssd(double ssd_value, std::size_t total_samples) {
  if (ssd_value <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(static_cast<double>(total_samples) / ssd_value);
}

Image luminance(const Image& img) {
  if (img.channels() == 1) return img;
  Image out(img.width(), img.height(), 1);
  auto r = img.plane(0);
  auto g = img.plane(1);
  auto b = img.plane(2);
  auto l = out.plane(0);
  for (std::size_t i = 0; i < l.size(); ++i)
    l[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
  return out;
}

void clamp01(Image& img) {
  for (double& v : img.samples()) v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace defc
