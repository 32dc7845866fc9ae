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
#include "filters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "interp.hpp"

namespace defc::detail {

namespace {

// Half-sample symmetric extension: ... x1 x0 | x0 x1 ... xn-1 | xn-1 xn-2 ...
int reflect_index(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = std::max(1, static_cast<int>(std::floor(3.0 * sigma)));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int t = -radius; t <= radius; ++t) {
    k[t + radius] = std::exp(-0.5 * (t / sigma) * (t / sigma));
    sum += k[t + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

void convolve_rows(std::vector<double>& plane, int w, int h,
                   const std::vector<double>& k) {
  const int radius = static_cast<int>(k.size() / 2);
  std::vector<double> row(w);
  for (int y = 0; y < h; ++y) {
    double* p = plane.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t)
        acc += k[t + radius] * p[reflect_index(x + t, w)];
      row[x] = acc;
    }
    std::copy(row.begin(), row.end(), p);
  }
}

void convolve_cols(std::vector<double>& plane, int w, int h,
                   const std::vector<double>& k) {
  const int radius = static_cast<int>(k.size() / 2);
  std::vector<double> col(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t)
        acc += k[t + radius] *
               plane[static_cast<std::size_t>(reflect_index(y + t, h)) * w + x];
      col[y] = acc;
    }
    for (int y = 0; y < h; ++y) plane[static_cast<std::size_t>(y) * w + x] = col[y];
  }
}

}  // namespace

void gaussian_blur_plane(std::vector<double>& plane, int w, int h, double sigma) {
  if (sigma <= 0.0) return;
  const auto k = gaussian_kernel(sigma);
  convolve_rows(plane, w, h, k);
  convolve_cols(plane, w, h, k);
}

Image gaussian_blur(const Image& img, double sigma) {
  Image out = img;
  for (int c = 0; c < out.channels(); ++c) {
    std::vector<double> plane(out.plane(c).begin(), out.plane(c).end());
    gaussian_blur_plane(plane, out.width(), out.height(), sigma);
    std::copy(plane.begin(), plane.end(), out.plane(c).begin());
  }
  return out;
}

Image sobel_magnitude(const Image& gray) {
  if (gray.channels() != 1)
    throw std::invalid_argument("sobel_magnitude: expects 1 channel");
  const int w = gray.width(), h = gray.height();
  Image out(w, h, 1);
  auto src = gray.plane(0);
  auto dst = out.plane(0);
  auto at = [&](int x, int y) {
    return src[static_cast<std::size_t>(reflect_index(y, h)) * w +
               reflect_index(x, w)];
  };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double gx = (at(x + 1, y - 1) + 2.0 * at(x + 1, y) + at(x + 1, y + 1)) -
                        (at(x - 1, y - 1) + 2.0 * at(x - 1, y) + at(x - 1, y + 1));
      const double gy = (at(x - 1, y + 1) + 2.0 * at(x, y + 1) + at(x + 1, y + 1)) -
                        (at(x - 1, y - 1) + 2.0 * at(x, y - 1) + at(x + 1, y - 1));
      dst[static_cast<std::size_t>(y) * w + x] = std::hypot(gx, gy);
    }
  return out;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  q = std::clamp(q, 0.0, 1.0);
  const auto idx = static_cast<std::size_t>(
      std::llround(q * static_cast<double>(values.size() - 1)));
  std::nth_element(values.begin(), values.begin() + idx, values.end());
  return values[idx];
}

namespace {

template <typename Sampler>
std::vector<double> resize_plane(const std::vector<double>& src, int sw, int sh,
                                 int dw, int dh, Sampler sample) {
  std::vector<double> dst(static_cast<std::size_t>(dw) * dh);
  const double rx = static_cast<double>(sw) / dw;
  const double ry = static_cast<double>(sh) / dh;
  for (int y = 0; y < dh; ++y)
    for (int x = 0; x < dw; ++x) {
      const double sx = (x + 0.5) * rx - 0.5;
      const double sy = (y + 0.5) * ry - 0.5;
      dst[static_cast<std::size_t>(y) * dw + x] = sample(src, sw, sh, sx, sy);
    }
  return dst;
}

}  // namespace

std::vector<double> resize_plane_bicubic(const std::vector<double>& src, int sw,
                                         int sh, int dw, int dh) {
  return resize_plane(src, sw, sh, dw, dh,
                      [](const std::vector<double>& p, int w, int h, double sx,
                         double sy) { return sample_bicubic(p, w, h, sx, sy); });
}

std::vector<double> resize_plane_bilinear(const std::vector<double>& src, int sw,
                                          int sh, int dw, int dh) {
  return resize_plane(src, sw, sh, dw, dh,
                      [](const std::vector<double>& p, int w, int h, double sx,
                         double sy) { return sample_bilinear(p, w, h, sx, sy); });
}

Image resize_bicubic(const Image& img, int dw, int dh) {
  Image out(dw, dh, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
    std::vector<double> src(img.plane(c).begin(), img.plane(c).end());
    auto dst = resize_plane_bicubic(src, img.width(), img.height(), dw, dh);
    std::copy(dst.begin(), dst.end(), out.plane(c).begin());
  }
  return out;
}

}  // namespace defc::detail
