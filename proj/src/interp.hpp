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
#ifndef DEFC_INTERP_HPP
#define DEFC_INTERP_HPP

#include <algorithm>
#include <cmath>
#include <span>

namespace defc::detail {

// Catmull-Rom weights (cubic convolution with a = -0.5) for taps at
// offsets -1,0,1,2 around the integer base, evaluated at fraction t.
inline void catmull_rom_weights(double t, double w[4]) {
  w[0] = ((-0.5 * t + 1.0) * t - 0.5) * t;
  w[1] = (1.5 * t - 2.5) * t * t + 1.0;
  w[2] = ((-1.5 * t + 2.0) * t + 0.5) * t;
  w[3] = (0.5 * t - 0.5) * t * t;
}

inline void catmull_rom_weights_deriv(double t, double d[4]) {
  d[0] = (-1.5 * t + 2.0) * t - 0.5;
  d[1] = (4.5 * t - 5.0) * t;
  d[2] = (-4.5 * t + 4.0) * t + 0.5;
  d[3] = (1.5 * t - 1.0) * t;
}

inline int clamp_index(int i, int n) {
  return i < 0 ? 0 : (i >= n ? n - 1 : i);
}

struct SampleGrad {
  double value;
  double dx;  // d value / d sample x-coordinate
  double dy;
};

// Bicubic sample of a row-major plane at (sx, sy). Coordinates are clamped
// to the raster; a clamped coordinate has zero derivative in that axis.
inline SampleGrad sample_bicubic_grad(std::span<const double> plane, int w,
                                      int h, double sx, double sy) {
  const bool cx = sx <= 0.0 || sx >= w - 1.0;
  const bool cy = sy <= 0.0 || sy >= h - 1.0;
  sx = std::clamp(sx, 0.0, static_cast<double>(w - 1));
  sy = std::clamp(sy, 0.0, static_cast<double>(h - 1));

  const int bx = std::min(static_cast<int>(std::floor(sx)), w - 1);
  const int by = std::min(static_cast<int>(std::floor(sy)), h - 1);
  const double fx = sx - bx;
  const double fy = sy - by;

  double wx[4], wy[4], dwx[4], dwy[4];
  catmull_rom_weights(fx, wx);
  catmull_rom_weights(fy, wy);
  catmull_rom_weights_deriv(fx, dwx);
  catmull_rom_weights_deriv(fy, dwy);

  int ix[4], iy[4];
  for (int k = 0; k < 4; ++k) {
    ix[k] = clamp_index(bx - 1 + k, w);
    iy[k] = clamp_index(by - 1 + k, h);
  }

  double rows[4], drows[4];
  for (int j = 0; j < 4; ++j) {
    const double* row = plane.data() + static_cast<std::size_t>(iy[j]) * w;
    double v = 0.0, dv = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double tap = row[ix[i]];
      v += wx[i] * tap;
      dv += dwx[i] * tap;
    }
    rows[j] = v;
    drows[j] = dv;
  }

  SampleGrad out{0.0, 0.0, 0.0};
  for (int j = 0; j < 4; ++j) {
    out.value += wy[j] * rows[j];
    out.dx += wy[j] * drows[j];
    out.dy += dwy[j] * rows[j];
  }
  if (cx) out.dx = 0.0;
  if (cy) out.dy = 0.0;
  return out;
}

inline double sample_bicubic(std::span<const double> plane, int w, int h,
                             double sx, double sy) {
  sx = std::clamp(sx, 0.0, static_cast<double>(w - 1));
  sy = std::clamp(sy, 0.0, static_cast<double>(h - 1));
  const int bx = std::min(static_cast<int>(std::floor(sx)), w - 1);
  const int by = std::min(static_cast<int>(std::floor(sy)), h - 1);
  const double fx = sx - bx;
  const double fy = sy - by;

  double wx[4], wy[4];
  catmull_rom_weights(fx, wx);
  catmull_rom_weights(fy, wy);

  double acc = 0.0;
  for (int j = 0; j < 4; ++j) {
    const double* row =
        plane.data() + static_cast<std::size_t>(clamp_index(by - 1 + j, h)) * w;
    double v = 0.0;
    for (int i = 0; i < 4; ++i) v += wx[i] * row[clamp_index(bx - 1 + i, w)];
    acc += wy[j] * v;
  }
  return acc;
}

inline double sample_bilinear(std::span<const double> plane, int w, int h,
                              double sx, double sy) {
  sx = std::clamp(sx, 0.0, static_cast<double>(w - 1));
  sy = std::clamp(sy, 0.0, static_cast<double>(h - 1));
  const int x0 = std::min(static_cast<int>(std::floor(sx)), w - 1);
  const int y0 = std::min(static_cast<int>(std::floor(sy)), h - 1);
  const int x1 = std::min(x0 + 1, w - 1);
  const int y1 = std::min(y0 + 1, h - 1);
  const double fx = sx - x0;
  const double fy = sy - y0;
  const double a = plane[static_cast<std::size_t>(y0) * w + x0];
  const double b = plane[static_cast<std::size_t>(y0) * w + x1];
  const double c = plane[static_cast<std::size_t>(y1) * w + x0];
  const double d = plane[static_cast<std::size_t>(y1) * w + x1];
  return (1 - fy) * ((1 - fx) * a + fx * b) + fy * ((1 - fx) * c + fx * d);
}

}  // namespace defc::detail

#endif
