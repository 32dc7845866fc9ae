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
#ifndef DEFC_WAVELET_HPP
#define DEFC_WAVELET_HPP

#include <cstddef>
#include <vector>

#include "defc/image.hpp"

namespace defc {

/// One rectangular coefficient array of a pyramid.
struct Subband {
  int width = 0;
  int height = 0;
  std::vector<double> coeff;

  std::size_t size() const { return coeff.size(); }
};

/// Detail subbands of one decomposition level. `hl` is high-pass along x,
/// `lh` high-pass along y, `hh` high-pass in both.
struct WaveletLevel {
  Subband hl, lh, hh;
};

/// Orthonormal multilevel Haar decomposition of one channel.
/// levels[0] is the finest level; `ll` is the top-level approximation.
/// Odd extents use half-sample symmetric extension at the tail; the
/// duplicated pair's approximation coefficient is renormalized (the odd
/// tail sample passes through unscaled), which keeps the transform an
/// isometry so discarded-coefficient energy equals reconstruction SSD.
struct ChannelPyramid {
  int image_width = 0;
  int image_height = 0;
  Subband ll;
  std::vector<WaveletLevel> levels;
};

struct WaveletPyramid {
  int width = 0;
  int height = 0;
  std::vector<ChannelPyramid> channel;

  int levels() const {
    return channel.empty() ? 0 : static_cast<int>(channel[0].levels.size());
  }
  std::size_t coefficient_count() const;
};

/// Kept-coefficient budget. A compression ratio of N:1 corresponds to
/// kept_fraction = 1/N; the number of retained coefficients out of `total`
/// is ceil(kept_fraction * total), never below one.
struct ThresholdBudget {
  double kept_fraction = 1.0;

  static ThresholdBudget from_ratio(double ratio) { return {1.0 / ratio}; }
  std::size_t kept_count(std::size_t total) const;
};

struct ThresholdResult {
  Image decoded;
  std::size_t kept = 0;
  std::size_t total = 0;

  double kept_fraction() const {
    return total ? static_cast<double>(kept) / static_cast<double>(total) : 0.0;
  }
};

/// Forward multilevel transform. Requires levels >= 1 and both image
/// extents >= 2^levels; throws std::invalid_argument otherwise.
WaveletPyramid dwt_forward(const Image& img, int levels);

/// Inverse transform. Output is not clamped; the pipeline clamps only at
/// its final output. Throws std::invalid_argument on malformed shapes.
Image dwt_inverse(const WaveletPyramid& pyr);

/// Keep the budgeted number of largest-magnitude coefficients across all
/// subbands and channels jointly (the approximation band competes like any
/// other); zero the rest and reconstruct. Ties in magnitude keep the lower
/// linear index.
ThresholdResult compress_global_threshold(const Image& img,
                                          const ThresholdBudget& budget,
                                          int levels = 4);

/// Keep the approximation band in full and distribute the remaining budget
/// across detail subbands proportionally to subband energy
/// (K_s = max(1, round(K_detail * E_s / E_total))), then keep the top-K_s
/// magnitudes per subband. Same deterministic tie rule as the global codec.
ThresholdResult compress_subband_threshold(const Image& img,
                                           const ThresholdBudget& budget,
                                           int levels = 4);

}  // namespace defc

#endif
