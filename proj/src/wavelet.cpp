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
#include "defc/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace defc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// 1D orthonormal Haar step. n -> ceil(n/2) approx + floor(n/2) detail.
// For odd n the tail sample has no partner and passes through to the
// approximation band unscaled, keeping the step an isometry.
void haar_forward_1d(const double* x, int n, double* approx, double* detail) {
  const int pairs = n / 2;
  for (int i = 0; i < pairs; ++i) {
    approx[i] = (x[2 * i] + x[2 * i + 1]) * kInvSqrt2;
    detail[i] = (x[2 * i] - x[2 * i + 1]) * kInvSqrt2;
  }
  if (n & 1) approx[pairs] = x[n - 1];
}

void haar_inverse_1d(const double* approx, const double* detail, int n,
                     double* x) {
  const int pairs = n / 2;
  for (int i = 0; i < pairs; ++i) {
    x[2 * i] = (approx[i] + detail[i]) * kInvSqrt2;
    x[2 * i + 1] = (approx[i] - detail[i]) * kInvSqrt2;
  }
  if (n & 1) x[n - 1] = approx[pairs];
}

struct LevelDims {
  int w, h;        // input extents of this level
  int wa, wd;      // approx / detail widths
  int ha, hd;      // approx / detail heights
};

LevelDims level_dims(int w, int h) {
  return {w, h, (w + 1) / 2, w / 2, (h + 1) / 2, h / 2};
}

// One 2D analysis step: rows then columns, scattering into ll/hl/lh/hh.
void analyze2d(const std::vector<double>& src, const LevelDims& d,
               std::vector<double>& ll, Subband& hl, Subband& lh, Subband& hh) {
  // Row pass: [approx | detail] per row.
  std::vector<double> rowbuf(static_cast<std::size_t>(d.wa + d.wd) * d.h);
  for (int y = 0; y < d.h; ++y) {
    const double* in = src.data() + static_cast<std::size_t>(y) * d.w;
    double* a = rowbuf.data() + static_cast<std::size_t>(y) * (d.wa + d.wd);
    haar_forward_1d(in, d.w, a, a + d.wa);
  }
  // Column pass on each half.
  ll.assign(static_cast<std::size_t>(d.wa) * d.ha, 0.0);
  hl.width = d.wd; hl.height = d.ha; hl.coeff.assign(hl.size() ? hl.coeff.size() : 0, 0.0);
  hl.coeff.assign(static_cast<std::size_t>(d.wd) * d.ha, 0.0);
  lh.width = d.wa; lh.height = d.hd;
  lh.coeff.assign(static_cast<std::size_t>(d.wa) * d.hd, 0.0);
  hh.width = d.wd; hh.height = d.hd;
  hh.coeff.assign(static_cast<std::size_t>(d.wd) * d.hd, 0.0);

  std::vector<double> col(d.h), ca(d.ha), cd(d.hd);
  const int stride = d.wa + d.wd;
  for (int x = 0; x < d.wa; ++x) {
    for (int y = 0; y < d.h; ++y) col[y] = rowbuf[static_cast<std::size_t>(y) * stride + x];
    haar_forward_1d(col.data(), d.h, ca.data(), cd.data());
    for (int y = 0; y < d.ha; ++y) ll[static_cast<std::size_t>(y) * d.wa + x] = ca[y];
    for (int y = 0; y < d.hd; ++y) lh.coeff[static_cast<std::size_t>(y) * d.wa + x] = cd[y];
  }
  for (int x = 0; x < d.wd; ++x) {
    for (int y = 0; y < d.h; ++y)
      col[y] = rowbuf[static_cast<std::size_t>(y) * stride + d.wa + x];
    haar_forward_1d(col.data(), d.h, ca.data(), cd.data());
    for (int y = 0; y < d.ha; ++y) hl.coeff[static_cast<std::size_t>(y) * d.wd + x] = ca[y];
    for (int y = 0; y < d.hd; ++y) hh.coeff[static_cast<std::size_t>(y) * d.wd + x] = cd[y];
  }
}

void synthesize2d(const std::vector<double>& ll, const Subband& hl,
                  const Subband& lh, const Subband& hh, const LevelDims& d,
                  std::vector<double>& dst) {
  const int stride = d.wa + d.wd;
  std::vector<double> rowbuf(static_cast<std::size_t>(stride) * d.h);
  std::vector<double> ca(d.ha), cd(d.hd), col(d.h);
  for (int x = 0; x < d.wa; ++x) {
    for (int y = 0; y < d.ha; ++y) ca[y] = ll[static_cast<std::size_t>(y) * d.wa + x];
    for (int y = 0; y < d.hd; ++y) cd[y] = lh.coeff[static_cast<std::size_t>(y) * d.wa + x];
    haar_inverse_1d(ca.data(), cd.data(), d.h, col.data());
    for (int y = 0; y < d.h; ++y) rowbuf[static_cast<std::size_t>(y) * stride + x] = col[y];
  }
  for (int x = 0; x < d.wd; ++x) {
    for (int y = 0; y < d.ha; ++y) ca[y] = hl.coeff[static_cast<std::size_t>(y) * d.wd + x];
    for (int y = 0; y < d.hd; ++y) cd[y] = hh.coeff[static_cast<std::size_t>(y) * d.wd + x];
    haar_inverse_1d(ca.data(), cd.data(), d.h, col.data());
    for (int y = 0; y < d.h; ++y)
      rowbuf[static_cast<std::size_t>(y) * stride + d.wa + x] = col[y];
  }
  dst.assign(static_cast<std::size_t>(d.w) * d.h, 0.0);
  std::vector<double> a(d.wa), dt(d.wd);
  for (int y = 0; y < d.h; ++y) {
    const double* row = rowbuf.data() + static_cast<std::size_t>(y) * stride;
    std::copy(row, row + d.wa, a.begin());
    std::copy(row + d.wa, row + stride, dt.begin());
    haar_inverse_1d(a.data(), dt.data(), d.w, dst.data() + static_cast<std::size_t>(y) * d.w);
  }
}

void check_levels(int w, int h, int levels) {
  if (levels < 1) throw std::invalid_argument("dwt: levels must be >= 1");
  if (w < (1 << levels) || h < (1 << levels))
    throw std::invalid_argument("dwt: levels too large for image size");
}

// Canonical coefficient ordering used for deterministic tie-breaking:
// per channel, approximation band first, then levels from coarsest to
// finest, HL then LH then HH, each row-major.
template <typename Fn>
void for_each_band(WaveletPyramid& pyr, Fn fn) {
  for (auto& ch : pyr.channel) {
    fn(ch.ll, /*is_ll=*/true);
    for (auto it = ch.levels.rbegin(); it != ch.levels.rend(); ++it) {
      fn(it->hl, false);
      fn(it->lh, false);
      fn(it->hh, false);
    }
  }
}

}  // namespace

std::size_t WaveletPyramid::coefficient_count() const {
  std::size_t n = 0;
  for (const auto& ch : channel) {
    n += ch.ll.size();
    for (const auto& lev : ch.levels)
      n += lev.hl.size() + lev.lh.size() + lev.hh.size();
  }
  return n;
}

std::size_t ThresholdBudget::kept_count(std::size_t total) const {
  if (!(kept_fraction > 0.0) || kept_fraction > 1.0)
    throw std::invalid_argument("ThresholdBudget: kept_fraction must be in (0,1]");
  const auto k = static_cast<std::size_t>(
      std::ceil(kept_fraction * static_cast<double>(total)));
  return std::max<std::size_t>(1, std::min(k, total));
}

WaveletPyramid dwt_forward(const Image& img, int levels) {
  check_levels(img.width(), img.height(), levels);
  WaveletPyramid pyr;
  pyr.width = img.width();
  pyr.height = img.height();
  pyr.channel.resize(img.channels());

  for (int c = 0; c < img.channels(); ++c) {
    auto& ch = pyr.channel[c];
    ch.image_width = img.width();
    ch.image_height = img.height();
    ch.levels.resize(levels);

    std::vector<double> cur(img.plane(c).begin(), img.plane(c).end());
    int w = img.width(), h = img.height();
    for (int lev = 0; lev < levels; ++lev) {
      const LevelDims d = level_dims(w, h);
      std::vector<double> ll;
      analyze2d(cur, d, ll, ch.levels[lev].hl, ch.levels[lev].lh,
                ch.levels[lev].hh);
      cur = std::move(ll);
      w = d.wa;
      h = d.ha;
    }
    ch.ll.width = w;
    ch.ll.height = h;
    ch.ll.coeff = std::move(cur);
  }
  return pyr;
}

Image dwt_inverse(const WaveletPyramid& pyr) {
  if (pyr.channel.empty() || pyr.width <= 0 || pyr.height <= 0)
    throw std::invalid_argument("dwt_inverse: empty pyramid");
  const int levels = pyr.levels();

  Image out(pyr.width, pyr.height, static_cast<int>(pyr.channel.size()));
  for (std::size_t c = 0; c < pyr.channel.size(); ++c) {
    const auto& ch = pyr.channel[c];
    if (static_cast<int>(ch.levels.size()) != levels)
      throw std::invalid_argument("dwt_inverse: inconsistent level counts");

    // Recompute the per-level dims from the image extents and validate.
    std::vector<LevelDims> dims;
    int w = pyr.width, h = pyr.height;
    for (int lev = 0; lev < levels; ++lev) {
      dims.push_back(level_dims(w, h));
      w = dims.back().wa;
      h = dims.back().ha;
    }
    if (ch.ll.width != w || ch.ll.height != h ||
        ch.ll.size() != static_cast<std::size_t>(w) * h)
      throw std::invalid_argument("dwt_inverse: malformed pyramid shape");
    for (int lev = 0; lev < levels; ++lev) {
      const auto& d = dims[lev];
      const auto& L = ch.levels[lev];
      if (L.hl.width != d.wd || L.hl.height != d.ha || L.lh.width != d.wa ||
          L.lh.height != d.hd || L.hh.width != d.wd || L.hh.height != d.hd ||
          L.hl.size() != static_cast<std::size_t>(d.wd) * d.ha ||
          L.lh.size() != static_cast<std::size_t>(d.wa) * d.hd ||
          L.hh.size() != static_cast<std::size_t>(d.wd) * d.hd)
        throw std::invalid_argument("dwt_inverse: malformed pyramid shape");
    }

    std::vector<double> cur = ch.ll.coeff;
    for (int lev = levels - 1; lev >= 0; --lev) {
      std::vector<double> next;
      synthesize2d(cur, ch.levels[lev].hl, ch.levels[lev].lh, ch.levels[lev].hh,
                   dims[lev], next);
      cur = std::move(next);
    }
    std::copy(cur.begin(), cur.end(), out.plane(static_cast<int>(c)).begin());
  }
  return out;
}

namespace {

struct CoeffRef {
  double* value;
  std::size_t linear;  // position in the canonical ordering
};

std::vector<CoeffRef> flatten(WaveletPyramid& pyr, std::vector<bool>* is_ll_flag) {
  std::vector<CoeffRef> refs;
  refs.reserve(pyr.coefficient_count());
  if (is_ll_flag) is_ll_flag->reserve(pyr.coefficient_count());
  std::size_t linear = 0;
  for_each_band(pyr, [&](Subband& band, bool is_ll) {
    for (auto& v : band.coeff) {
      refs.push_back({&v, linear++});
      if (is_ll_flag) is_ll_flag->push_back(is_ll);
    }
  });
  return refs;
}

// Strict total order: larger magnitude first, lower linear index on ties.
bool magnitude_before(const CoeffRef& a, const CoeffRef& b) {
  const double ma = std::fabs(*a.value), mb = std::fabs(*b.value);
  if (ma != mb) return ma > mb;
  return a.linear < b.linear;
}

}  // namespace

ThresholdResult compress_global_threshold(const Image& img,
                                          const ThresholdBudget& budget,
                                          int levels) {
  WaveletPyramid pyr = dwt_forward(img, levels);
  auto refs = flatten(pyr, nullptr);
  const std::size_t total = refs.size();
  const std::size_t keep = budget.kept_count(total);

  if (keep < total) {
    std::nth_element(refs.begin(), refs.begin() + keep, refs.end(),
                     magnitude_before);
    for (std::size_t i = keep; i < total; ++i) *refs[i].value = 0.0;
  }
  return {dwt_inverse(pyr), keep, total};
}

ThresholdResult compress_subband_threshold(const Image& img,
                                           const ThresholdBudget& budget,
                                           int levels) {
  WaveletPyramid pyr = dwt_forward(img, levels);
  const std::size_t total = pyr.coefficient_count();
  const std::size_t target = budget.kept_count(total);

  std::size_t ll_count = 0;
  double detail_energy = 0.0;
  std::vector<Subband*> details;
  for_each_band(pyr, [&](Subband& band, bool is_ll) {
    if (is_ll) {
      ll_count += band.size();
    } else {
      details.push_back(&band);
      for (double v : band.coeff) detail_energy += v * v;
    }
  });

  const std::size_t detail_budget = target > ll_count ? target - ll_count : 0;
  std::size_t kept = ll_count;
  for (Subband* band : details) {
    double energy = 0.0;
    for (double v : band->coeff) energy += v * v;
    std::size_t k =
        detail_energy > 0.0
            ? static_cast<std::size_t>(std::max<long long>(
                  1, std::llround(static_cast<double>(detail_budget) * energy /
                                  detail_energy)))
            : 1;
    k = std::min(k, band->size());
    kept += k;
    if (k == band->size()) continue;

    std::vector<CoeffRef> refs;
    refs.reserve(band->size());
    std::size_t linear = 0;
    for (auto& v : band->coeff) refs.push_back({&v, linear++});
    std::nth_element(refs.begin(), refs.begin() + k, refs.end(),
                     magnitude_before);
    for (std::size_t i = k; i < refs.size(); ++i) *refs[i].value = 0.0;
  }
  return {dwt_inverse(pyr), kept, total};
}

}  // namespace defc
