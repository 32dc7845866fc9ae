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
#include "defc/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace defc {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error("image i/o: " + what + ": " + path.string());
}

std::uint8_t quantize(double v) {
  v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  return static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5));
}

// ---------------------------------------------------------------- PNG ----

Image load_png(std::FILE* fp, const std::filesystem::path& path) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "png init failed");
  }

  std::vector<std::uint8_t> raw;
  png_uint_32 w = 0, h = 0;
  int bit_depth = 0, channels = 0;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unreadable file");
  }

  png_init_io(png, fp);
  png_read_info(png, info);

  w = png_get_image_width(png, info);
  h = png_get_image_height(png, info);
  bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_strip_alpha(png);
#if defined(PNG_READ_SWAP_SUPPORTED)
  if (bit_depth == 16) png_set_swap(png);  // file is big-endian
#endif
  png_read_update_info(png, info);

  bit_depth = png_get_bit_depth(png, info);
  channels = png_get_channels(png, info);
  if (w == 0 || h == 0) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "zero-size raster");
  }
  if (channels != 1 && channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unsupported channel layout");
  }

  const std::size_t rowbytes = png_get_rowbytes(png, info);
  raw.resize(rowbytes * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = raw.data() + y * rowbytes;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  Image img(static_cast<int>(w), static_cast<int>(h), channels);
  const double scale = bit_depth == 16 ? 1.0 / 65535.0 : 1.0 / 255.0;
  for (int c = 0; c < channels; ++c) {
    auto plane = img.plane(c);
    for (png_uint_32 y = 0; y < h; ++y) {
      const std::uint8_t* row = raw.data() + y * rowbytes;
      for (png_uint_32 x = 0; x < w; ++x) {
        double v;
        if (bit_depth == 16) {
          std::uint16_t s;
          std::memcpy(&s, row + (x * channels + c) * 2, 2);
          v = s * scale;
        } else {
          v = row[x * channels + c] * scale;
        }
        plane[y * w + x] = v;
      }
    }
  }
  return img;
}

void save_png(const Image& img, const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) fail(path, "unwritable path");

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "png init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "png write failed");
  }

  const int w = img.width(), h = img.height(), ch = img.channels();
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, w, h, 8,
               ch == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < ch; ++c) row[x * ch + c] = quantize(img.at(c, x, y));
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// ---------------------------------------------------------------- PNM ----

int pnm_token(std::FILE* fp) {
  // Skips whitespace and '#' comments, then parses a nonnegative integer.
  int c = std::fgetc(fp);
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = std::fgetc(fp);
    } else if (std::isspace(c)) {
      c = std::fgetc(fp);
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) return -1;
  long v = 0;
  while (c != EOF && std::isdigit(c)) {
    v = v * 10 + (c - '0');
    if (v > 1 << 30) return -1;
    c = std::fgetc(fp);
  }
  return static_cast<int>(v);
}

Image load_pnm(std::FILE* fp, const std::filesystem::path& path) {
  const int magic0 = std::fgetc(fp);
  const int magic1 = std::fgetc(fp);
  if (magic0 != 'P' || (magic1 != '5' && magic1 != '6'))
    fail(path, "unsupported format");
  const int channels = magic1 == '6' ? 3 : 1;

  const int w = pnm_token(fp);
  const int h = pnm_token(fp);
  const int maxval = pnm_token(fp);
  if (w <= 0 || h <= 0) fail(path, "zero-size raster");
  if (maxval != 255 && maxval != 65535) fail(path, "unsupported format");

  const int bytes_per_sample = maxval == 65535 ? 2 : 1;
  const std::size_t count =
      static_cast<std::size_t>(w) * h * channels * bytes_per_sample;
  std::vector<std::uint8_t> raw(count);
  if (std::fread(raw.data(), 1, count, fp) != count)
    fail(path, "unreadable file");

  Image img(w, h, channels);
  const double scale = 1.0 / maxval;
  for (int c = 0; c < channels; ++c) {
    auto plane = img.plane(c);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        const std::size_t i =
            (static_cast<std::size_t>(y) * w + x) * channels + c;
        double v;
        if (bytes_per_sample == 2)
          v = ((raw[i * 2] << 8) | raw[i * 2 + 1]) * scale;  // big-endian
        else
          v = raw[i] * scale;
        plane[static_cast<std::size_t>(y) * w + x] = v;
      }
  }
  return img;
}

void save_pnm(const Image& img, const std::filesystem::path& path, bool color) {
  if (!color && img.channels() != 1)
    throw std::invalid_argument("save_image: .pgm needs a 1-channel image");
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) fail(path, "unwritable path");
  const int w = img.width(), h = img.height();
  std::fprintf(fp.get(), "P%c\n%d %d\n255\n", color ? '6' : '5', w, h);
  std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * (color ? 3 : 1));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (color) {
        for (int c = 0; c < 3; ++c)
          row[x * 3 + c] = quantize(img.at(img.channels() == 3 ? c : 0, x, y));
      } else {
        row[x] = quantize(img.at(0, x, y));
      }
    }
    if (std::fwrite(row.data(), 1, row.size(), fp.get()) != row.size())
      fail(path, "write failed");
  }
}

}  // namespace

Image load_image(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) fail(path, "unreadable file");

  std::uint8_t magic[8] = {};
  const std::size_t got = std::fread(magic, 1, sizeof magic, fp.get());
  std::rewind(fp.get());
  if (got >= 8 && png_sig_cmp(magic, 0, 8) == 0) return load_png(fp.get(), path);
  if (got >= 2 && magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6'))
    return load_pnm(fp.get(), path);
  fail(path, "unsupported format");
}

void save_image(const Image& img, const std::filesystem::path& path) {
  if (img.empty()) throw std::invalid_argument("save_image: empty image");
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(c));
  if (ext == ".png")
    save_png(img, path);
  else if (ext == ".pgm")
    save_pnm(img, path, /*color=*/false);
  else if (ext == ".ppm")
    save_pnm(img, path, /*color=*/true);
  else
    throw std::invalid_argument("save_image: unsupported extension " + ext);
}

}  // namespace defc
