// Copyright 2026 The stereobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <png.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>
#include <string_view>

#include "stereobench/codecs.hpp"
#include "stereobench/error.hpp"

namespace stereobench {

namespace {

// ---------------------------------------------------------------------------
// Header tokenizer shared by PFM and PNM.

class HeaderReader {
 public:
  explicit HeaderReader(ByteView bytes) : bytes_(bytes) {}

  // Next whitespace-delimited token; '#' comments are skipped when allowed.
  std::string_view token(bool allow_comments) {
    for (;;) {
      while (pos_ < bytes_.size() && is_space(bytes_[pos_])) ++pos_;
      if (allow_comments && pos_ < bytes_.size() && bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !is_space(bytes_[pos_])) ++pos_;
    return {reinterpret_cast<const char*>(bytes_.data()) + start, pos_ - start};
  }

  // Consumes the single whitespace byte that ends a binary header.
  bool end_header() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) return false;
    ++pos_;
    return true;
  }

  std::size_t pos() const { return pos_; }

 private:
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  ByteView bytes_;
  std::size_t pos_ = 0;
};

int parse_positive_int(std::string_view tok, ErrorCode code,
                       const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0)
    raise(code, std::string(what) + " must be a positive integer, got '" +
                    std::string(tok) + "'");
  return v;
}

std::uint32_t load_u32(const std::uint8_t* p, bool little_endian) {
  if (little_endian)
    return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 |
           std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
  return std::uint32_t{p[3]} | std::uint32_t{p[2]} << 8 |
         std::uint32_t{p[1]} << 16 | std::uint32_t{p[0]} << 24;
}

void store_u32(std::uint8_t* p, std::uint32_t v, bool little_endian) {
  for (int i = 0; i < 4; ++i) {
    const int shift = little_endian ? 8 * i : 8 * (3 - i);
    p[i] = static_cast<std::uint8_t>(v >> shift);
  }
}

std::string format_scale(float s) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), s);
  std::string out(buf, ptr);
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

Bytes encode_pfm(const FloatArray& a, bool little_endian, float scale) {
  if (a.channels != 1 && a.channels != 3)
    raise(ErrorCode::kInvalidArgument, "PFM supports 1 or 3 channels");
  if (a.height < 1 || a.width < 1 ||
      a.data.size() != static_cast<std::size_t>(a.height) * a.width * a.channels)
    raise(ErrorCode::kShapeMismatch, "PFM array shape does not match data");
  if (!(scale > 0.0f) || !std::isfinite(scale))
    raise(ErrorCode::kZeroScale, "PFM scale must be positive and finite");

  std::string header = a.channels == 3 ? "PF\n" : "Pf\n";
  header += std::to_string(a.width) + " " + std::to_string(a.height) + "\n";
  header += format_scale(little_endian ? -scale : scale) + "\n";

  Bytes out(header.begin(), header.end());
  const std::size_t row = static_cast<std::size_t>(a.width) * a.channels;
  out.resize(header.size() + a.data.size() * 4);
  std::uint8_t* dst = out.data() + header.size();
  for (int y = a.height - 1; y >= 0; --y) {
    const float* src = a.data.data() + static_cast<std::size_t>(y) * row;
    for (std::size_t i = 0; i < row; ++i, dst += 4)
      store_u32(dst, std::bit_cast<std::uint32_t>(src[i]), little_endian);
  }
  return out;
}

// ---------------------------------------------------------------------------
// libpng plumbing.

struct PngReadState {
  ByteView bytes;
  std::size_t pos = 0;
};

[[noreturn]] void png_error_fn(png_structp png, png_const_charp msg) {
  auto* text = static_cast<std::string*>(png_get_error_ptr(png));
  if (text) *text = msg;
  png_longjmp(png, 1);
}

void png_warning_fn(png_structp, png_const_charp) {}

void png_read_fn(png_structp png, png_bytep out, png_size_t n) {
  auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (st->pos + n > st->bytes.size()) png_error(png, "unexpected end of data");
  std::memcpy(out, st->bytes.data() + st->pos, n);
  st->pos += n;
}

void png_write_fn(png_structp png, png_bytep data, png_size_t n) {
  auto* out = static_cast<Bytes*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + n);
}

void png_flush_fn(png_structp) {}

struct PngHeader {
  int bit_depth = 0;
  int color_type = 0;
};

// Decodes a PNG. When `raw` is set no colour transforms are applied and the
// caller receives the stored channel layout (used by the KITTI codec to
// reject non-conforming files rather than silently converting them).
Raster decode_png(ByteView bytes, bool raw, PngHeader* header_out) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0)
    raise(ErrorCode::kMalformedHeader, "not a PNG file");

  std::string err;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err,
                                           png_error_fn, png_warning_fn);
  if (!png) raise(ErrorCode::kDecode, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    raise(ErrorCode::kDecode, "png_create_info_struct failed");
  }

  PngReadState state{bytes, 0};
  Raster r;
  std::vector<png_bytep> rows;
  Bytes buffer;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    raise(ErrorCode::kDecode, "PNG decode failed: " + err);
  }

  png_set_read_fn(png, &state, png_read_fn);
  png_read_info(png, info);

  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (header_out) *header_out = {bit_depth, color_type};

  if (!raw) {
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
      png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  }
  if (bit_depth == 16) png_set_swap(png);  // host little-endian samples
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const int channels = png_get_channels(png, info);
  const int depth = png_get_bit_depth(png, info);
  r.width = static_cast<int>(png_get_image_width(png, info));
  r.height = static_cast<int>(png_get_image_height(png, info));
  r.channels = channels;
  r.bit_depth = depth;

  const std::size_t rowbytes = png_get_rowbytes(png, info);
  buffer.resize(rowbytes * r.height);
  rows.resize(r.height);
  for (int y = 0; y < r.height; ++y) rows[y] = buffer.data() + rowbytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  if (depth != 8 && depth != 16)
    raise(ErrorCode::kUnsupportedFormat,
          "unsupported PNG bit depth " + std::to_string(depth));
  const std::size_t n = static_cast<std::size_t>(r.width) * r.height * channels;
  r.samples.resize(n);
  for (int y = 0; y < r.height; ++y) {
    const std::uint8_t* src = rows[y];
    std::uint16_t* dst =
        r.samples.data() + static_cast<std::size_t>(y) * r.width * channels;
    const std::size_t count = static_cast<std::size_t>(r.width) * channels;
    if (depth == 16) {
      for (std::size_t i = 0; i < count; ++i)
        dst[i] = static_cast<std::uint16_t>(src[2 * i] | (src[2 * i + 1] << 8));
    } else {
      for (std::size_t i = 0; i < count; ++i) dst[i] = src[i];
    }
  }
  return r;
}

void check_raster(const Raster& r) {
  if (r.height < 1 || r.width < 1)
    raise(ErrorCode::kInvalidArgument, "raster dimensions must be >= 1");
  if (r.channels != 1 && r.channels != 3)
    raise(ErrorCode::kInvalidArgument, "raster must have 1 or 3 channels");
  if (r.bit_depth != 8 && r.bit_depth != 16)
    raise(ErrorCode::kInvalidArgument, "raster bit depth must be 8 or 16");
  if (r.samples.size() !=
      static_cast<std::size_t>(r.height) * r.width * r.channels)
    raise(ErrorCode::kShapeMismatch, "raster sample count mismatch");
  if (r.bit_depth == 8 &&
      std::any_of(r.samples.begin(), r.samples.end(),
                  [](std::uint16_t s) { return s > 255; }))
    raise(ErrorCode::kInvalidArgument, "8-bit raster sample exceeds 255");
}

std::string lower_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

// ---------------------------------------------------------------------------
// PFM

PfmData read_pfm(ByteView bytes) {
  HeaderReader hr(bytes);
  const std::string_view magic = hr.token(false);
  int channels = 0;
  if (magic == "Pf")
    channels = 1;
  else if (magic == "PF")
    channels = 3;
  else
    raise(ErrorCode::kMalformedHeader,
          "PFM magic must be 'Pf' or 'PF', got '" + std::string(magic) + "'");

  const int width =
      parse_positive_int(hr.token(false), ErrorCode::kMalformedHeader, "PFM width");
  const int height =
      parse_positive_int(hr.token(false), ErrorCode::kMalformedHeader, "PFM height");

  const std::string_view scale_tok = hr.token(false);
  float scale = 0.0f;
  auto [ptr, ec] = std::from_chars(scale_tok.data(),
                                   scale_tok.data() + scale_tok.size(), scale);
  if (ec != std::errc{} || ptr != scale_tok.data() + scale_tok.size() ||
      !std::isfinite(scale))
    raise(ErrorCode::kMalformedHeader,
          "PFM scale is not a number: '" + std::string(scale_tok) + "'");
  if (scale == 0.0f) raise(ErrorCode::kZeroScale, "PFM scale is zero");
  if (!hr.end_header())
    raise(ErrorCode::kMalformedHeader, "PFM header not terminated");

  const bool little_endian = scale < 0.0f;
  const std::size_t row = static_cast<std::size_t>(width) * channels;
  const std::size_t count = row * height;
  const std::size_t payload = bytes.size() - hr.pos();
  if (payload / 4 < count)
    raise(ErrorCode::kTruncatedPayload,
          "PFM payload holds " + std::to_string(payload) + " bytes, need " +
              std::to_string(count * 4));

  PfmData out;
  out.scale = std::fabs(scale);
  out.array.height = height;
  out.array.width = width;
  out.array.channels = channels;
  out.array.data.resize(count);
  const std::uint8_t* src = bytes.data() + hr.pos();
  for (int y = height - 1; y >= 0; --y) {
    float* dst = out.array.data.data() + static_cast<std::size_t>(y) * row;
    for (std::size_t i = 0; i < row; ++i, src += 4)
      dst[i] = std::bit_cast<float>(load_u32(src, little_endian));
  }
  return out;
}

Bytes write_pfm(const FloatArray& a, bool little_endian, float scale) {
  for (float v : a.data)
    if (!std::isfinite(v))
      raise(ErrorCode::kNonFinite, "PFM writer rejects non-finite values");
  return encode_pfm(a, little_endian, scale);
}

// ---------------------------------------------------------------------------
// PNG

Raster read_png(ByteView bytes) { return decode_png(bytes, false, nullptr); }

Bytes write_png(const Raster& r) {
  check_raster(r);
  Bytes out;
  std::string err;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err,
                                            png_error_fn, png_warning_fn);
  if (!png) raise(ErrorCode::kDecode, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    raise(ErrorCode::kDecode, "png_create_info_struct failed");
  }

  const std::size_t row_samples = static_cast<std::size_t>(r.width) * r.channels;
  const std::size_t rowbytes = row_samples * (r.bit_depth / 8);
  Bytes buffer(rowbytes * r.height);
  for (int y = 0; y < r.height; ++y) {
    std::uint8_t* dst = buffer.data() + rowbytes * y;
    const std::uint16_t* src = r.samples.data() + row_samples * y;
    for (std::size_t i = 0; i < row_samples; ++i) {
      if (r.bit_depth == 16) {
        dst[2 * i] = static_cast<std::uint8_t>(src[i] >> 8);
        dst[2 * i + 1] = static_cast<std::uint8_t>(src[i] & 0xff);
      } else {
        dst[i] = static_cast<std::uint8_t>(src[i]);
      }
    }
  }
  std::vector<png_bytep> rows(r.height);
  for (int y = 0; y < r.height; ++y) rows[y] = buffer.data() + rowbytes * y;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    raise(ErrorCode::kDecode, "PNG encode failed: " + err);
  }
  png_set_write_fn(png, &out, png_write_fn, png_flush_fn);
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, r.width, r.height, r.bit_depth,
               r.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

DisparityMap read_kitti_disparity_png(ByteView bytes) {
  PngHeader header;
  const Raster r = decode_png(bytes, true, &header);
  if (header.bit_depth != 16 || header.color_type != PNG_COLOR_TYPE_GRAY)
    raise(ErrorCode::kUnsupportedFormat,
          "KITTI disparity must be 16-bit single-channel PNG (got depth " +
              std::to_string(header.bit_depth) + ", colour type " +
              std::to_string(header.color_type) + ")");
  DisparityMap d(r.height, r.width, 0.0f, false);
  for (int y = 0; y < r.height; ++y)
    for (int x = 0; x < r.width; ++x) {
      const std::uint16_t v = r.at(y, x);
      if (v == 0) continue;
      d.at(y, x) = static_cast<float>(v) / 256.0f;
      d.set_valid(y, x, true);
    }
  return d;
}

Bytes write_kitti_disparity_png(const DisparityMap& d) {
  if (d.empty()) raise(ErrorCode::kInvalidArgument, "empty disparity map");
  Raster r;
  r.height = d.height();
  r.width = d.width();
  r.channels = 1;
  r.bit_depth = 16;
  r.samples.assign(static_cast<std::size_t>(r.height) * r.width, 0);
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x) {
      if (!d.valid(y, x)) continue;
      const float v = d.at(y, x);
      if (!std::isfinite(v))
        raise(ErrorCode::kNonFinite, "non-finite valid disparity at (" +
                                         std::to_string(y) + ", " +
                                         std::to_string(x) + ")");
      if (v < 0.0f)
        raise(ErrorCode::kInvalidArgument,
              "KITTI PNG cannot store negative disparity " + std::to_string(v));
      const double stored = std::clamp(std::round(static_cast<double>(v) * 256.0),
                                       1.0, 65535.0);
      r.samples[static_cast<std::size_t>(y) * r.width + x] =
          static_cast<std::uint16_t>(stored);
    }
  return write_png(r);
}

// ---------------------------------------------------------------------------
// PNM

Raster read_pnm(ByteView bytes) {
  HeaderReader hr(bytes);
  const std::string_view magic = hr.token(true);
  Raster r;
  if (magic == "P5")
    r.channels = 1;
  else if (magic == "P6")
    r.channels = 3;
  else
    raise(ErrorCode::kMalformedHeader,
          "PNM magic must be P5 or P6, got '" + std::string(magic) + "'");
  r.width = parse_positive_int(hr.token(true), ErrorCode::kMalformedHeader, "PNM width");
  r.height = parse_positive_int(hr.token(true), ErrorCode::kMalformedHeader, "PNM height");
  const int maxval =
      parse_positive_int(hr.token(true), ErrorCode::kMalformedHeader, "PNM maxval");
  if (maxval > 65535) raise(ErrorCode::kMalformedHeader, "PNM maxval > 65535");
  if (!hr.end_header())
    raise(ErrorCode::kMalformedHeader, "PNM header not terminated");
  r.bit_depth = maxval > 255 ? 16 : 8;

  const std::size_t count =
      static_cast<std::size_t>(r.width) * r.height * r.channels;
  const std::size_t bps = r.bit_depth / 8;
  if (bytes.size() - hr.pos() < count * bps)
    raise(ErrorCode::kTruncatedPayload, "PNM payload too short");
  r.samples.resize(count);
  const std::uint8_t* src = bytes.data() + hr.pos();
  for (std::size_t i = 0; i < count; ++i)
    r.samples[i] = bps == 2 ? static_cast<std::uint16_t>(src[2 * i] << 8 | src[2 * i + 1])
                            : src[i];
  return r;
}

Bytes write_pnm(const Raster& r) {
  check_raster(r);
  const std::string header = std::string(r.channels == 3 ? "P6" : "P5") + "\n" +
                             std::to_string(r.width) + " " +
                             std::to_string(r.height) + "\n" +
                             (r.bit_depth == 16 ? "65535" : "255") + "\n";
  Bytes out(header.begin(), header.end());
  for (std::uint16_t s : r.samples) {
    if (r.bit_depth == 16) out.push_back(static_cast<std::uint8_t>(s >> 8));
    out.push_back(static_cast<std::uint8_t>(s & 0xff));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kMissingFile, "cannot open " + path.string());
  Bytes out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return out;
}

void write_file(const std::filesystem::path& path, ByteView bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::kMissingFile, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorCode::kMissingFile, "short write to " + path.string());
}

Image load_image(const std::filesystem::path& path) {
  const Bytes bytes = read_file(path);
  const std::string ext = lower_extension(path);
  if (ext == ".pfm") {
    PfmData p = read_pfm(bytes);
    return Image(p.array.height, p.array.width, p.array.channels,
                 std::move(p.array.data));
  }
  Raster r;
  if (bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0)
    r = read_png(bytes);
  else if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6'))
    r = read_pnm(bytes);
  else
    raise(ErrorCode::kUnsupportedFormat, "unrecognised image format: " + path.string());

  const float k = r.bit_depth == 16 ? 255.0f / 65535.0f : 1.0f;
  std::vector<float> data(r.samples.size());
  std::transform(r.samples.begin(), r.samples.end(), data.begin(),
                 [k](std::uint16_t s) { return static_cast<float>(s) * k; });
  return Image(r.height, r.width, r.channels, std::move(data));
}

DisparityMap load_disparity(const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  const Bytes bytes = read_file(path);
  if (ext == ".png") return read_kitti_disparity_png(bytes);
  if (ext != ".pfm")
    raise(ErrorCode::kUnsupportedFormat,
          "disparity files must be .png or .pfm: " + path.string());
  const PfmData p = read_pfm(bytes);
  if (p.array.channels != 1)
    raise(ErrorCode::kUnsupportedFormat, "disparity PFM must be single channel");
  DisparityMap d(p.array.height, p.array.width, 0.0f, false);
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x) {
      const float v = p.array.at(y, x);
      if (!std::isfinite(v)) continue;
      d.at(y, x) = v;
      d.set_valid(y, x, true);
    }
  return d;
}

void save_disparity(const std::filesystem::path& path, const DisparityMap& d) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    write_file(path, write_kitti_disparity_png(d));
    return;
  }
  if (ext != ".pfm")
    raise(ErrorCode::kUnsupportedFormat,
          "disparity files must be .png or .pfm: " + path.string());
  FloatArray a;
  a.height = d.height();
  a.width = d.width();
  a.channels = 1;
  a.data.resize(d.values().size());
  for (int y = 0; y < d.height(); ++y)
    for (int x = 0; x < d.width(); ++x) {
      const float v = d.at(y, x);
      if (d.valid(y, x) && !std::isfinite(v))
        raise(ErrorCode::kNonFinite, "non-finite valid disparity");
      a.data[static_cast<std::size_t>(y) * a.width + x] =
          d.valid(y, x) ? v : std::numeric_limits<float>::infinity();
    }
  // Invalid pixels use the +inf sentinel, which the checked writer refuses.
  write_file(path, encode_pfm(a, true, 1.0f));
}

ValidMask load_nonoccluded_mask(const std::filesystem::path& path) {
  const Raster r = read_png(read_file(path));
  ValidMask m(r.height, r.width, false);
  const std::uint16_t full = r.bit_depth == 16 ? 65535 : 255;
  for (int y = 0; y < r.height; ++y)
    for (int x = 0; x < r.width; ++x) m.set(y, x, r.at(y, x) == full);
  return m;
}

}  // namespace stereobench
