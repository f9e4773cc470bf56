#include <png.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "efa/error.hpp"
#include "efa/segment.hpp"
#include "efa/text_io.hpp"

namespace efa {

namespace {

using File = std::unique_ptr<std::FILE, int (*)(std::FILE*)>;

File open_file(const std::filesystem::path& path, const char* mode) {
  File f(std::fopen(path.c_str(), mode), &std::fclose);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return f;
}

RgbRaster read_png(const std::filesystem::path& path) {
  File f = open_file(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error(ErrorCode::IoError, "libpng initialisation failed");
  }
  RgbRaster out;
  std::vector<png_byte> data;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorCode::ParseError, "corrupt PNG: " + path.string());
  }
  png_init_io(png, f.get());
  png_read_info(png, info);
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  const std::size_t stride = png_get_rowbytes(png, info);
  data.resize(stride * static_cast<std::size_t>(out.height));
  rows.resize(static_cast<std::size_t>(out.height));
  for (int r = 0; r < out.height; ++r) rows[r] = data.data() + stride * static_cast<std::size_t>(r);
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  out.pixels.resize(static_cast<std::size_t>(out.width) * static_cast<std::size_t>(out.height));
  for (int r = 0; r < out.height; ++r)
    for (int c = 0; c < out.width; ++c) {
      const png_byte* p = rows[r] + 3 * c;
      out.pixels[static_cast<std::size_t>(r) * out.width + c] = {p[0], p[1], p[2]};
    }
  return out;
}

void write_png_rows(const std::filesystem::path& path, int width, int height, int color_type,
                    const std::vector<png_bytep>& rows) {
  File f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorCode::IoError, "libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::IoError, "PNG write failed: " + path.string());
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, const_cast<png_bytepp>(rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// Netpbm header token reader that skips comments.
struct PnmReader {
  const std::string& s;
  std::size_t pos = 0;
  std::string token() {
    while (pos < s.size()) {
      if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
    const std::size_t b = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) throw Error(ErrorCode::ParseError, "truncated PNM file");
    return s.substr(b, pos - b);
  }
  int number() { return parse_int(token(), 0); }
};

RgbRaster read_pnm(const std::filesystem::path& path) {
  const std::string s = read_file(path);
  PnmReader rd{s};
  const std::string magic = rd.token();
  const bool ascii = magic == "P2" || magic == "P3";
  const bool color = magic == "P3" || magic == "P6";
  if (magic != "P2" && magic != "P3" && magic != "P5" && magic != "P6")
    throw Error(ErrorCode::ParseError, "unsupported PNM type " + magic);
  RgbRaster out;
  out.width = rd.number();
  out.height = rd.number();
  const int maxval = rd.number();
  if (out.width <= 0 || out.height <= 0 || maxval <= 0 || maxval > 255)
    throw Error(ErrorCode::ParseError, "unsupported PNM dimensions or maxval");
  const std::size_t count = static_cast<std::size_t>(out.width) * out.height;
  const int channels = color ? 3 : 1;
  std::vector<int> values(count * channels);
  if (ascii) {
    for (auto& v : values) v = rd.number();
  } else {
    std::size_t p = rd.pos + 1;  // single whitespace after maxval
    if (p + values.size() > s.size()) throw Error(ErrorCode::ParseError, "truncated PNM data");
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = static_cast<unsigned char>(s[p + i]);
  }
  out.pixels.resize(count);
  auto scale = [maxval](int v) { return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval); };
  for (std::size_t i = 0; i < count; ++i) {
    if (color)
      out.pixels[i] = {scale(values[3 * i]), scale(values[3 * i + 1]), scale(values[3 * i + 2])};
    else
      out.pixels[i] = {scale(values[i]), scale(values[i]), scale(values[i])};
  }
  return out;
}

}  // namespace

RgbRaster read_image(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  unsigned char sig[8] = {};
  probe.read(reinterpret_cast<char*>(sig), 8);
  if (probe.gcount() == 8 && png_sig_cmp(sig, 0, 8) == 0) return read_png(path);
  if (sig[0] == 'P') return read_pnm(path);
  throw Error(ErrorCode::ParseError, "unrecognised image format: " + path.string());
}

void write_png(const std::filesystem::path& path, const Raster& r) {
  std::vector<png_byte> data(r.pixels().begin(), r.pixels().end());
  std::vector<png_bytep> rows(static_cast<std::size_t>(r.height()));
  for (int i = 0; i < r.height(); ++i) rows[i] = data.data() + static_cast<std::size_t>(i) * r.width();
  write_png_rows(path, r.width(), r.height(), PNG_COLOR_TYPE_GRAY, rows);
}

void write_png(const std::filesystem::path& path, const RgbRaster& r) {
  std::vector<png_byte> data;
  data.reserve(r.pixels.size() * 3);
  for (const Rgb& p : r.pixels) {
    data.push_back(p.r);
    data.push_back(p.g);
    data.push_back(p.b);
  }
  std::vector<png_bytep> rows(static_cast<std::size_t>(r.height));
  for (int i = 0; i < r.height; ++i) rows[i] = data.data() + static_cast<std::size_t>(i) * r.width * 3;
  write_png_rows(path, r.width, r.height, PNG_COLOR_TYPE_RGB, rows);
}

void write_pgm(const std::filesystem::path& path, const Raster& r) {
  std::string s = "P5\n" + std::to_string(r.width()) + " " + std::to_string(r.height()) + "\n255\n";
  s.append(r.pixels().begin(), r.pixels().end());
  write_file_atomic(path, s);
}

}  // namespace efa
