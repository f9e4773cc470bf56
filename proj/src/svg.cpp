#include "efa/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "efa/text_io.hpp"

namespace efa {

namespace {

constexpr std::array<std::string_view, 8> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) { return format_fixed(v, 3); }

}  // namespace

std::string_view palette_color(std::size_t i) { return kPalette[i % kPalette.size()]; }

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

SvgCanvas::SvgCanvas(int width, int height, double margin)
    : width_(width), height_(height), margin_(margin) {}

void SvgCanvas::fit(std::span<const Point> pts) {
  double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
  if (!pts.empty()) {
    minx = maxx = pts[0].x;
    miny = maxy = pts[0].y;
  }
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  double span = std::max(maxx - minx, maxy - miny);
  if (!(span > 0.0)) span = 1.0;
  const double avail = std::min(width_, height_) - 2.0 * margin_;
  scale_ = avail / span;
  // centre the box
  x0_ = 0.5 * (minx + maxx) - 0.5 * (width_ - 2.0 * margin_) / scale_;
  y0_ = 0.5 * (miny + maxy) - 0.5 * (height_ - 2.0 * margin_) / scale_;
  flip_ = true;
}

void SvgCanvas::raster_frame(int image_width, int image_height) {
  const double avail_w = width_ - 2.0 * margin_;
  const double avail_h = height_ - 2.0 * margin_;
  scale_ = std::min(avail_w / image_width, avail_h / image_height);
  x0_ = 0.0;
  y0_ = 0.0;
  frame_w_ = image_width;
  frame_h_ = image_height;
  flip_ = false;
}

double SvgCanvas::sx(double x) const { return margin_ + (x - x0_) * scale_; }

double SvgCanvas::sy(double y) const {
  return flip_ ? height_ - margin_ - (y - y0_) * scale_ : margin_ + (y - y0_) * scale_;
}

void SvgCanvas::polyline(std::span<const Point> pts, std::string_view color,
                         double stroke_width, bool closed, std::string_view dash) {
  if (pts.empty()) return;
  body_ += closed ? "<polygon" : "<polyline";
  body_ += " fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" +
           num(stroke_width) + "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
  body_ += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += num(sx(pts[i].x)) + "," + num(sy(pts[i].y));
  }
  body_ += "\"/>\n";
}

void SvgCanvas::marker(Point p, std::string_view color, double radius) {
  body_ += "<circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) + "\" r=\"" +
           num(radius) + "\" fill=\"" + std::string(color) + "\" fill-opacity=\"0.7\"/>\n";
}

void SvgCanvas::axes(std::string_view xlabel, std::string_view ylabel) {
  const double l = margin_, r = width_ - margin_, t = margin_, b = height_ - margin_;
  body_ += "<rect x=\"" + num(l) + "\" y=\"" + num(t) + "\" width=\"" + num(r - l) +
           "\" height=\"" + num(b - t) + "\" fill=\"none\" stroke=\"#444\"/>\n";
  const double ox = sx(0.0), oy = sy(0.0);
  if (ox > l && ox < r)
    body_ += "<line x1=\"" + num(ox) + "\" y1=\"" + num(t) + "\" x2=\"" + num(ox) + "\" y2=\"" +
             num(b) + "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
  if (oy > t && oy < b)
    body_ += "<line x1=\"" + num(l) + "\" y1=\"" + num(oy) + "\" x2=\"" + num(r) + "\" y2=\"" +
             num(oy) + "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
  text(0.5 * (l + r), height_ - 0.3 * margin_, xlabel);
  body_ += "<text x=\"" + num(0.35 * margin_) + "\" y=\"" + num(0.5 * (t + b)) +
           "\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 " +
           num(0.35 * margin_) + " " + num(0.5 * (t + b)) + ")\" text-anchor=\"middle\">" +
           escape_xml(ylabel) + "</text>\n";
}

void SvgCanvas::rect_frame(std::string_view color) {
  body_ += "<rect x=\"" + num(sx(0.0)) + "\" y=\"" + num(sy(0.0)) + "\" width=\"" +
           num(frame_w_ * scale_) + "\" height=\"" + num(frame_h_ * scale_) +
           "\" fill=\"none\" stroke=\"" + std::string(color) + "\"/>\n";
}

void SvgCanvas::text(double x, double y, std::string_view s, int size) {
  body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           std::to_string(size) + "\" text-anchor=\"middle\">" + escape_xml(s) + "</text>\n";
}

void SvgCanvas::legend_entry(std::size_t slot, std::string_view label, std::string_view color) {
  const double x = width_ - margin_ - 150.0;
  const double y = margin_ + 18.0 + 18.0 * static_cast<double>(slot);
  body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y - 10.0) +
           "\" width=\"12\" height=\"12\" fill=\"" + std::string(color) + "\"/>\n";
  body_ += "<text x=\"" + num(x + 18.0) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(label) + "</text>\n";
}

std::string SvgCanvas::str() const {
  const std::string w = std::to_string(width_), h = std::to_string(height_);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" +
         body_ + "</svg>\n";
}

}  // namespace efa
