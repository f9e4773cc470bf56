#include "efa/efd.hpp"

#include <cmath>
#include <numbers>

#include "efa/error.hpp"
#include "efa/kernels/kernels.hpp"
#include "efa/text_io.hpp"

namespace efa {

namespace {

// Segment p (1-based in the formulas) runs from vertex p-1 to vertex p,
// the last one closing back to vertex 0.
struct Trace {
  std::vector<double> dx, dy, dt;
  std::vector<double> x, y;  // absolute vertex positions, K entries
  double period = 0.0;
};

Trace trace_of(const PolyContour& c) {
  const auto& v = c.vertices();
  const std::size_t k = v.size();
  Trace t;
  t.dx.resize(k);
  t.dy.resize(k);
  t.dt.resize(k);
  t.x.resize(k);
  t.y.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % k];
    t.x[i] = a.x;
    t.y[i] = a.y;
    t.dx[i] = b.x - a.x;
    t.dy[i] = b.y - a.y;
    t.dt[i] = std::hypot(t.dx[i], t.dy[i]);
    t.period += t.dt[i];
  }
  return t;
}

Trace trace_of(const ChainCode& code) {
  if (!code.is_closed())
    throw Error(ErrorCode::NotClosed, "chain code does not return to its start");
  if (code.empty()) throw Error(ErrorCode::InvalidContour, "empty chain code");
  const std::size_t k = code.size();
  Trace t;
  t.dx.resize(k);
  t.dy.resize(k);
  t.dt.resize(k);
  t.x.resize(k);
  t.y.resize(k);
  long px = code.start().x;
  long py = code.start().y;
  for (std::size_t i = 0; i < k; ++i) {
    const auto link = code.links()[i];
    t.x[i] = static_cast<double>(px);
    t.y[i] = static_cast<double>(py);
    t.dx[i] = kDirections[link].x;
    t.dy[i] = kDirections[link].y;
    t.dt[i] = link_time(link);
    t.period += t.dt[i];
    px += kDirections[link].x;
    py += kDirections[link].y;
  }
  return t;
}

DcComponents dc_of(const Trace& t) {
  const std::size_t k = t.dt.size();
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    sx += (t.x[i] + t.x[j]) * t.dt[i];
    sy += (t.y[i] + t.y[j]) * t.dt[i];
  }
  return {sx / (2.0 * t.period), sy / (2.0 * t.period)};
}

EfdSet harmonics_of(const Trace& t, int harmonics) {
  if (harmonics < 1)
    throw Error(ErrorCode::BadParameter, "harmonic count must be at least 1");
  const std::size_t k = t.dt.size();
  const double two_pi = 2.0 * std::numbers::pi;

  // Phases at segment ends, one pass over the cumulative times. The last
  // end sits exactly at 2*pi.
  std::vector<double> cph(k), sph(k);
  double elapsed = 0.0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    elapsed += t.dt[i];
    const double phi = two_pi * elapsed / t.period;
    cph[i] = std::cos(phi);
    sph[i] = std::sin(phi);
  }
  cph[k - 1] = 1.0;
  sph[k - 1] = 0.0;

  // sum_p s_p (f(t_p) - f(t_{p-1})) == sum_p (s_p - s_{p+1}) f(t_p) on a
  // closed curve, so each harmonic is a weighted sum over segment ends.
  std::vector<double> wx(k), wy(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    wx[i] = t.dx[i] / t.dt[i] - t.dx[j] / t.dt[j];
    wy[i] = t.dy[i] / t.dt[i] - t.dy[j] / t.dt[j];
  }

  std::vector<double> sums(4 * static_cast<std::size_t>(harmonics));
  kernels::active().harmonic_sums(cph, sph, wx, wy, harmonics, sums);

  EfdSet e;
  const DcComponents dc = dc_of(t);
  e.A0 = dc.A0;
  e.C0 = dc.C0;
  e.harmonics.resize(harmonics);
  for (int n = 1; n <= harmonics; ++n) {
    const double scale =
        t.period / (2.0 * n * n * std::numbers::pi * std::numbers::pi);
    const double* s = sums.data() + 4 * (n - 1);
    e.harmonic(n) = {scale * s[0], scale * s[1], scale * s[2], scale * s[3]};
  }
  return e;
}

}  // namespace

std::vector<double> EfdSet::flatten() const {
  std::vector<double> v;
  v.reserve(4 * harmonics.size());
  for (const Harmonic& h : harmonics) {
    v.push_back(h.a);
    v.push_back(h.b);
    v.push_back(h.c);
    v.push_back(h.d);
  }
  return v;
}

DcComponents compute_dc(const PolyContour& contour) { return dc_of(trace_of(contour)); }
DcComponents compute_dc(const ChainCode& code) { return dc_of(trace_of(code)); }

EfdSet compute_harmonics(const PolyContour& contour, int harmonics) {
  return harmonics_of(trace_of(contour), harmonics);
}

EfdSet compute_harmonics(const ChainCode& code, int harmonics) {
  return harmonics_of(trace_of(code), harmonics);
}

std::vector<Point> reconstruct(const EfdSet& e, int n_use, int samples) {
  if (n_use < 1 || n_use > e.order())
    throw Error(ErrorCode::HarmonicOutOfRange,
                "requested " + std::to_string(n_use) + " harmonics, set holds " +
                    std::to_string(e.order()));
  if (samples < 8)
    throw Error(ErrorCode::BadParameter, "reconstruction needs at least 8 samples");

  const auto m = static_cast<std::size_t>(samples);
  std::vector<double> cph(m), sph(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) /
                      static_cast<double>(m);
    cph[j] = std::cos(th);
    sph[j] = std::sin(th);
  }
  const std::vector<double> coeffs = e.flatten();
  std::vector<double> xs(m), ys(m);
  kernels::active().evaluate_series(coeffs, n_use, e.A0, e.C0, cph, sph, xs, ys);

  std::vector<Point> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = {xs[j], ys[j]};
  return out;
}

std::string efd_csv_header(int harmonics, bool with_label) {
  std::string h = with_label ? "label,A0,C0" : "A0,C0";
  for (int n = 1; n <= harmonics; ++n) {
    const std::string s = std::to_string(n);
    h += ",a" + s + ",b" + s + ",c" + s + ",d" + s;
  }
  return h;
}

std::string efd_csv_row(const EfdSet& e) {
  std::string r = format_real(e.A0) + "," + format_real(e.C0);
  for (const Harmonic& h : e.harmonics) {
    r += ',';
    r += format_real(h.a);
    r += ',';
    r += format_real(h.b);
    r += ',';
    r += format_real(h.c);
    r += ',';
    r += format_real(h.d);
  }
  return r;
}

std::vector<EfdRecord> parse_efd_csv(std::string_view text) {
  std::vector<std::string_view> header;
  std::vector<EfdRecord> out;
  int harmonics = 0;
  bool labelled = false;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_csv(line);
    if (header.empty()) {
      header = fields;
      labelled = !header.empty() && header[0] == "label";
      const std::size_t off = labelled ? 1 : 0;
      if (header.size() < off + 2 || header[off] != "A0" || header[off + 1] != "C0")
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) +
                        ": EFD header must start with A0,C0",
                    static_cast<std::ptrdiff_t>(line_no));
      std::size_t i = off + 2;
      while (i + 3 < header.size() &&
             header[i] == "a" + std::to_string(harmonics + 1)) {
        ++harmonics;
        i += 4;
      }
      if (harmonics < 1)
        throw Error(ErrorCode::ParseError, "EFD header lists no harmonics",
                    static_cast<std::ptrdiff_t>(line_no));
      continue;
    }
    const std::size_t off = labelled ? 1 : 0;
    const std::size_t need = off + 2 + 4 * static_cast<std::size_t>(harmonics);
    if (fields.size() < need)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(need) + " columns, found " +
                      std::to_string(fields.size()),
                  static_cast<std::ptrdiff_t>(line_no));
    EfdRecord rec;
    rec.label = labelled ? std::string(fields[0])
                         : "row" + std::to_string(out.size() + 1);
    rec.efd.A0 = parse_real(fields[off], line_no);
    rec.efd.C0 = parse_real(fields[off + 1], line_no);
    rec.efd.harmonics.resize(harmonics);
    for (int n = 1; n <= harmonics; ++n) {
      const std::size_t b = off + 2 + 4 * static_cast<std::size_t>(n - 1);
      rec.efd.harmonic(n) = {parse_real(fields[b], line_no),
                             parse_real(fields[b + 1], line_no),
                             parse_real(fields[b + 2], line_no),
                             parse_real(fields[b + 3], line_no)};
    }
    out.push_back(std::move(rec));
  }
  if (header.empty()) throw Error(ErrorCode::ParseError, "EFD file is empty");
  if (out.empty()) throw Error(ErrorCode::ParseError, "EFD file has no data rows");
  return out;
}

}  // namespace efa
