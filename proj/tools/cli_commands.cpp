#include "cli_commands.hpp"

#include <glob.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "efa/analysis.hpp"
#include "efa/contour.hpp"
#include "efa/efd.hpp"
#include "efa/error.hpp"
#include "efa/kernels/kernels.hpp"
#include "efa/normalize.hpp"
#include "efa/pipeline.hpp"
#include "efa/text_io.hpp"
#include "efa/transforms.hpp"

namespace efa::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::BadParameter:
    case ErrorCode::HarmonicOutOfRange:
    case ErrorCode::DegenerateRuler:
    case ErrorCode::MixedHarmonicCounts:
    case ErrorCode::InvalidContour:
      return kUsage;
    case ErrorCode::NotClosed:
    case ErrorCode::NotAdjacent:
    case ErrorCode::DegenerateBoundary:
    case ErrorCode::DegenerateFirstHarmonic:
    case ErrorCode::FlatImage:
    case ErrorCode::SeedOnBackground:
    case ErrorCode::EmptyMask:
    case ErrorCode::MultipleComponents:
      return kPipeline;
  }
  return kInternal;
}

bool has_wildcard(const std::string& s) {
  return s.find_first_of("*?[") != std::string::npos;
}

// Expands patterns the shell left alone; every pattern's matches are sorted
// so batch output order does not depend on the filesystem.
std::vector<std::string> expand_inputs(const std::vector<std::string>& patterns) {
  std::vector<std::string> out;
  for (const auto& p : patterns) {
    if (!has_wildcard(p)) {
      out.push_back(p);
      continue;
    }
    glob_t g{};
    const int rc = ::glob(p.c_str(), 0, nullptr, &g);
    std::vector<std::string> hits;
    if (rc == 0)
      for (std::size_t i = 0; i < g.gl_pathc; ++i) hits.emplace_back(g.gl_pathv[i]);
    ::globfree(&g);
    if (hits.empty()) throw Error(ErrorCode::IoError, "no files match " + p);
    std::sort(hits.begin(), hits.end());
    out.insert(out.end(), hits.begin(), hits.end());
  }
  return out;
}

struct Units {
  std::string name = "mm";
  double per_mm = 1.0;
};

Units units_from(const std::string& name) {
  if (name == "inch") return {"inch", 1.0 / 25.4};
  return {"mm", 1.0};
}

std::string info_header(const Units& u) {
  return "label,area_" + u.name + "2,perimeter_" + u.name + ",scale_" + u.name + "_per_px\n";
}

std::string info_row(const std::string& label, double area_mm2, double perimeter_mm,
                     double scale_mm, const Units& u) {
  return label + "," + format_real(area_mm2 * u.per_mm * u.per_mm) + "," +
         format_real(perimeter_mm * u.per_mm) + "," + format_real(scale_mm * u.per_mm) + "\n";
}

std::vector<int> parse_int_list(const std::string& s, std::size_t expected, const char* what) {
  std::vector<int> v;
  for (auto f : split_csv(s)) v.push_back(parse_int(trim(f), 0));
  if (v.size() != expected)
    throw Error(ErrorCode::BadParameter,
                std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
  return v;
}

// A contour file holds either a chain code (one line of digits 0-7) or
// boundary vertices ("x y" per line).
struct ContourInput {
  std::optional<ChainCode> chain;
  PolyContour contour;
};

ContourInput read_contour(const std::string& path) {
  const std::string text = read_file(path);
  const std::string_view body = trim(text);
  const bool chain_like =
      !body.empty() && std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '7'; });
  if (chain_like) {
    ChainCode code = parse_chain(text);
    PolyContour poly = chain_to_contour(code);
    return {std::move(code), std::move(poly)};
  }
  return {std::nullopt, parse_boundary(text)};
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-")
    out << data;
  else
    write_file_atomic(path, data);
}

std::optional<Calibration> ruler_calibration(const std::string& ruler, double ruler_mm) {
  if (ruler.empty()) return std::nullopt;
  const auto v = parse_int_list(ruler, 4, "--ruler");
  return calibrate({v[0], v[1]}, {v[2], v[3]}, ruler_mm);
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
  std::vector<std::string> inputs;
  bool invert = false;
  int enhance = 0;
  int erode = 0;
  int dilate = 0;
  std::string seed;
  bool largest = false;
  std::string edge = "none";
  double edge_threshold = 100.0;
  std::string ruler;
  double ruler_mm = 0.0;
  std::string units = "mm";
  std::string label = "contour";
  std::string out_dir = ".";
};

int cmd_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  ExtractOptions opt;
  opt.invert = a.invert;
  opt.enhance = a.enhance;
  opt.erode = a.erode;
  opt.dilate = a.dilate;
  if (!a.seed.empty()) {
    const auto s = parse_int_list(a.seed, 2, "--seed");
    opt.seed = Pixel{s[0], s[1]};
  }
  opt.edge = a.edge == "sobel" ? EdgeMethod::sobel : EdgeMethod::none;
  opt.edge_threshold = a.edge_threshold;
  const auto cal = ruler_calibration(a.ruler, a.ruler_mm);
  if (cal)
    opt.calibration = *cal;
  else
    err << "efa: no ruler given, sizes are in pixel units (scale 1)\n";
  const Units units = units_from(a.units);
  fs::create_directories(a.out_dir);

  int worst = kOk;
  for (const auto& path : expand_inputs(a.inputs)) {
    try {
      const Extraction x = extract_contour(read_image(path), opt);
      const std::string label = fs::path(path).stem().string() + "_" + a.label;
      const fs::path base = fs::path(a.out_dir) / label;
      write_file_atomic(base.string() + "_b.txt", format_boundary(x.contour));
      write_file_atomic(base.string() + "_c.txt", format_chain(x.chain));
      write_file_atomic(base.string() + "_info.csv",
                        info_header(units) + info_row(label, x.area, x.perimeter,
                                                      opt.calibration.scale, units));
      write_file_atomic(base.string() + ".svg", extraction_svg(x, label));
      const std::string u = cal ? units.name : "px";
      const double f = cal ? units.per_mm : 1.0;
      out << label << ": " << x.chain.size() << " links, area " << format_real(x.area * f * f)
          << " " << u << "2, perimeter " << format_real(x.perimeter * f) << " " << u << "\n";
    } catch (const Error& e) {
      err << "efa: " << path << ": " << e.what() << "\n";
      worst = std::max(worst, exit_code_for(e.code()));
    }
  }
  return worst;
}

// ---------------------------------------------------------------- efd

struct EfdArgs {
  std::vector<std::string> inputs;
  int harmonics = kDefaultHarmonics;
  std::string normalize = "none";
  bool with_labels = false;
  std::string out;
};

int cmd_efd(const EfdArgs& a, std::ostream& out, std::ostream&) {
  std::string doc;
  if (a.normalize == "true") {
    doc = "# normalized=true\n" + normalized_csv_header(a.harmonics, a.with_labels) + "\n";
  } else {
    if (a.normalize == "classic") doc = "# normalized=classic\n";
    doc += efd_csv_header(a.harmonics, a.with_labels) + "\n";
  }
  for (const auto& path : expand_inputs(a.inputs)) {
    const ContourInput in = read_contour(path);
    const EfdSet e = in.chain ? compute_harmonics(*in.chain, a.harmonics)
                              : compute_harmonics(in.contour, a.harmonics);
    if (a.with_labels) doc += fs::path(path).stem().string() + ",";
    if (a.normalize == "true")
      doc += normalized_csv_row(normalize_true(e));
    else if (a.normalize == "classic")
      doc += efd_csv_row(normalize_classic(e));
    else
      doc += efd_csv_row(e);
    doc += "\n";
  }
  emit(a.out, doc, out);
  return kOk;
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
  std::string input;
  std::string kind;
  double value = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  bool suite = false;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string out_dir = ".";
};

int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream&) {
  const PolyContour c = read_contour(a.input).contour;
  if (a.suite) {
    const auto specs = a.seed ? random_suite_specs(c, *a.seed) : default_suite_specs(c);
    const auto suite = nine_suite(c, specs);
    fs::create_directories(a.out_dir);
    const std::string stem = fs::path(a.input).stem().string();
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const fs::path p = fs::path(a.out_dir) /
                         (stem + "_" + std::to_string(i + 1) + "_" +
                          std::string(to_string(specs[i].kind)) + "_b.txt");
      write_file_atomic(p, format_boundary(suite[i]));
      out << p.string() << "\n";
    }
    return kOk;
  }
  const auto kind = parse_transform_kind(a.kind);
  if (!kind) throw Error(ErrorCode::BadParameter, "unknown transformation " + a.kind);
  TransformSpec t{*kind, a.value, a.dx, a.dy};
  emit(a.out, format_boundary(apply(c, t)), out);
  return kOk;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
  std::vector<std::string> inputs;
  int harmonics = kDefaultHarmonics;
  std::optional<std::uint64_t> seed;
  std::string csv;
};

int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream&) {
  std::string csv;
  bool all_pass = true;
  for (const auto& path : expand_inputs(a.inputs)) {
    const PolyContour c = read_contour(path).contour;
    const auto specs = a.seed ? random_suite_specs(c, *a.seed) : default_suite_specs(c);
    const AuditReport r = invariance_audit(c, a.harmonics, specs);
    out << format_audit_table(r, path) << "\n";
    all_pass = all_pass && r.true_passes() == static_cast<int>(r.rows.size());
    const auto body = format_audit_csv(r);
    bool header = true;
    for (auto line : split_lines(body)) {
      if (line.empty()) continue;
      if (header) {
        if (csv.empty()) csv = "input," + std::string(line) + "\n";
        header = false;
        continue;
      }
      csv += path + "," + std::string(line) + "\n";
    }
  }
  if (!a.csv.empty()) write_file_atomic(a.csv, csv);
  return all_pass ? kOk : kPipeline;
}

// ---------------------------------------------------------------- pca

struct PcaArgs {
  std::vector<std::string> inputs;
  int k = 2;
  std::string out;
  std::string svg;
};

int cmd_pca(const PcaArgs& a, std::ostream& out, std::ostream&) {
  std::vector<EfdSet> sets;
  std::vector<std::string> labels;
  for (const auto& path : expand_inputs(a.inputs))
    for (auto& rec : parse_efd_csv(read_file(path))) {
      sets.push_back(std::move(rec.efd));
      labels.push_back(std::move(rec.label));
    }
  const FeatureMatrix fm = assemble(sets, labels);
  const PcaResult r = pca(fm.values, a.k);
  emit(a.out, format_scores_csv(r, fm.labels), out);
  if (!a.svg.empty()) write_file_atomic(a.svg, scores_scatter_svg(r, fm.labels));
  return kOk;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  std::string input;
  std::vector<int> orders{1, 5, 15, 35};
  int row = 1;
  int samples = kDefaultReconstructionSamples;
  std::string out;
};

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream&) {
  const auto recs = parse_efd_csv(read_file(a.input));
  if (a.row < 1 || static_cast<std::size_t>(a.row) > recs.size())
    throw Error(ErrorCode::BadParameter, "--row " + std::to_string(a.row) + " is outside 1.." +
                                             std::to_string(recs.size()));
  const EfdSet& e = recs[static_cast<std::size_t>(a.row) - 1].efd;
  for (int n : a.orders)
    if (n < 1 || n > e.order())
      throw Error(ErrorCode::HarmonicOutOfRange, "--n " + std::to_string(n) +
                                                     " exceeds the stored " +
                                                     std::to_string(e.order()) + " harmonics");
  emit(a.out, reconstruction_svg(e, a.orders, a.samples), out);
  return kOk;
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  std::vector<std::string> inputs;
  double scale = 1.0;
  std::string ruler;
  double ruler_mm = 0.0;
  std::string units = "mm";
};

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream&) {
  Calibration cal{a.scale};
  if (!(cal.scale > 0.0)) throw Error(ErrorCode::BadParameter, "--scale must be positive");
  if (auto r = ruler_calibration(a.ruler, a.ruler_mm)) cal = *r;
  const Units units = units_from(a.units);
  std::string doc = info_header(units);
  for (const auto& path : expand_inputs(a.inputs)) {
    const ContourInput in = read_contour(path);
    const double p = in.chain ? perimeter(*in.chain, cal) : perimeter(in.contour, cal);
    doc += info_row(fs::path(path).stem().string(), area(in.contour, cal), p, cal.scale, units);
  }
  out << doc;
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic Fourier analysis of closed contours"};
  app.name("efa");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::string backend = "auto";
  app.add_option("--kernels", backend, "Kernel backend: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  const auto units_check = CLI::IsMember({"mm", "inch"});

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Trace the outline of an object in an image");
  extract->add_option("images", ex.inputs, "PNG/PGM/PPM images or glob patterns")->required();
  extract->add_flag("--invert", ex.invert, "Invert intensities (dark object on light ground)");
  extract->add_option("--enhance", ex.enhance, "Contrast stretch passes")->check(CLI::NonNegativeNumber);
  extract->add_option("--erode", ex.erode, "Erosion iterations")->check(CLI::NonNegativeNumber);
  extract->add_option("--dilate", ex.dilate, "Dilation iterations")->check(CLI::NonNegativeNumber);
  auto* seed = extract->add_option("--seed", ex.seed, "Object pixel as col,row (raster coordinates)");
  auto* largest = extract->add_flag("--largest", ex.largest, "Keep the largest component (default)");
  seed->excludes(largest);
  extract->add_option("--edge", ex.edge, "Edge detector instead of Otsu thresholding")
      ->check(CLI::IsMember({"none", "sobel"}));
  extract->add_option("--edge-threshold", ex.edge_threshold, "Sobel magnitude threshold")
      ->check(CLI::NonNegativeNumber);
  auto* ruler = extract->add_option("--ruler", ex.ruler, "Two ruler points as x1,y1,x2,y2");
  auto* ruler_mm = extract->add_option("--ruler-mm", ex.ruler_mm, "Distance between the ruler points in mm");
  ruler->needs(ruler_mm);
  ruler_mm->needs(ruler);
  extract->add_option("--units", ex.units, "Output units: mm or inch")->check(units_check);
  extract->add_option("--label", ex.label, "Tag used in output file names");
  extract->add_option("-o,--out-dir", ex.out_dir, "Output directory");

  EfdArgs ef;
  auto* efd = app.add_subcommand("efd", "Compute elliptic Fourier descriptors");
  efd->add_option("contours", ef.inputs, "Boundary (_b.txt) or chain code (_c.txt) files")->required();
  efd->add_option("--harmonics", ef.harmonics, "Number of harmonics")->check(CLI::Range(1, 100000));
  efd->add_option("--normalize", ef.normalize, "true, classic or none")
      ->check(CLI::IsMember({"true", "classic", "none"}));
  efd->add_flag("--with-labels", ef.with_labels, "Prefix each row with the input file stem");
  efd->add_option("-o,--out", ef.out, "Output CSV (default stdout)");

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Apply a geometric transformation to a contour");
  transform->add_option("contour", tr.input, "Boundary or chain code file")->required();
  auto* kind = transform->add_option("--kind", tr.kind, "Transformation name");
  transform->add_option("--value", tr.value, "Angle (rad), scale factor or vertex shift");
  transform->add_option("--dx", tr.dx, "Translation in x");
  transform->add_option("--dy", tr.dy, "Translation in y");
  auto* suite = transform->add_flag("--suite", tr.suite, "Write all nine audit variants");
  kind->excludes(suite);
  transform->add_option("--seed", tr.seed, "Randomize the suite parameters");
  transform->add_option("-o,--out", tr.out, "Output boundary file (default stdout)");
  transform->add_option("--out-dir", tr.out_dir, "Directory for --suite output");

  AuditArgs au;
  auto* audit = app.add_subcommand("audit", "Check normalization invariance under nine transformations");
  audit->add_option("contours", au.inputs, "Boundary or chain code files")->required();
  audit->add_option("--harmonics", au.harmonics, "Number of harmonics")->check(CLI::Range(1, 100000));
  audit->add_option("--seed", au.seed, "Randomize transformation parameters");
  audit->add_option("--csv", au.csv, "Also write a CSV report");

  PcaArgs pc;
  auto* pcacmd = app.add_subcommand("pca", "Principal components of descriptor rows");
  pcacmd->add_option("efd_csv", pc.inputs, "EFD CSV files")->required();
  pcacmd->add_option("--k", pc.k, "Number of components")->check(CLI::Range(1, 100000));
  pcacmd->add_option("-o,--out", pc.out, "Scores CSV (default stdout)");
  pcacmd->add_option("--svg", pc.svg, "Scatter plot of the first two components");

  RenderArgs re;
  auto* render = app.add_subcommand("render", "Draw reconstructions from truncated series");
  render->add_option("efd_csv", re.input, "EFD CSV file")->required();
  render->add_option("--n", re.orders, "Harmonic counts to draw")->delimiter(',')->check(CLI::Range(1, 100000));
  render->add_option("--row", re.row, "Data row to draw (1-based)");
  render->add_option("--samples", re.samples, "Points per curve")->check(CLI::Range(8, 1 << 20));
  render->add_option("-o,--out", re.out, "Output SVG (default stdout)");

  MeasureArgs me;
  auto* measure = app.add_subcommand("measure", "Area and perimeter of contour files");
  measure->add_option("contours", me.inputs, "Boundary or chain code files")->required();
  auto* scale = measure->add_option("--scale", me.scale, "Millimeters per pixel");
  auto* mruler = measure->add_option("--ruler", me.ruler, "Two ruler points as x1,y1,x2,y2");
  auto* mruler_mm = measure->add_option("--ruler-mm", me.ruler_mm, "Ruler distance in mm");
  mruler->needs(mruler_mm);
  mruler_mm->needs(mruler);
  scale->excludes(mruler);
  measure->add_option("--units", me.units, "Output units: mm or inch")->check(units_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (backend != "auto")
      kernels::select(backend == "avx2" ? kernels::Backend::avx2 : kernels::Backend::scalar);
    if (*extract) return cmd_extract(ex, out, err);
    if (*efd) return cmd_efd(ef, out, err);
    if (*transform) {
      if (!tr.suite && tr.kind.empty())
        throw Error(ErrorCode::BadParameter, "transform needs --kind or --suite");
      return cmd_transform(tr, out, err);
    }
    if (*audit) return cmd_audit(au, out, err);
    if (*pcacmd) return cmd_pca(pc, out, err);
    if (*render) return cmd_render(re, out, err);
    if (*measure) return cmd_measure(me, out, err);
  } catch (const Error& e) {
    err << "efa: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "efa: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace efa::cli
