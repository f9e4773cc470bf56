#include "efa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "efa/error.hpp"
#include "efa/svg.hpp"
#include "efa/text_io.hpp"

namespace efa {

FeatureMatrix assemble(const std::vector<EfdSet>& efds, const std::vector<std::string>& labels) {
  if (efds.empty()) throw Error(ErrorCode::BadParameter, "no descriptor sets to assemble");
  if (labels.size() != efds.size())
    throw Error(ErrorCode::BadParameter, "one label per descriptor set is required");
  const int order = efds.front().order();
  for (std::size_t i = 1; i < efds.size(); ++i)
    if (efds[i].order() != order)
      throw Error(ErrorCode::MixedHarmonicCounts,
                  "row " + std::to_string(i) + " has " + std::to_string(efds[i].order()) +
                      " harmonics, expected " + std::to_string(order),
                  static_cast<std::ptrdiff_t>(i));
  FeatureMatrix fm;
  fm.values = Matrix(efds.size(), 4 * static_cast<std::size_t>(order));
  fm.labels = labels;
  for (std::size_t i = 0; i < efds.size(); ++i) {
    const auto flat = efds[i].flatten();
    for (std::size_t j = 0; j < flat.size(); ++j) fm.values(i, j) = flat[j];
  }
  return fm;
}

SymmetricEigen jacobi_eigen(Matrix a, double tolerance, int max_sweeps) {
  const std::size_t n = a.rows();
  SymmetricEigen res;
  res.vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) res.vectors(i, i) = 1.0;

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
  const double limit = tolerance * std::sqrt(total);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  Matrix& v = res.vectors;
  while (res.sweeps < max_sweeps && off_norm() > limit) {
    ++res.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rutishauser's stable rotation.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  Matrix sorted(n, n);
  res.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    res.values[j] = a(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) sorted(r, j) = v(r, order[j]);
  }
  res.vectors = std::move(sorted);
  return res;
}

PcaResult pca(const Matrix& m, int k) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows < 2) throw Error(ErrorCode::BadParameter, "PCA needs at least two rows");
  if (k < 1 || static_cast<std::size_t>(k) > std::min(rows - 1, cols))
    throw Error(ErrorCode::BadParameter,
                "component count must be in [1, min(rows-1, cols)]");
  const auto kk = static_cast<std::size_t>(k);

  PcaResult res;
  res.mean.assign(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) res.mean[j] += m(i, j);
  for (double& x : res.mean) x /= static_cast<double>(rows);

  Matrix centered(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) centered(i, j) = m(i, j) - res.mean[j];

  Matrix cov(cols, cols);
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t b = a; b < cols; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows; ++i) s += centered(i, a) * centered(i, b);
      cov(a, b) = cov(b, a) = s / static_cast<double>(rows - 1);
    }

  const SymmetricEigen eig = jacobi_eigen(std::move(cov));

  double total = 0.0;
  for (double l : eig.values) total += std::max(l, 0.0);

  res.loadings = Matrix(cols, kk);
  res.eigenvalues.resize(kk);
  res.explained_variance_ratio.resize(kk);
  for (std::size_t j = 0; j < kk; ++j) {
    std::size_t arg = 0;
    for (std::size_t r = 1; r < cols; ++r)
      if (std::abs(eig.vectors(r, j)) > std::abs(eig.vectors(arg, j))) arg = r;
    const double sign = eig.vectors(arg, j) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < cols; ++r) res.loadings(r, j) = sign * eig.vectors(r, j);
    res.eigenvalues[j] = eig.values[j];
    res.explained_variance_ratio[j] = total > 0.0 ? std::max(eig.values[j], 0.0) / total : 0.0;
  }

  res.scores = Matrix(rows, kk);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < kk; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < cols; ++c) s += centered(i, c) * res.loadings(c, j);
      res.scores(i, j) = s;
    }
  return res;
}

std::string format_scores_csv(const PcaResult& r, const std::vector<std::string>& labels) {
  const std::size_t k = r.scores.cols();
  std::string out = "# explained_variance_ratio:";
  for (double v : r.explained_variance_ratio) out += " " + format_real(v);
  out += "\nlabel";
  for (std::size_t j = 1; j <= k; ++j) out += ",pc" + std::to_string(j);
  out += "\n";
  for (std::size_t i = 0; i < r.scores.rows(); ++i) {
    out += i < labels.size() ? labels[i] : "row" + std::to_string(i + 1);
    for (std::size_t j = 0; j < k; ++j) out += "," + format_real(r.scores(i, j));
    out += "\n";
  }
  return out;
}

std::string scores_scatter_svg(const PcaResult& r, const std::vector<std::string>& labels) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < r.scores.rows(); ++i)
    pts.push_back({r.scores(i, 0), r.scores.cols() > 1 ? r.scores(i, 1) : 0.0});

  std::vector<std::string> groups;
  for (const auto& l : labels)
    if (std::find(groups.begin(), groups.end(), l) == groups.end()) groups.push_back(l);

  SvgCanvas svg(640, 640, 60.0);
  svg.fit(pts);
  svg.axes("PC1", "PC2");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string& l = i < labels.size() ? labels[i] : std::string();
    const auto g = static_cast<std::size_t>(std::find(groups.begin(), groups.end(), l) - groups.begin());
    svg.marker(pts[i], palette_color(g));
  }
  for (std::size_t g = 0; g < groups.size(); ++g) svg.legend_entry(g, groups[g], palette_color(g));
  return svg.str();
}

}  // namespace efa
