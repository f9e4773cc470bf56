#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "efa/analysis.hpp"
#include "efa/error.hpp"
#include "efa/normalize.hpp"
#include "efa/transforms.hpp"
#include "oracles.hpp"

using namespace efa;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an efa::Error");
  return ErrorCode::IoError;
}

Matrix from_rows(std::vector<std::vector<double>> rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

double reconstruction_error(const Matrix& m, const PcaResult& r) {
  double worst = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      double v = r.mean[c];
      for (std::size_t j = 0; j < r.scores.cols(); ++j) v += r.scores(i, j) * r.loadings(c, j);
      worst = std::max(worst, std::abs(v - m(i, c)));
    }
  return worst;
}

}  // namespace

TEST_CASE("pca examples") {
  auto r = pca(from_rows({{1, 2}, {2, 4}, {3, 6}}), 2);
  CHECK(r.explained_variance_ratio[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.explained_variance_ratio[1]) < 1e-12);
  // loading along (1, 2)/sqrt(5), positive by convention
  CHECK(r.loadings(0, 0) == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(r.loadings(1, 0) == doctest::Approx(2 / std::sqrt(5.0)).epsilon(1e-12));

  r = pca(from_rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 2);
  CHECK(r.explained_variance_ratio[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.explained_variance_ratio[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.eigenvalues[0] == doctest::Approx(r.eigenvalues[1]).epsilon(1e-12));
}

TEST_CASE("pca against a power-iteration oracle") {
  std::mt19937_64 rng(10);
  std::normal_distribution<double> g;
  Matrix m(10, 6);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = g(rng) * (1.0 + static_cast<double>(j));

  // covariance built independently of the library
  std::vector<double> mean(6, 0);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 6; ++j) mean[j] += m(i, j) / 10;
  std::vector<std::vector<double>> cov(6, std::vector<double>(6, 0));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t i = 0; i < 10; ++i) cov[a][b] += (m(i, a) - mean[a]) * (m(i, b) - mean[b]) / 9;

  std::vector<std::vector<double>> vecs;
  const auto lambda = oracle::power_eigenvalues(cov, 6, &vecs);
  const auto r = pca(m, 6);
  double total = 0;
  for (double l : lambda) total += l;
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(r.eigenvalues[j] == doctest::Approx(lambda[j]).epsilon(1e-8));
    CHECK(r.explained_variance_ratio[j] == doctest::Approx(lambda[j] / total).epsilon(1e-8));
    // align oracle vector with the sign convention, then compare scores
    std::size_t arg = 0;
    for (std::size_t c = 1; c < 6; ++c)
      if (std::abs(vecs[j][c]) > std::abs(vecs[j][arg])) arg = c;
    const double sign = vecs[j][arg] < 0 ? -1 : 1;
    for (std::size_t i = 0; i < 10; ++i) {
      double s = 0;
      for (std::size_t c = 0; c < 6; ++c) s += (m(i, c) - mean[c]) * sign * vecs[j][c];
      CHECK(std::abs(r.scores(i, j) - s) < 1e-8);
    }
  }
  CHECK(reconstruction_error(m, r) < 1e-8);
}

TEST_CASE("pca degenerate input and parameter checks") {
  const auto same = from_rows({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  const auto r = pca(same, 2);
  for (double v : r.explained_variance_ratio) CHECK(v == 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(r.scores(i, j) == 0.0);

  CHECK(code_of([&] { pca(same, 0); }) == ErrorCode::BadParameter);
  CHECK(code_of([&] { pca(same, 3); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { pca(from_rows({{1, 2}}), 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("jacobi eigen decomposition") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  const std::size_t n = 12;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = g(rng);
  const auto e = jacobi_eigen(a);
  for (std::size_t j = 0; j + 1 < n; ++j) CHECK(e.values[j] >= e.values[j + 1]);
  // A v = lambda v and V orthonormal
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) {
      double av = 0;
      for (std::size_t c = 0; c < n; ++c) av += a(r, c) * e.vectors(c, j);
      CHECK(std::abs(av - e.values[j] * e.vectors(r, j)) < 1e-10);
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      double d = 0;
      for (std::size_t r = 0; r < n; ++r) d += e.vectors(r, p) * e.vectors(r, q);
      CHECK(std::abs(d - (p == q ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("assemble") {
  std::vector<EfdSet> three;
  for (const auto& s : builtin_corpus()) {
    three.push_back(normalize_true(compute_harmonics(s.contour, 35)).efd);
    if (three.size() == 3) break;
  }
  const auto fm = assemble(three, {"a", "b", "c"});
  CHECK(fm.values.rows() == 3);
  CHECK(fm.values.cols() == 140);
  CHECK(fm.values(1, 0) == three[1].harmonic(1).a);
  CHECK(fm.values(2, 139) == three[2].harmonic(35).d);

  const auto shape = builtin_corpus()[3].contour;
  std::vector<EfdSet> nine;
  for (const auto& v : nine_suite(shape)) nine.push_back(normalize_true(compute_harmonics(v, 35)).efd);
  const auto rep = assemble(nine, std::vector<std::string>(9, "leaf"));
  for (std::size_t i = 1; i < 9; ++i)
    for (std::size_t j = 0; j < 140; ++j) CHECK(std::abs(rep.values(i, j) - rep.values(0, j)) < 1e-8);

  auto mixed = three;
  mixed.push_back(normalize_true(compute_harmonics(shape, 5)).efd);
  CHECK(code_of([&] { assemble(mixed, {"a", "b", "c", "d"}); }) == ErrorCode::MixedHarmonicCounts);
  CHECK(code_of([&] { assemble(three, {"a"}); }) == ErrorCode::BadParameter);
}

TEST_CASE("property: nine-transform copies share their scores") {
  std::vector<EfdSet> rows;
  std::vector<std::string> labels;
  for (const auto& s : builtin_corpus())
    for (const auto& v : nine_suite(s.contour)) {
      rows.push_back(normalize_true(compute_harmonics(v, 35)).efd);
      labels.push_back(s.name);
    }
  const auto fm = assemble(rows, labels);
  CHECK(fm.values.rows() == 54);
  const auto r = pca(fm.values, 5);
  for (std::size_t j = 0; j + 1 < 5; ++j)
    CHECK(r.explained_variance_ratio[j] >= r.explained_variance_ratio[j + 1]);
  for (std::size_t shape = 0; shape < 6; ++shape)
    for (std::size_t i = 1; i < 9; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        CHECK(std::abs(r.scores(shape * 9 + i, j) - r.scores(shape * 9, j)) < 1e-6);
  double sum = 0;
  for (double v : r.explained_variance_ratio) sum += v;
  CHECK(sum <= 1 + 1e-12);
}

TEST_CASE("score outputs") {
  const auto r = pca(from_rows({{1, 2}, {2, 5}, {3, 6}, {0, 1}}), 2);
  const auto csv = format_scores_csv(r, {"p", "q", "r", "s"});
  CHECK(csv.rfind("# explained_variance_ratio: ", 0) == 0);
  CHECK(csv.find("\nlabel,pc1,pc2\n") != std::string::npos);
  CHECK(csv.find("\nq,") != std::string::npos);
  const auto svg = scores_scatter_svg(r, {"p", "q", "p", "q"});
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(svg.size() > 8);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(svg == scores_scatter_svg(r, {"p", "q", "p", "q"}));
  CHECK(svg.find("PC1") != std::string::npos);
}
