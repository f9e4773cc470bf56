#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "efa/efd.hpp"

namespace efa {

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct FeatureMatrix {
  Matrix values;  // one row per shape, 4N columns (a1, b1, c1, d1, ...)
  std::vector<std::string> labels;
};

/// Flattens normalized sets into rows. Throws MixedHarmonicCounts.
FeatureMatrix assemble(const std::vector<EfdSet>& efds, const std::vector<std::string>& labels);

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column j pairs with values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi rotation; stops once the off-diagonal Frobenius norm is
/// below `tolerance` times the matrix norm.
SymmetricEigen jacobi_eigen(Matrix a, double tolerance = 1e-12, int max_sweeps = 100);

struct PcaResult {
  Matrix scores;    // rows x k
  Matrix loadings;  // cols x k
  std::vector<double> explained_variance_ratio;
  std::vector<double> eigenvalues;  // k leading covariance eigenvalues
  std::vector<double> mean;         // column means
};

/// Covariance PCA. Components are sorted by decreasing variance and signed so
/// the largest-magnitude loading entry is positive. All-identical rows give
/// zero scores and zero ratios.
PcaResult pca(const Matrix& m, int k);

std::string format_scores_csv(const PcaResult& r, const std::vector<std::string>& labels);
std::string scores_scatter_svg(const PcaResult& r, const std::vector<std::string>& labels);

}  // namespace efa
