#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <vector>

#include "necklace/rational.hpp"

namespace necklace {

/// Dense exact-rational matrix/vector types. All solves, ranks and kernels
/// in the library run through these; pivoting compares exact magnitudes, so
/// every result below is exact (threshold 0, no epsilons).
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

int rank_of(const MatQ& m);

/// Basis of ker(m) as columns (n x (n - rank)).
MatQ kernel_basis(const MatQ& m);

/// Exact solution of m x = b, or nullopt when the system is inconsistent.
/// The particular solution is the LU one: zero on non-pivot columns.
std::optional<VecQ> try_solve(const MatQ& m, const VecQ& b);

bool in_span(const MatQ& columns, const VecQ& v);
std::optional<VecQ> span_coefficients(const MatQ& columns, const VecQ& v);

/// span(sub) ⊆ span(big), spans compared as column spaces.
bool span_contains(const MatQ& big, const MatQ& sub);
bool spans_equal(const MatQ& a, const MatQ& b);

/// Leftmost-pivot row indices of a matrix with full column rank.
std::vector<int> pivot_rows(const MatQ& m);

/// K^D / span(subspace columns), with exact reduction to quotient
/// coordinates along a deterministic unit-vector complement.
class QuotientSpace {
 public:
  QuotientSpace(MatQ subspace, int total_dim);

  int total_dim() const { return total_dim_; }
  int subspace_rank() const { return rank_; }
  int dim() const { return total_dim_ - rank_; }

  /// Coordinates of [v] in the chosen complement basis (size dim()).
  VecQ reduce(const VecQ& v) const;
  bool in_subspace(const VecQ& v) const;

  const std::vector<int>& complement_rows() const { return complement_rows_; }

 private:
  int total_dim_ = 0;
  int rank_ = 0;
  std::vector<int> complement_rows_;
  MatQ extended_;  // [subspace-basis | unit complement], square and invertible
  Eigen::FullPivLU<MatQ> lu_;
};

}  // namespace necklace
