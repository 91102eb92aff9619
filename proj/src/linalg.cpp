#include "necklace/linalg.hpp"

#include <stdexcept>

namespace necklace {

namespace {
Eigen::FullPivLU<MatQ> exact_lu(const MatQ& m) {
  Eigen::FullPivLU<MatQ> lu(m);
  lu.setThreshold(Rational(0));
  return lu;
}

struct Echelon {
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
};

// Leftmost-column, topmost-row Gaussian pivots; deterministic.
Echelon gauss_pivots(const MatQ& m) {
  MatQ work = m;
  Echelon e;
  std::vector<bool> used(static_cast<size_t>(work.rows()), false);
  for (int col = 0; col < work.cols(); ++col) {
    int pivot = -1;
    for (int row = 0; row < work.rows(); ++row) {
      if (!used[static_cast<size_t>(row)] && work(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    used[static_cast<size_t>(pivot)] = true;
    e.pivot_rows.push_back(pivot);
    e.pivot_cols.push_back(col);
    for (int row = 0; row < work.rows(); ++row) {
      if (row == pivot || work(row, col) == 0) continue;
      Rational f = work(row, col) / work(pivot, col);
      for (int c = col; c < work.cols(); ++c) work(row, c) -= f * work(pivot, c);
    }
  }
  return e;
}
}  // namespace

int rank_of(const MatQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(exact_lu(m).rank());
}

MatQ kernel_basis(const MatQ& m) {
  if (m.cols() == 0) return MatQ(0, 0);
  if (m.rows() == 0) return MatQ::Identity(m.cols(), m.cols());
  auto lu = exact_lu(m);
  int null_dim = static_cast<int>(m.cols()) - static_cast<int>(lu.rank());
  if (null_dim == 0) return MatQ(m.cols(), 0);
  return lu.kernel();
}

std::optional<VecQ> try_solve(const MatQ& m, const VecQ& b) {
  if (m.cols() == 0) {
    if (b.isZero(Rational(0))) return VecQ(0);
    return std::nullopt;
  }
  if (m.rows() == 0) return VecQ::Zero(m.cols());
  auto lu = exact_lu(m);
  VecQ x = lu.solve(b);
  if ((m * x - b).isZero(Rational(0))) return x;
  return std::nullopt;
}

bool in_span(const MatQ& columns, const VecQ& v) {
  return try_solve(columns, v).has_value();
}

std::optional<VecQ> span_coefficients(const MatQ& columns, const VecQ& v) {
  return try_solve(columns, v);
}

bool span_contains(const MatQ& big, const MatQ& sub) {
  for (int j = 0; j < sub.cols(); ++j)
    if (!in_span(big, sub.col(j))) return false;
  return true;
}

bool spans_equal(const MatQ& a, const MatQ& b) {
  return span_contains(a, b) && span_contains(b, a);
}

std::vector<int> pivot_rows(const MatQ& m) { return gauss_pivots(m).pivot_rows; }

QuotientSpace::QuotientSpace(MatQ subspace, int total_dim) : total_dim_(total_dim) {
  if (subspace.rows() != 0 && subspace.rows() != total_dim)
    throw std::invalid_argument("QuotientSpace: subspace row count mismatch");

  // Keep an independent subset of the spanning columns, leftmost first.
  MatQ basis(total_dim, 0);
  if (subspace.cols() > 0) {
    Echelon e = gauss_pivots(subspace);
    basis = MatQ(total_dim, static_cast<int>(e.pivot_cols.size()));
    for (size_t k = 0; k < e.pivot_cols.size(); ++k)
      basis.col(static_cast<int>(k)) = subspace.col(e.pivot_cols[k]);
  }
  rank_ = static_cast<int>(basis.cols());

  std::vector<int> piv = rank_ > 0 ? gauss_pivots(basis).pivot_rows : std::vector<int>{};
  std::vector<bool> is_pivot(static_cast<size_t>(total_dim), false);
  for (int r : piv) is_pivot[static_cast<size_t>(r)] = true;
  for (int r = 0; r < total_dim; ++r)
    if (!is_pivot[static_cast<size_t>(r)]) complement_rows_.push_back(r);

  extended_ = MatQ::Zero(total_dim, total_dim);
  if (rank_ > 0) extended_.leftCols(rank_) = basis;
  for (size_t k = 0; k < complement_rows_.size(); ++k)
    extended_(complement_rows_[k], rank_ + static_cast<int>(k)) = Rational(1);
  if (total_dim_ > 0) {
    lu_ = Eigen::FullPivLU<MatQ>(extended_);
    lu_.setThreshold(Rational(0));
    if (static_cast<int>(lu_.rank()) != total_dim)
      throw std::logic_error("QuotientSpace: complement completion failed");
  }
}

VecQ QuotientSpace::reduce(const VecQ& v) const {
  if (v.size() != total_dim_) throw std::invalid_argument("QuotientSpace::reduce: size mismatch");
  if (total_dim_ == 0) return VecQ(0);
  VecQ full = lu_.solve(v);
  return full.tail(dim());
}

bool QuotientSpace::in_subspace(const VecQ& v) const {
  return total_dim_ == 0 || reduce(v).isZero(Rational(0));
}

}  // namespace necklace
