#include "ppdiv/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ppdiv {

LatticeMap::LatticeMap(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

LatticeMap::LatticeMap(std::vector<ZVector> rows, std::size_t cols)
    : rows_(rows.size()), cols_(rows.empty() ? cols : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (auto& x : r) data_.push_back(std::move(x));
  }
}

LatticeMap LatticeMap::identity(std::size_t n) {
  LatticeMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LatticeMap LatticeMap::from_columns(const std::vector<ZVector>& columns, std::size_t rows) {
  LatticeMap m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(Errc::DimensionMismatch, "column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ZVector LatticeMap::row(std::size_t i) const {
  return ZVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

ZVector LatticeMap::column(std::size_t j) const {
  ZVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<ZVector> LatticeMap::row_vectors() const {
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

LatticeMap LatticeMap::transpose() const {
  LatticeMap t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ZVector LatticeMap::apply(const ZVector& v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
  ZVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

QVector LatticeMap::apply(const QVector& v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
  QVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += Rational((*this)(i, j)) * v[j];
  return out;
}

LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product size mismatch");
  LatticeMap c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

void swap_rows(LatticeMap& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(LatticeMap& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void add_row_multiple(LatticeMap& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col_multiple(LatticeMap& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const LatticeMap& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  LatticeMap S = A;
  LatticeMap U = LatticeMap::identity(m);
  LatticeMap V = LatticeMap::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        exhausted = true;
        break;
      }
      swap_rows(S, t, pi);
      swap_rows(U, t, pi);
      swap_cols(S, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        add_row_multiple(S, i, t, q);
        add_row_multiple(U, i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        add_col_multiple(S, j, t, q);
        add_col_multiple(V, j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            // Fold row i into row t; the next pass produces a smaller pivot.
            add_row_multiple(S, t, i, Integer(-1));
            add_row_multiple(U, t, i, Integer(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (exhausted) break;
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }
  return {std::move(U), std::move(S), std::move(V)};
}

std::vector<ZVector> kernel_basis(const LatticeMap& A) {
  SmithForm snf = smith_normal_form(A);
  const std::size_t r = snf.rank();
  std::vector<ZVector> basis;
  for (std::size_t j = r; j < A.cols(); ++j) basis.push_back(snf.V.column(j));
  return hermite_basis(basis, A.cols());
}

namespace {

SmithForm split_smith_form(const LatticeMap& F) {
  SmithForm snf = smith_normal_form(F);
  const auto diag = snf.diagonal();
  if (snf.rank() != F.cols()) throw Error(Errc::NotSplit, "embedding is not injective");
  for (const auto& d : diag)
    if (d != 1) throw Error(Errc::NotSplit, "cokernel has torsion (invariant factor " + d.str() + ")");
  return snf;
}

}  // namespace

LatticeMap section_of_embedding(const LatticeMap& F) {
  SmithForm snf = split_smith_form(F);
  const std::size_t k = F.cols();
  LatticeMap top(k, F.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < F.rows(); ++j) top(i, j) = snf.U(i, j);
  return snf.V * top;
}

LatticeMap cokernel_projection(const LatticeMap& F) {
  split_smith_form(F);
  // Rows: Hermite basis of the saturated lattice ker(F^T); they extend to a
  // unimodular matrix, so P is onto with kernel image(F).
  return LatticeMap(kernel_basis(F.transpose()), F.rows());
}

std::vector<Integer> quotient_invariants(std::size_t ambient_rank, const std::vector<ZVector>& gens) {
  for (const auto& g : gens)
    if (g.size() != ambient_rank) throw Error(Errc::DimensionMismatch, "generator of wrong length");
  std::vector<Integer> factors(ambient_rank, Integer(0));
  if (gens.empty() || ambient_rank == 0) return factors;
  SmithForm snf = smith_normal_form(LatticeMap::from_columns(gens, ambient_rank));
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) factors[i] = diag[i];
  return factors;
}

std::vector<ZVector> hermite_basis(const std::vector<ZVector>& gens, std::size_t dim) {
  std::vector<ZVector> rows = gens;
  for (const auto& r : rows)
    if (r.size() != dim) throw Error(Errc::DimensionMismatch, "generator of wrong length");
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = rows[i][col] / rows[r][col];
        for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows.size() || rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor(Rational(rows[i][col], rows[r][col]));
      if (q != 0)
        for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(const std::vector<QVector>& input) {
  std::vector<QVector> rows = input;
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<ZVector>& rows) {
  std::vector<QVector> q;
  for (const auto& r : rows) q.push_back(to_rational(r));
  return rank(q);
}

std::vector<ZVector> canonical_span(const std::vector<ZVector>& input, std::size_t dim) {
  std::vector<QVector> rows;
  for (const auto& r : input) {
    if (r.size() != dim) throw Error(Errc::DimensionMismatch, "vector of wrong length");
    rows.push_back(to_rational(r));
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(primitive(rows[i]));
  return out;
}

std::vector<ZVector> rational_kernel(const std::vector<ZVector>& rows, std::size_t dim) {
  if (rows.empty()) {
    std::vector<ZVector> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      ZVector e = zero_zvector(dim);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(LatticeMap(rows, dim));
}

std::vector<ZVector> saturated_span(const std::vector<ZVector>& gens, std::size_t dim) {
  std::vector<ZVector> nonzero;
  for (const auto& g : gens)
    if (!is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  return rational_kernel(rational_kernel(nonzero, dim), dim);
}

QVector solve(const std::vector<QVector>& A, const QVector& b) {
  const std::size_t n = A.size();
  std::vector<QVector> m = A;
  QVector rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == n) throw Error(Errc::InvalidInput, "singular system");
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace ppdiv
