#pragma once

// Integer and rational linear algebra for lattice computations.

#include <cstddef>
#include <vector>

#include "ppdiv/arith.hpp"

namespace ppdiv {

/// An integer matrix, read as a homomorphism Z^cols -> Z^rows.
class LatticeMap {
 public:
  LatticeMap() = default;
  LatticeMap(std::size_t rows, std::size_t cols);
  /// Builds a matrix from its rows; `cols` is needed only when `rows` is empty.
  explicit LatticeMap(std::vector<ZVector> rows, std::size_t cols = 0);

  static LatticeMap identity(std::size_t n);
  static LatticeMap from_columns(const std::vector<ZVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZVector row(std::size_t i) const;
  ZVector column(std::size_t j) const;
  std::vector<ZVector> row_vectors() const;

  LatticeMap transpose() const;
  ZVector apply(const ZVector& v) const;
  QVector apply(const QVector& v) const;

  friend LatticeMap operator*(const LatticeMap& a, const LatticeMap& b);
  friend bool operator==(const LatticeMap& a, const LatticeMap& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  LatticeMap U;
  LatticeMap S;
  LatticeMap V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const LatticeMap& A);

/// Basis of the saturated lattice ker(A) ∩ Z^cols.
std::vector<ZVector> kernel_basis(const LatticeMap& A);

/// A left inverse s with s * F = id for an injective F with torsion-free
/// cokernel. Throws NotSplit otherwise. Deterministic: derived from the SNF.
LatticeMap section_of_embedding(const LatticeMap& F);

/// A surjection P with P * F = 0 and ker P = image F (for saturated F).
LatticeMap cokernel_projection(const LatticeMap& F);

/// Invariant factors of Z^rank / <gens>, one per coordinate, 0 meaning a free
/// summand; listed in SNF order d_1 | d_2 | ... with zeros last.
std::vector<Integer> quotient_invariants(std::size_t ambient_rank, const std::vector<ZVector>& gens);

/// Canonical (row Hermite normal form) basis of the lattice generated by `gens`.
std::vector<ZVector> hermite_basis(const std::vector<ZVector>& gens, std::size_t dim);

/// Saturated integer basis of Q-span(gens) ∩ Z^dim, in canonical Hermite form.
std::vector<ZVector> saturated_span(const std::vector<ZVector>& gens, std::size_t dim);

/// Rank over Q.
std::size_t rank(const std::vector<QVector>& rows);
std::size_t rank(const std::vector<ZVector>& rows);

/// Canonical basis of the subspace spanned by `rows`: reduced row echelon form
/// with each row rescaled to a primitive integer vector.
std::vector<ZVector> canonical_span(const std::vector<ZVector>& rows, std::size_t dim);

/// Integer basis of the rational kernel {x : <r, x> = 0 for all rows r}.
std::vector<ZVector> rational_kernel(const std::vector<ZVector>& rows, std::size_t dim);

/// Solves the square nonsingular system A x = b over Q.
QVector solve(const std::vector<QVector>& A, const QVector& b);

}  // namespace ppdiv
