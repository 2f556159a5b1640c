#pragma once

// Dense exact matrices with a deterministic reduced row echelon form,
// kernels, and canonical subspaces (used for span membership and equality).

#include "grpder/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace grpder {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols,
                          const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& at(std::size_t r, std::size_t c) const;
  Vec row(std::size_t r) const;

  bool operator==(const Matrix& o) const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Canonical RREF: columns scanned left to right, pivot taken from the first
// remaining row with a nonzero entry; pivots scaled to 1 and their columns
// cleared. Identical inputs give bit-identical outputs.
Matrix rref(Matrix m);
std::size_t rank(const Matrix& m);

// One solution of A x = rhs with every free variable set to 0, or nullopt if
// the system is inconsistent.
std::optional<Vec> solve_particular(const Matrix& a, const Vec& rhs);

// A subspace of F^ambient held as its canonical RREF basis (rows, no zero
// rows). Equality of subspaces is equality of canonical bases.
class Subspace {
 public:
  Subspace(const FieldSpec& f, std::size_t ambient);  // zero subspace
  static Subspace span_of_rows(const Matrix& vectors);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return basis_.field(); }

  bool member(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

inline bool subspace_equal(const Subspace& x, const Subspace& y) { return x == y; }

// Kernel {x : m x = 0}, canonical basis.
Subspace kernel(const Matrix& m);

}  // namespace grpder
