#include "grpder/matrix.hpp"

#include <stdexcept>
#include <string>

namespace grpder {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw MismatchError("row length " + std::to_string(rows[r].size()) +
                          " != column count " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return a_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return a_[r * cols_ + c];
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t k = r; k < rows; ++k)
      if (!m.at(k, c).is_zero()) {
        piv = k;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    const Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m.at(k, c).is_zero()) continue;
      const Scalar f = m.at(k, c);
      for (std::size_t j = c; j < cols; ++j)
        m.at(k, j) = m.at(k, j) - f * m.at(r, j);
    }
    ++r;
  }
  return m;
}

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
  std::vector<std::size_t> pivs;
  for (std::size_t r = 0; r < reduced.rows(); ++r)
    for (std::size_t c = pivs.empty() ? 0 : pivs.back() + 1; c < reduced.cols(); ++c)
      if (!reduced.at(r, c).is_zero()) {
        pivs.push_back(c);
        break;
      }
  return pivs;
}

}  // namespace

std::size_t rank(const Matrix& m) { return pivot_columns(rref(m)).size(); }

std::optional<Vec> solve_particular(const Matrix& a, const Vec& rhs) {
  if (rhs.size() != a.rows()) throw MismatchError("rhs length != row count");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = rhs[r];
  }
  const Matrix red = rref(std::move(aug));
  const auto pivs = pivot_columns(red);
  if (!pivs.empty() && pivs.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < pivs.size(); ++i) x[pivs[i]] = red.at(i, a.cols());
  return x;
}

Subspace::Subspace(const FieldSpec& f, std::size_t ambient)
    : ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span_of_rows(const Matrix& vectors) {
  const Matrix red = rref(vectors);
  const std::size_t dim = pivot_columns(red).size();
  Matrix basis(vectors.field(), dim, vectors.cols());
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < vectors.cols(); ++c) basis.at(r, c) = red.at(r, c);
  Subspace s(vectors.field(), vectors.cols());
  s.basis_ = std::move(basis);
  return s;
}

bool Subspace::member(const Vec& v) const {
  if (v.size() != ambient_) throw MismatchError("vector length != ambient dimension");
  Vec w = v;
  const auto pivs = pivot_columns(basis_);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar f = w[pivs[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivs[r]; c < ambient_; ++c)
      w[c] = w[c] - f * basis_.at(r, c);
  }
  for (const Scalar& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw MismatchError("ambient dimensions differ");
  for (std::size_t r = 0; r < o.basis_.rows(); ++r)
    if (!member(o.basis_.row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  const Matrix red = rref(m);
  const auto pivs = pivot_columns(red);
  std::vector<char> is_piv(m.cols(), 0);
  for (std::size_t c : pivs) is_piv[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_piv[fc]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[fc] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivs.size(); ++i) v[pivs[i]] = -red.at(i, fc);
    basis.push_back(std::move(v));
  }
  return Subspace::span_of_rows(Matrix::from_rows(m.field(), m.cols(), basis));
}

}  // namespace grpder
