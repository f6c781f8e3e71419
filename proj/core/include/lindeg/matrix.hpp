#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lindeg/error.hpp"

namespace lindeg {

using Rational = mpq_class;

/// Row-major dense matrix. Shape rows x cols; a map V -> W is stored as a
/// dim W x dim V matrix acting on column vectors.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<Rational>;

/// Field arithmetic over Q.
struct RationalOps {
  using value_type = Rational;
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const { return 1 / a; }
};

/// Field arithmetic over F_p with p < 2^32.
struct PrimeOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  explicit PrimeOps(std::uint64_t prime);
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
  bool is_zero(std::uint64_t a) const { return a == 0; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Rational& q) const;
};

bool is_prime(std::uint64_t p);

/// The base field of a representation.
struct Field {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t prime = 0;

  static Field rationals() { return {}; }
  static Field prime_field(std::uint64_t p);
  bool is_prime() const noexcept { return kind == Kind::Prime; }
  /// "Q" or "Fp:<p>".
  std::string to_string() const;
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;
};

template <class Ops>
DenseMatrix<typename Ops::value_type> identity(const Ops& ops, std::size_t n) {
  DenseMatrix<typename Ops::value_type> m(n, n, ops.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ops.one();
  return m;
}

template <class Ops>
DenseMatrix<typename Ops::value_type> multiply(const Ops& ops,
                                               const DenseMatrix<typename Ops::value_type>& a,
                                               const DenseMatrix<typename Ops::value_type>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  DenseMatrix<typename Ops::value_type> c(a.rows(), b.cols(), ops.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ops.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (ops.is_zero(b(k, j))) continue;
        c(i, j) = ops.add(c(i, j), ops.mul(a(i, k), b(k, j)));
      }
    }
  }
  return c;
}

/// In-place reduced row echelon form. Returns the rank; pivot columns are
/// appended to *pivots when given.
template <class Ops>
std::size_t row_reduce(const Ops& ops, DenseMatrix<typename Ops::value_type>& m,
                       std::vector<std::size_t>* pivots = nullptr) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && ops.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, row);
    const auto inv = ops.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = ops.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || ops.is_zero(m(r, col))) continue;
      const auto f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!ops.is_zero(m(row, c))) m(r, c) = ops.sub(m(r, c), ops.mul(f, m(row, c)));
      }
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return row;
}

template <class Ops>
std::size_t rank(const Ops& ops, DenseMatrix<typename Ops::value_type> m) {
  return row_reduce(ops, m);
}

/// Basis of the null space, as the columns of a cols x k matrix.
template <class Ops>
DenseMatrix<typename Ops::value_type> kernel(const Ops& ops,
                                             DenseMatrix<typename Ops::value_type> m) {
  std::vector<std::size_t> pivots;
  row_reduce(ops, m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  DenseMatrix<typename Ops::value_type> basis(m.cols(), m.cols() - pivots.size(), ops.zero());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = ops.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], k) = ops.sub(ops.zero(), m(r, free));
    }
    ++k;
  }
  return basis;
}

/// Independent columns of m spanning its column space.
template <class Ops>
DenseMatrix<typename Ops::value_type> column_basis(const Ops& ops,
                                                   const DenseMatrix<typename Ops::value_type>& m) {
  DenseMatrix<typename Ops::value_type> work = m;
  std::vector<std::size_t> pivots;
  row_reduce(ops, work, &pivots);
  DenseMatrix<typename Ops::value_type> out(m.rows(), pivots.size(), ops.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
  }
  return out;
}

/// [a | b] side by side.
template <class T>
DenseMatrix<T> hstack(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
  DenseMatrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

/// Rows [first, first + count) of m.
template <class T>
DenseMatrix<T> row_block(const DenseMatrix<T>& m, std::size_t first, std::size_t count) {
  DenseMatrix<T> out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(first + r, c);
  }
  return out;
}

/// Subspaces are given by spanning columns. {x : f x in span(u)}.
template <class Ops>
DenseMatrix<typename Ops::value_type> preimage(const Ops& ops,
                                               const DenseMatrix<typename Ops::value_type>& f,
                                               const DenseMatrix<typename Ops::value_type>& u) {
  auto neg_u = u;
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) neg_u(r, c) = ops.sub(ops.zero(), u(r, c));
  }
  auto k = kernel(ops, hstack(f, neg_u));
  return column_basis(ops, row_block(k, 0, f.cols()));
}

template <class Ops>
DenseMatrix<typename Ops::value_type> intersect(const Ops& ops,
                                                const DenseMatrix<typename Ops::value_type>& a,
                                                const DenseMatrix<typename Ops::value_type>& b) {
  auto neg_b = b;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) neg_b(r, c) = ops.sub(ops.zero(), b(r, c));
  }
  auto k = kernel(ops, hstack(a, neg_b));
  return column_basis(ops, multiply(ops, a, row_block(k, 0, a.cols())));
}

/// Entrywise reduction of a rational matrix into F_p. Throws FieldError when
/// a denominator vanishes mod p.
DenseMatrix<std::uint64_t> reduce_mod(const Matrix& m, const PrimeOps& ops);

/// Exact rank over the given field.
std::size_t rank(const Matrix& m, const Field& field = Field::rationals());

/// Product over the given field; over F_p the result has reduced entries.
Matrix multiply(const Matrix& a, const Matrix& b, const Field& field = Field::rationals());

Matrix identity_matrix(std::size_t n);

/// "a" or "a/b" in lowest terms; throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

}  // namespace lindeg
