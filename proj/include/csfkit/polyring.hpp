#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "csfkit/integer.hpp"

namespace csfkit {

/// v^alpha over n vertex variables, stored as a dense exponent vector.
class VertexMonomial {
 public:
  VertexMonomial() = default;
  explicit VertexMonomial(int n) : exps_(static_cast<std::size_t>(n), 0) {}
  explicit VertexMonomial(std::vector<int> exps);

  /// Product of the listed vertices (0-based), with repetition.
  static VertexMonomial from_vertices(int n, std::span<const int> vertices);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int v) const { return exps_[static_cast<std::size_t>(v)]; }
  std::span<const int> exponents() const { return exps_; }
  int degree() const;

  VertexMonomial operator*(const VertexMonomial& o) const;
  bool operator==(const VertexMonomial&) const = default;

  /// "v1^2*v3"; the unit monomial prints as "1".
  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic: lower total degree first, then lexicographically
/// larger exponent vectors first (v1^2 before v1*v2 before v2^2).
struct GradedLex {
  bool operator()(const VertexMonomial& a, const VertexMonomial& b) const;
};

/// Sparse polynomial with exact integer coefficients in n vertex variables.
class VPoly {
 public:
  using Terms = std::map<VertexMonomial, Integer, GradedLex>;

  VPoly() = default;
  explicit VPoly(int n) : n_(n) {}

  static VPoly constant(int n, const Integer& c);
  static VPoly variable(int n, int v);
  static VPoly monomial(const VertexMonomial& m, const Integer& c = 1);

  int vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * m in place; prunes zeros.
  void add_term(const VertexMonomial& m, const Integer& c);

  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  VPoly& operator*=(const Integer& c);
  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  friend VPoly operator*(VPoly a, const Integer& c) { return a *= c; }
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  VPoly operator-() const;

  bool operator==(const VPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void check_same_ring(const VPoly& o) const;

  int n_ = 0;
  Terms terms_;
};

/// [v^alpha] p; zero when absent.
Integer coeff_of(const VPoly& p, const VertexMonomial& alpha);

/// True iff every stored coefficient is positive (so the zero polynomial is).
bool is_monomial_positive(const VPoly& p);

inline bool is_zero(const VPoly& p) { return p.is_zero(); }

void to_json(nlohmann::json& j, const VPoly& p);
void from_json(const nlohmann::json& j, VPoly& p);

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

namespace detail {
template <class T>
T laplace(const Matrix<T>& m, int row, std::uint32_t used, const T& one) {
  if (row == m.rows()) return one;
  T acc = one - one;
  int sign_pos = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (used & (1u << c)) continue;
    const bool negative = (sign_pos++ % 2) == 1;
    if (is_zero(m(row, c))) continue;
    T minor = laplace(m, row + 1, used | (1u << c), one);
    if (is_zero(minor)) continue;
    T term = m(row, c) * minor;
    if (negative) acc -= term; else acc += term;
  }
  return acc;
}
}  // namespace detail

/// Exact determinant by cofactor expansion along rows, skipping zero entries.
/// `one` fixes the ring (e.g. the constant 1 in the right number of variables).
template <class T>
T determinant(const Matrix<T>& m, const T& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (m.rows() > 31) throw std::invalid_argument("determinant: matrix too large");
  return detail::laplace(m, 0, 0u, one);
}

}  // namespace csfkit
