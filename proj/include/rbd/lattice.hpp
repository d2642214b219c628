#pragma once

// Exact arithmetic in the Lorentzian lattice Z^{1,n} = H_2(CP^2 # n(-CP^2); Z).
//
// Coordinates: index 0 is the hyperplane class h (h.h = +1), indices 1..n
// are the exceptional classes e_1..e_n (e_i.e_i = -1). The basis is
// orthogonal and the form is unimodular, so Poincare duality is the
// identity on coordinates; a cohomology class PD(x) is stored as x.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rbd/errors.hpp"

namespace rbd {

using Integer = mpz_class;
using Rational = mpq_class;

/// The lattice Z^{1,n}; rank n+1, signature (1, n).
struct AmbientLattice {
  std::size_t n = 0;

  std::size_t rank() const noexcept { return n + 1; }
  friend bool operator==(const AmbientLattice&, const AmbientLattice&) = default;
};

/// A second-homology class, stored as (c_h, c_1, ..., c_n).
class ClassVector {
 public:
  /// Zero class of CP^2 (n = 0).
  ClassVector() : coeffs_(1) {}
  explicit ClassVector(std::vector<Integer> coeffs);
  ClassVector(std::initializer_list<long> coeffs);

  static ClassVector zero(AmbientLattice lattice);
  static ClassVector h(AmbientLattice lattice);
  /// Exceptional class e_i, 1 <= i <= n.
  static ClassVector e(AmbientLattice lattice, std::size_t i);

  AmbientLattice lattice() const noexcept { return {coeffs_.size() - 1}; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const;

  ClassVector& operator+=(const ClassVector& other);
  ClassVector& operator-=(const ClassVector& other);
  ClassVector& operator*=(const Integer& scalar);

  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(const Integer& s, ClassVector a) { return a *= s; }
  friend ClassVector operator-(ClassVector a) { return a *= Integer(-1); }

  friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.coeffs_ == b.coeffs_; }
  /// Lexicographic on (rank, c_h, c_1, ...). Used for deterministic output order.
  friend std::strong_ordering operator<=>(const ClassVector& a, const ClassVector& b);

  /// Human-readable form such as "6h-2e1-e11".
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// The intersection pairing c_h(x)c_h(y) - sum_i c_i(x)c_i(y).
Integer pairing(const ClassVector& x, const ClassVector& y);

Integer square(const ClassVector& x);

/// K is characteristic iff K.x = x.x (mod 2) for every x.
///
/// In an orthogonal basis with diagonal entries +-1 it suffices to test the
/// basis vectors: K.b_i = +-c_i(K) and b_i.b_i = +-1, so the congruence on
/// b_i says c_i(K) is odd, and both sides of the congruence are additive mod 2
/// ((x+y)^2 = x^2 + y^2 mod 2). Hence: characteristic iff every coefficient is odd.
bool is_characteristic(const ClassVector& K);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// Gram matrix G_ij = pairing(v_i, v_j).
IntMatrix gram_matrix(std::span<const ClassVector> vectors);

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  /// Nonzero diagonal entries d_1..d_rank in order.
  std::vector<Integer> divisors;

  std::size_t rank() const noexcept { return divisors.size(); }
};

/// Smith normal form with transforms. The pivot at each step is the entry of
/// smallest nonzero absolute value in the active block, ties broken row-major,
/// so the output is a deterministic function of the input.
SmithForm smith_normal_form(const IntMatrix& m);

/// A basis of {x in Z^{1,n} : pairing(x, s) = 0 for all s in S}.
/// The basis is read off the column transform of the Smith form of the matrix
/// of linear functionals x -> pairing(x, s).
std::vector<ClassVector> orthogonal_complement_basis(AmbientLattice lattice,
                                                     std::span<const ClassVector> S);

/// Rank of the span of the given vectors.
std::size_t span_rank(std::span<const ClassVector> vectors);

}  // namespace rbd
