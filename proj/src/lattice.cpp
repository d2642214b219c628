#include "rbd/lattice.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace rbd {

namespace {

void require_same_lattice(const ClassVector& x, const ClassVector& y, const char* op) {
  if (x.size() != y.size()) {
    std::ostringstream msg;
    msg << op << ": lattice mismatch (rank " << x.size() << " vs " << y.size() << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassVector

ClassVector::ClassVector(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("ClassVector needs at least the h-coefficient");
  }
}

ClassVector::ClassVector(std::initializer_list<long> coeffs) {
  if (coeffs.size() == 0) {
    throw DomainError("ClassVector needs at least the h-coefficient");
  }
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

ClassVector ClassVector::zero(AmbientLattice lattice) {
  return ClassVector(std::vector<Integer>(lattice.rank()));
}

ClassVector ClassVector::h(AmbientLattice lattice) {
  auto v = zero(lattice);
  v[0] = 1;
  return v;
}

ClassVector ClassVector::e(AmbientLattice lattice, std::size_t i) {
  if (i == 0 || i > lattice.n) {
    throw DomainError("exceptional index e" + std::to_string(i) + " out of range 1.." +
                      std::to_string(lattice.n));
  }
  auto v = zero(lattice);
  v[i] = 1;
  return v;
}

bool ClassVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

ClassVector& ClassVector::operator+=(const ClassVector& other) {
  require_same_lattice(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& other) {
  require_same_lattice(*this, other, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ClassVector& ClassVector::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::strong_ordering operator<=>(const ClassVector& a, const ClassVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string ClassVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (mag != 1) out << mag.get_str();
    if (i == 0) {
      out << 'h';
    } else {
      out << 'e' << i;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// Pairing

Integer pairing(const ClassVector& x, const ClassVector& y) {
  require_same_lattice(x, y, "pairing");
  Integer result = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) result -= x[i] * y[i];
  return result;
}

Integer square(const ClassVector& x) { return pairing(x, x); }

bool is_characteristic(const ClassVector& K) {
  return std::all_of(K.coeffs().begin(), K.coeffs().end(),
                     [](const Integer& c) { return mpz_odd_p(c.get_mpz_t()) != 0; });
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

IntMatrix gram_matrix(std::span<const ClassVector> vectors) {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g(i, j) = pairing(vectors[i], vectors[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [t.., t..], first in row-major order.
std::optional<Position> block_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  return best;
}

// Smallest nonzero |entry| among the diagonal, column t below it and row t
// to the right of it, scanned in that order.
std::optional<Position> cross_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (d(i, j) == 0) return;
    Integer a = abs(d(i, j));
    if (!best || a < best_abs) {
      best = Position{i, j};
      best_abs = a;
    }
  };
  consider(t, t);
  for (std::size_t i = t + 1; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  const std::size_t limit = std::min(d.rows(), d.cols());

  auto move_to_diagonal = [&](std::size_t t, Position p) {
    d.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    d.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = block_pivot(d, t);
    if (!pivot) break;
    move_to_diagonal(t, *pivot);

    for (;;) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_to_diagonal(t, *cross_pivot(d, t));
        continue;
      }
      // Row and column t are clear; enforce d_t | every remaining entry.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < d.rows() && !offending_row; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending_row = i;
            break;
          }
      if (!offending_row) break;
      d.add_row_multiple(t, *offending_row, Integer(1));
      u.add_row_multiple(t, *offending_row, Integer(1));
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    out.divisors.push_back(d(t, t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal complement

std::vector<ClassVector> orthogonal_complement_basis(AmbientLattice lattice,
                                                     std::span<const ClassVector> S) {
  const std::size_t rank = lattice.rank();
  for (const auto& s : S) {
    if (s.lattice() != lattice) throw DimensionMismatch("orthogonal complement: lattice mismatch");
  }
  std::vector<ClassVector> basis;
  if (S.empty()) {
    basis.push_back(ClassVector::h(lattice));
    for (std::size_t i = 1; i <= lattice.n; ++i) basis.push_back(ClassVector::e(lattice, i));
    return basis;
  }
  // Row r is the functional x -> pairing(x, S[r]) in coordinates.
  IntMatrix functionals(S.size(), rank);
  for (std::size_t r = 0; r < S.size(); ++r)
    for (std::size_t j = 0; j < rank; ++j) functionals(r, j) = j == 0 ? S[r][j] : Integer(-S[r][j]);

  SmithForm snf = smith_normal_form(functionals);
  for (std::size_t col = snf.rank(); col < rank; ++col) {
    std::vector<Integer> coeffs(rank);
    for (std::size_t j = 0; j < rank; ++j) coeffs[j] = snf.V(j, col);
    basis.emplace_back(std::move(coeffs));
  }
  return basis;
}

std::size_t span_rank(std::span<const ClassVector> vectors) {
  if (vectors.empty()) return 0;
  IntMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != m.cols()) throw DimensionMismatch("span_rank: lattice mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vectors[r][c];
  }
  return smith_normal_form(m).rank();
}

}  // namespace rbd
