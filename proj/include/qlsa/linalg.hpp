#pragma once

// Exact / tolerance-aware dense linear algebra: reduced row echelon form,
// rank, nullspace, linear solves, subspaces and small-matrix eigen-structure.

#include "qlsa/field.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qlsa {

using Index = Eigen::Index;

template <FieldScalar S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <FieldScalar S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <FieldScalar S>
bool is_zero(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <FieldScalar S>
bool is_zero(const Vector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

/// Largest entry magnitude; 0 for empty input.
template <typename Derived>
double max_magnitude(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  double best = 0.0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) best = std::max(best, FieldTraits<S>::magnitude(m(i, j)));
  return best;
}

template <FieldScalar S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(Matrix<S>(a - b));
}

template <FieldScalar S>
Matrix<S> identity(Index n) {
  return Matrix<S>::Identity(n, n);
}

template <FieldScalar S>
Vector<S> unit_vector(Index n, Index i) {
  Vector<S> v = Vector<S>::Zero(n);
  v(i) = S(1);
  return v;
}

/// Column-major flattening, used to treat matrices as vectors.
template <FieldScalar S>
Vector<S> vectorize(const Matrix<S>& m) {
  Vector<S> v(m.size());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

template <FieldScalar S>
Matrix<S> unvectorize(const Vector<S>& v, Index rows, Index cols) {
  Matrix<S> m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
  return m;
}

template <FieldScalar S>
Matrix<S> columns_to_matrix(const std::vector<Vector<S>>& cols, Index rows) {
  Matrix<S> m(rows, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
  return m;
}

/// Reduced row echelon form together with its pivot columns.
template <FieldScalar S>
struct EchelonForm {
  Matrix<S> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. Exact scalars pivot on the first nonzero entry,
/// complex scalars on the largest magnitude; entries within tolerance of zero
/// are flushed to exact zero as elimination proceeds.
template <FieldScalar S>
EchelonForm<S> row_echelon(Matrix<S> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  std::vector<Index> support;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    if constexpr (FieldTraits<S>::magnitude_pivoting) {
      double best = 0.0;
      for (Index i = r; i < rows; ++i) {
        double mag = FieldTraits<S>::magnitude(m(i, c));
        if (!is_zero(m(i, c)) && mag > best) {
          best = mag;
          p = i;
        }
      }
    } else {
      for (Index i = r; i < rows; ++i)
        if (!is_zero(m(i, c))) {
          p = i;
          break;
        }
    }
    if (p < 0) {
      for (Index i = r; i < rows; ++i) m(i, c) = S(0);
      continue;
    }
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    support.clear();
    for (Index j = c; j < cols; ++j) {
      if (is_zero(m(r, j))) {
        m(r, j) = S(0);
      } else {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    m(r, c) = S(1);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) {
        if (i != r) m(i, c) = S(0);
        continue;
      }
      const S factor = m(i, c);
      for (Index j : support) m(i, j) -= factor * m(r, j);
      m(i, c) = S(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <FieldScalar S>
Index rank(const Matrix<S>& a) {
  return row_echelon(a).rank();
}

/// Basis of {x : A x = 0}; rank(A) + size of the result equals A.cols().
template <FieldScalar S>
std::vector<Vector<S>> nullspace(const Matrix<S>& a) {
  const auto ef = row_echelon(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : ef.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector<S>> basis;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<S> v = Vector<S>::Zero(n);
    v(free) = S(1);
    for (Index r = 0; r < ef.rank(); ++r) v(ef.pivots[static_cast<std::size_t>(r)]) = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A particular solution of A x = b, or nothing if the system is inconsistent.
template <FieldScalar S>
std::optional<Vector<S>> solve_linear(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: A.rows() != b.size()");
  Matrix<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ef = row_echelon(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == a.cols()) return std::nullopt;
  Vector<S> x = Vector<S>::Zero(a.cols());
  for (Index r = 0; r < ef.rank(); ++r) x(ef.pivots[static_cast<std::size_t>(r)]) = ef.reduced(r, a.cols());
  return x;
}

/// A linear subspace of S^n, stored as the reduced row echelon form of any
/// spanning set. Equality of subspaces is equality of echelon forms.
template <FieldScalar S>
class Subspace {
 public:
  explicit Subspace(Index ambient = 0) : ambient_(ambient), echelon_(0, ambient) {}

  static Subspace zero(Index ambient) { return Subspace(ambient); }

  static Subspace whole(Index ambient) {
    Subspace s(ambient);
    s.echelon_ = identity<S>(ambient);
    for (Index i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  /// Span of the columns of `generators`.
  static Subspace span(const Matrix<S>& generators) {
    Subspace s(generators.rows());
    if (generators.cols() == 0) return s;
    auto ef = row_echelon(Matrix<S>(generators.transpose()));
    s.echelon_ = ef.reduced.topRows(ef.rank());
    s.pivots_ = std::move(ef.pivots);
    return s;
  }

  static Subspace span(const std::vector<Vector<S>>& generators, Index ambient) {
    return span(columns_to_matrix(generators, ambient));
  }

  Index dim() const { return echelon_.rows(); }
  Index ambient_dim() const { return ambient_; }
  bool is_zero() const { return dim() == 0; }

  /// Echelon basis, one basis vector per row.
  const Matrix<S>& echelon() const { return echelon_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Vector<S> basis_vector(Index i) const { return echelon_.row(i).transpose(); }

  std::vector<Vector<S>> basis() const {
    std::vector<Vector<S>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// Basis vectors as the columns of a matrix.
  Matrix<S> basis_matrix() const { return echelon_.transpose(); }

  bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    Vector<S> rest = v;
    for (Index r = 0; r < dim(); ++r) {
      const S coeff = rest(pivots_[static_cast<std::size_t>(r)]);
      if (!qlsa::is_zero(coeff)) rest -= coeff * basis_vector(r);
    }
    return qlsa::is_zero(rest);
  }

  bool contains(const Subspace& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    check_ambient(other);
    Matrix<S> gens(ambient_, dim() + other.dim());
    gens << basis_matrix(), other.basis_matrix();
    return span(gens);
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    if (is_zero() || other.is_zero()) return Subspace(ambient_);
    // u = U a = W b  <=>  [U | -W] (a; b) = 0
    Matrix<S> system(ambient_, dim() + other.dim());
    system << basis_matrix(), -other.basis_matrix();
    std::vector<Vector<S>> gens;
    for (const auto& k : nullspace(system)) gens.push_back(basis_matrix() * k.head(dim()));
    return span(gens, ambient_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim() || a.pivots_ != b.pivots_) return false;
    return approx_equal<S>(a.echelon_, b.echelon_);
  }

 private:
  void check_ambient(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  Index ambient_;
  Matrix<S> echelon_;
  std::vector<Index> pivots_;
};

// ---------------------------------------------------------------------------
// Small-matrix eigen-structure.

struct EigenStructure {
  bool is_nilpotent = false;
  bool is_semisimple = false;
};

namespace detail {

// Polynomials are coefficient vectors, lowest degree first, no trailing zeros.
template <FieldScalar S>
using Poly = std::vector<S>;

template <FieldScalar S>
void trim(Poly<S>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <FieldScalar S>
Poly<S> derivative(const Poly<S>& p) {
  Poly<S> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * S(static_cast<long>(k)));
  trim(d);
  return d;
}

/// Quotient and remainder of a / b, b nonzero.
template <FieldScalar S>
std::pair<Poly<S>, Poly<S>> divmod(Poly<S> a, const Poly<S>& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly<S>{}, a};
  Poly<S> q(a.size() - b.size() + 1, S(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const S c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

template <FieldScalar S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const S lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
template <FieldScalar S>
Poly<S> characteristic_polynomial(const Matrix<S>& a) {
  const Index n = a.rows();
  Poly<S> c(static_cast<std::size_t>(n) + 1, S(0));
  c[static_cast<std::size_t>(n)] = S(1);
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix<S> am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / S(static_cast<long>(k));
  }
  return c;
}

template <FieldScalar S>
Matrix<S> evaluate(const Poly<S>& p, const Matrix<S>& a) {
  Matrix<S> acc = Matrix<S>::Zero(a.rows(), a.cols());
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = a * acc;
    for (Index i = 0; i < a.rows(); ++i) acc(i, i) += p[k];
  }
  return acc;
}

bool complex_is_semisimple(const Matrix<Complex>& a);

}  // namespace detail

/// Nilpotency (A^n = 0) and semisimplicity of a square matrix of size <= 4.
/// Exact scalars decide semisimplicity by checking that the squarefree part
/// of the characteristic polynomial annihilates A; complex scalars cluster
/// numerically computed eigenvalues and compare geometric with algebraic
/// multiplicities.
template <FieldScalar S>
EigenStructure eigen_structure(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigen_structure: matrix must be square");
  if (a.rows() > 4) throw std::invalid_argument("eigen_structure: size > 4 not supported");
  EigenStructure out;
  Matrix<S> power = identity<S>(a.rows());
  for (Index k = 0; k < a.rows(); ++k) power = power * a;
  out.is_nilpotent = is_zero(power);
  if constexpr (FieldTraits<S>::backend == Backend::exact) {
    const auto p = detail::characteristic_polynomial(a);
    const auto squarefree = detail::divmod(p, detail::gcd(p, detail::derivative(p))).first;
    out.is_semisimple = is_zero(detail::evaluate(squarefree, a));
  } else {
    out.is_semisimple = detail::complex_is_semisimple(a);
  }
  return out;
}

}  // namespace qlsa
