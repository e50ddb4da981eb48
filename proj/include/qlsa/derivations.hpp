#pragma once

// Derivation spaces Der(g), skew-symmetric derivations Der_a(g,B) and inner
// derivations, solved as one linear system in the entries of D.
//
// Only even (parity-preserving) derivations are computed. Matrices act on
// columns: column j of D is D(e_j).

#include "qlsa/superalgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlsa {

enum class DerivationKind { all, skew, inner };

std::string to_string(DerivationKind k);
DerivationKind parse_derivation_kind(const std::string& text);

template <FieldScalar S>
struct DerivationSpace {
  DerivationKind kind = DerivationKind::all;
  std::vector<Matrix<S>> basis;

  Index dim() const { return static_cast<Index>(basis.size()); }

  /// The span as a subspace of vectorized n x n matrices.
  Subspace<S> as_subspace(Index n) const {
    std::vector<Vector<S>> gens;
    for (const auto& d : basis) gens.push_back(vectorize<S>(d));
    return Subspace<S>::span(gens, n * n);
  }

  bool contains(const Matrix<S>& d) const { return as_subspace(d.rows()).contains(vectorize<S>(d)); }
};

namespace detail {

/// Positions (row, col) of D that may be nonzero for an even derivation.
inline std::vector<std::pair<Index, Index>> even_entries(const SuperVectorSpace& space) {
  std::vector<std::pair<Index, Index>> out;
  for (Index c = 0; c < space.dim(); ++c)
    for (Index r = 0; r < space.dim(); ++r)
      if (space.parity(r) == space.parity(c)) out.emplace_back(r, c);
  return out;
}

/// Rows: Leibniz equations, one per (i, j, k) with i <= j, then (if a form is
/// given) skewness equations D^T G + G D = 0. Columns: the even entries of D.
template <FieldScalar S>
Matrix<S> derivation_system(const LieSuperalgebra<S>& a, const BilinearForm<S>* form,
                            const std::vector<std::pair<Index, Index>>& unknowns) {
  const Index n = a.dim();
  const Index u = static_cast<Index>(unknowns.size());
  std::vector<std::vector<Index>> slot(static_cast<std::size_t>(n), std::vector<Index>(static_cast<std::size_t>(n), -1));
  for (Index t = 0; t < u; ++t) slot[static_cast<std::size_t>(unknowns[static_cast<std::size_t>(t)].first)]
                                      [static_cast<std::size_t>(unknowns[static_cast<std::size_t>(t)].second)] = t;
  const auto at = [&](Index r, Index c) { return slot[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };

  std::vector<Vector<S>> rows;
  // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], component k.
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vector<S> row = Vector<S>::Zero(u);
        for (Index m = 0; m < n; ++m) {
          const S& c = a.structure_constant(i, j, m);
          if (!is_zero(c) && at(k, m) >= 0) row(at(k, m)) += c;
        }
        for (Index l = 0; l < n; ++l) {
          const S& c1 = a.structure_constant(l, j, k);
          if (!is_zero(c1) && at(l, i) >= 0) row(at(l, i)) -= c1;
          const S& c2 = a.structure_constant(i, l, k);
          if (!is_zero(c2) && at(l, j) >= 0) row(at(l, j)) -= c2;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  if (form != nullptr) {
    const auto& g = form->gram;
    // B(D e_i, e_j) + B(e_i, D e_j) = sum_l D(l,i) G(l,j) + G(i,l) D(l,j).
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j) {
        Vector<S> row = Vector<S>::Zero(u);
        for (Index l = 0; l < n; ++l) {
          if (!is_zero(g(l, j)) && at(l, i) >= 0) row(at(l, i)) += g(l, j);
          if (!is_zero(g(i, l)) && at(l, j) >= 0) row(at(l, j)) += g(i, l);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  Matrix<S> system(static_cast<Index>(rows.size()), u);
  for (std::size_t r = 0; r < rows.size(); ++r) system.row(static_cast<Index>(r)) = rows[r].transpose();
  return system;
}

}  // namespace detail

/// Even derivations (kind all), skew-symmetric even derivations (kind skew,
/// `form` required) or inner derivations ad(e_i), e_i even (kind inner).
template <FieldScalar S>
DerivationSpace<S> derivation_space(const LieSuperalgebra<S>& a, DerivationKind kind,
                                    const BilinearForm<S>* form = nullptr) {
  const Index n = a.dim();
  DerivationSpace<S> out;
  out.kind = kind;
  if (kind == DerivationKind::inner) {
    std::vector<Vector<S>> gens;
    for (Index i = 0; i < a.space().dim_even(); ++i) gens.push_back(vectorize<S>(a.ad(i)));
    for (const auto& v : Subspace<S>::span(gens, n * n).basis()) out.basis.push_back(unvectorize<S>(v, n, n));
    return out;
  }
  if (kind == DerivationKind::skew && form == nullptr)
    throw std::invalid_argument("derivation_space: kind=skew needs a bilinear form");
  if (form != nullptr && form->gram.rows() != n)
    throw std::invalid_argument("derivation_space: form does not match the algebra dimension");
  const auto unknowns = detail::even_entries(a.space());
  const Matrix<S> system = detail::derivation_system(a, kind == DerivationKind::skew ? form : nullptr, unknowns);
  for (const auto& v : nullspace(system)) {
    Matrix<S> d = Matrix<S>::Zero(n, n);
    for (std::size_t t = 0; t < unknowns.size(); ++t) d(unknowns[t].first, unknowns[t].second) = v(static_cast<Index>(t));
    out.basis.push_back(std::move(d));
  }
  return out;
}

template <FieldScalar S>
DerivationSpace<S> derivation_space(const QuadraticAlgebra<S>& q, DerivationKind kind) {
  return derivation_space(q.algebra(), kind, &q.form());
}

/// D[X,Y] = [DX,Y] + [X,DY] on all basis pairs, for an even D.
template <FieldScalar S>
bool is_derivation(const LieSuperalgebra<S>& a, const Matrix<S>& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim()) return false;
  for (Index r = 0; r < a.dim(); ++r)
    for (Index c = 0; c < a.dim(); ++c)
      if (a.parity(r) != a.parity(c) && !is_zero(d(r, c))) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i; j < a.dim(); ++j) {
      const Vector<S> lhs = d * a.bracket(i, j);
      const Vector<S> rhs = a.bracket(Vector<S>(d.col(i)), unit_vector<S>(a.dim(), j)) +
                            a.bracket(unit_vector<S>(a.dim(), i), Vector<S>(d.col(j)));
      if (!is_zero(Vector<S>(lhs - rhs))) return false;
    }
  return true;
}

/// B(DX,Y) = -B(X,DY), i.e. D^T G + G D = 0.
template <FieldScalar S>
bool is_skew(const BilinearForm<S>& form, const Matrix<S>& d) {
  return is_zero(Matrix<S>(d.transpose() * form.gram + form.gram * d));
}

/// Coefficients lambda with D = sum_i lambda_i ad(e_i), or nothing if D is
/// an outer derivation. Throws if D is not a derivation.
template <FieldScalar S>
std::optional<Vector<S>> is_inner(const LieSuperalgebra<S>& a, const Matrix<S>& d) {
  if (!is_derivation(a, d)) throw std::invalid_argument("is_inner: matrix is not a derivation");
  const Index n = a.dim();
  Matrix<S> system(n * n, n);
  for (Index i = 0; i < n; ++i) system.col(i) = vectorize<S>(a.ad(i));
  return solve_linear<S>(system, vectorize<S>(d));
}

/// The solved skew-derivation family of g_{2n+2} (basis X_0..X_n, Y_0..Y_n):
///   D(Y_0) = sum alpha_i X_i + sum beta_i Y_i,
///   D(X_i) = sum_j a_ij X_j - beta_i X_0,
///   D(Y_i) = -sum_j a_ji Y_j - alpha_i X_0,
///   D(X_0) = 0,
/// one basis matrix per parameter a_ij, alpha_i, beta_i (n^2 + 2n in total).
DerivationSpace<Rational> skew_derivation_family_g2n2(int n);

/// The general member of that family for explicit parameters.
Matrix<Rational> g2n2_skew_derivation(const Matrix<Rational>& a_coeffs, const Vector<Rational>& alpha,
                                      const Vector<Rational>& beta);

}  // namespace qlsa
