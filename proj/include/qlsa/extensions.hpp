#pragma once

// Constructions of new quadratic (super)algebras: one-dimensional and general
// double extensions, T*-extensions by a 2-cocycle, super double extensions of
// a Lie algebra by a symplectic representation, odd T*s-extensions by a
// symmetric pairing, and orthogonal direct sums.
//
// The coadjoint action is ad*(X)f = -f o ad(X), so [X_a, X_k*] =
// -sum_j c(a,j,k) X_j*. Dual basis vectors are labelled `name*`.
// Every constructor validates its inputs eagerly and throws ExtensionError,
// carrying the failed checks, instead of producing a non-Lie output.

#include "qlsa/derivations.hpp"
#include "qlsa/superalgebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlsa {

class ExtensionError : public std::runtime_error {
 public:
  explicit ExtensionError(const std::string& what, Report report = {})
      : std::runtime_error(what + (report.checks().empty() ? "" : "\n" + report.to_text())),
        report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Dense n x n x n array, used for theta(e_i,e_j)(e_k) and phi(e_i*,e_j*)_k.
template <FieldScalar S>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Index n) : n_(n), data_(Vector<S>::Zero(n * n * n)) {}

  Index size() const { return n_; }
  S& operator()(Index i, Index j, Index k) { return data_(offset(i, j, k)); }
  const S& operator()(Index i, Index j, Index k) const { return data_(offset(i, j, k)); }
  const Vector<S>& flat() const { return data_; }

  static Tensor3 from_flat(Index n, Vector<S> flat) {
    Tensor3 t(n);
    t.data_ = std::move(flat);
    return t;
  }

  Tensor3 operator*(const S& s) const { return from_flat(n_, Vector<S>(data_ * s)); }
  bool is_zero() const { return qlsa::is_zero<S>(data_); }

 private:
  Index offset(Index i, Index j, Index k) const { return (i * n_ + j) * n_ + k; }
  Index n_ = 0;
  Vector<S> data_;
};

/// A skew-symmetric bilinear map theta : g x g -> g*.
template <FieldScalar S>
struct Cocycle2 {
  LieSuperalgebra<S> base;
  Tensor3<S> theta;

  static Cocycle2 zero(const LieSuperalgebra<S>& g) { return {g, Tensor3<S>(g.dim())}; }

  /// Sets theta(a,b) = value * c*, and theta(b,a) = -value * c*.
  Cocycle2& set(std::string_view a, std::string_view b, std::string_view dual_of, const S& value) {
    const Index i = base.space().index_of(a), j = base.space().index_of(b), k = base.space().index_of(dual_of);
    theta(i, j, k) = value;
    theta(j, i, k) = -value;
    return *this;
  }
};

/// A symmetric bilinear map phi : g* x g* -> g.
template <FieldScalar S>
struct SymPairing {
  LieSuperalgebra<S> base;
  Tensor3<S> phi;

  static SymPairing zero(const LieSuperalgebra<S>& g) { return {g, Tensor3<S>(g.dim())}; }

  /// Adds value * c to phi(a*, b*) and phi(b*, a*).
  SymPairing& add(std::string_view a, std::string_view b, std::string_view c, const S& value) {
    const Index i = base.space().index_of(a), j = base.space().index_of(b), k = base.space().index_of(c);
    phi(i, j, k) += value;
    if (i != j) phi(j, i, k) += value;
    return *this;
  }
};

/// A vector space with a non-degenerate skew-symmetric form.
template <FieldScalar S>
struct SymplecticSpace {
  std::vector<std::string> labels;
  Matrix<S> omega;

  Index dim() const { return omega.rows(); }

  /// Canonical basis X_1..X_r, Y_1..Y_r with omega(X_i, Y_j) = delta_ij.
  static SymplecticSpace canonical(std::vector<std::string> labels) {
    const Index n = static_cast<Index>(labels.size());
    if (n % 2 != 0) throw ExtensionError("symplectic space must have even dimension");
    Matrix<S> w = Matrix<S>::Zero(n, n);
    for (Index i = 0; i < n / 2; ++i) {
      w(i, n / 2 + i) = S(1);
      w(n / 2 + i, i) = S(-1);
    }
    return {std::move(labels), std::move(w)};
  }
};

/// psi : g -> End(h), one matrix per basis element of g.
template <FieldScalar S>
struct Representation {
  LieSuperalgebra<S> base;
  SymplecticSpace<S> target;
  std::vector<Matrix<S>> psi;
};

/// Output of a constructor whose form is only guaranteed under a cyclic
/// condition: without it the result is a plain Lie (super)algebra.
template <FieldScalar S>
struct ExtensionResult {
  LieSuperalgebra<S> algebra;
  std::optional<BilinearForm<S>> form;
  std::vector<std::string> warnings;

  bool is_quadratic() const { return form.has_value(); }

  QuadraticAlgebra<S> quadratic() const {
    if (!form) throw ExtensionError("extension output carries no invariant form: " + join_warnings());
    return QuadraticAlgebra<S>(algebra, *form);
  }

 private:
  std::string join_warnings() const {
    std::string out;
    for (const auto& w : warnings) out += (out.empty() ? "" : "; ") + w;
    return out;
  }
};

namespace refs {
inline constexpr const char* skew_derivation = "skew-symmetric derivation B(D(X),Y) = -B(X,D(Y))";
inline constexpr const char* psi_homomorphism = "psi is a Lie algebra homomorphism psi([X,Y]) = [psi(X),psi(Y)]";
inline constexpr const char* psi_symplectic = "B_h(psi(X)(Y),Z) = -B_h(Y,psi(X)(Z))";
inline constexpr const char* phi_symmetric = "phi(X,Y)Z = B_h(psi(Z)(X),Y) is symmetric";
inline constexpr const char* cocycle = "2-cocycle theta(X,Y) o ad(Z) + theta([X,Y],Z) + cycle(X,Y,Z) = 0";
inline constexpr const char* cocycle_skew = "theta skew-symmetric";
inline constexpr const char* cocycle_cyclic = "cyclic condition theta(X,Y)Z = theta(Y,Z)X";
inline constexpr const char* pairing_symmetric = "phi : g* x g* -> g symmetric";
inline constexpr const char* pairing_condition1 =
    "ad(X)(phi(f,g)) + phi(f, g o ad(X)) + phi(g, f o ad(X)) = 0";
inline constexpr const char* pairing_condition2 = "f o ad(phi(g,h)) + cycle(f,g,h) = 0";
inline constexpr const char* pairing_cyclic = "cyclic condition h(phi(f,g)) = f(phi(g,h))";
}  // namespace refs

namespace detail {

inline std::vector<std::string> dual_labels(const SuperVectorSpace& s) {
  std::vector<std::string> out;
  for (const auto& l : s.labels()) out.push_back(l + "*");
  return out;
}

template <FieldScalar S>
void require_lie_algebra(const LieSuperalgebra<S>& g, const std::string& who) {
  if (!g.space().is_purely_even()) throw ExtensionError(who + ": base must be a Lie algebra (no odd part)");
  Report jac = verify_jacobi(g);
  if (!jac.passed()) throw ExtensionError(who + ": base fails the Jacobi identity", jac);
}

template <FieldScalar S>
void require_output(const LieSuperalgebra<S>& out, const std::optional<BilinearForm<S>>& form,
                    const std::string& who) {
  Report r = verify_jacobi(out);
  if (form) r.merge(verify_form(out, *form));
  if (!r.passed()) throw ExtensionError(who + ": constructed algebra fails its axioms", r);
}

inline std::string triple(const SuperVectorSpace& s, Index i, Index j, Index k) {
  return "(" + s.label(i) + "," + s.label(j) + "," + s.label(k) + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Input validation.

/// psi(e_a) are skew derivations of (h, B) and psi is a homomorphism.
template <FieldScalar S>
Report check_derivation_representation(const LieSuperalgebra<S>& g, const QuadraticAlgebra<S>& h,
                                       const std::vector<Matrix<S>>& psi) {
  Report r("representation by skew derivations");
  if (static_cast<Index>(psi.size()) != g.dim())
    throw ExtensionError("need one matrix psi(e_a) per basis element of g");
  for (Index a = 0; a < g.dim(); ++a) {
    const auto& m = psi[static_cast<std::size_t>(a)];
    if (m.rows() != h.dim() || m.cols() != h.dim()) throw ExtensionError("psi matrix has wrong shape");
    r.add("psi(" + g.space().label(a) + ") is a derivation", refs::skew_derivation, is_derivation(h.algebra(), m));
    r.add("psi(" + g.space().label(a) + ") is skew", refs::skew_derivation, is_skew(h.form(), m));
  }
  std::string witness;
  for (Index a = 0; a < g.dim() && witness.empty(); ++a)
    for (Index b = a + 1; b < g.dim() && witness.empty(); ++b) {
      Matrix<S> lhs = Matrix<S>::Zero(h.dim(), h.dim());
      for (Index k = 0; k < g.dim(); ++k) lhs += g.structure_constant(a, b, k) * psi[static_cast<std::size_t>(k)];
      const auto& pa = psi[static_cast<std::size_t>(a)];
      const auto& pb = psi[static_cast<std::size_t>(b)];
      if (!approx_equal<S>(lhs, Matrix<S>(pa * pb - pb * pa)))
        witness = "(" + g.space().label(a) + "," + g.space().label(b) + ")";
    }
  r.add("psi homomorphism", refs::psi_homomorphism, witness.empty(), {}, witness);
  return r;
}

template <FieldScalar S>
Report check_representation(const Representation<S>& rep) {
  Report r("symplectic representation");
  const auto& g = rep.base;
  const auto& w = rep.target.omega;
  const Index n = rep.target.dim();
  if (static_cast<Index>(rep.psi.size()) != g.dim())
    throw ExtensionError("need one matrix psi(e_a) per basis element of g");
  if (static_cast<Index>(rep.target.labels.size()) != n) throw ExtensionError("symplectic space: label count mismatch");
  r.add("omega skew-symmetric", "symplectic form B_h(Y,X) = -B_h(X,Y)", is_zero(Matrix<S>(w + w.transpose())));
  r.add("omega non-degenerate", refs::nondegenerate, rank(w) == n);
  for (Index a = 0; a < g.dim(); ++a) {
    const auto& m = rep.psi[static_cast<std::size_t>(a)];
    if (m.rows() != n || m.cols() != n) throw ExtensionError("psi matrix has wrong shape");
    r.add("psi(" + g.space().label(a) + ") in sp(h)", refs::psi_symplectic,
          is_zero(Matrix<S>(m.transpose() * w + w * m)));
  }
  std::string witness;
  for (Index a = 0; a < g.dim() && witness.empty(); ++a)
    for (Index b = a + 1; b < g.dim() && witness.empty(); ++b) {
      Matrix<S> lhs = Matrix<S>::Zero(n, n);
      for (Index k = 0; k < g.dim(); ++k) lhs += g.structure_constant(a, b, k) * rep.psi[static_cast<std::size_t>(k)];
      const auto& pa = rep.psi[static_cast<std::size_t>(a)];
      const auto& pb = rep.psi[static_cast<std::size_t>(b)];
      if (!approx_equal<S>(lhs, Matrix<S>(pa * pb - pb * pa)))
        witness = "(" + g.space().label(a) + "," + g.space().label(b) + ")";
    }
  r.add("psi homomorphism", refs::psi_homomorphism, witness.empty(), {}, witness);
  return r;
}

/// phi(F_u, F_v)(e_a) = omega(psi(e_a) F_u, F_v), one matrix (u, v) per a.
template <FieldScalar S>
std::vector<Matrix<S>> induced_pairing(const Representation<S>& rep) {
  std::vector<Matrix<S>> out;
  for (const auto& m : rep.psi) out.push_back(m.transpose() * rep.target.omega);
  return out;
}

template <FieldScalar S>
Report check_cocycle(const Cocycle2<S>& c) {
  Report r("2-cocycle");
  const auto& g = c.base;
  const Index n = g.dim();
  if (c.theta.size() != n) throw ExtensionError("theta has wrong size");
  std::string witness;
  for (Index i = 0; i < n && witness.empty(); ++i)
    for (Index j = 0; j < n && witness.empty(); ++j)
      for (Index k = 0; k < n && witness.empty(); ++k)
        if (!is_zero(S(c.theta(i, j, k) + c.theta(j, i, k)))) witness = detail::triple(g.space(), i, j, k);
  r.add("theta skew-symmetric", refs::cocycle_skew, witness.empty(), {}, witness);

  // theta(X,Y)([Z,W]) + theta([X,Y],Z)(W) + cyclic in (X,Y,Z), evaluated on e_w.
  const auto term = [&](Index x, Index y, Index z, Index w) {
    S v(0);
    for (Index k = 0; k < n; ++k) {
      v += c.theta(x, y, k) * g.structure_constant(z, w, k);
      v += g.structure_constant(x, y, k) * c.theta(k, z, w);
    }
    return v;
  };
  witness.clear();
  for (Index x = 0; x < n && witness.empty(); ++x)
    for (Index y = x + 1; y < n && witness.empty(); ++y)
      for (Index z = y + 1; z < n && witness.empty(); ++z)
        for (Index w = 0; w < n && witness.empty(); ++w) {
          const S v = term(x, y, z, w) + term(y, z, x, w) + term(z, x, y, w);
          if (!is_zero(v)) witness = detail::triple(g.space(), x, y, z) + " on " + g.space().label(w);
        }
  r.add("cocycle identity", refs::cocycle, witness.empty(), {}, witness);
  return r;
}

template <FieldScalar S>
bool is_cyclic(const Cocycle2<S>& c) {
  const Index n = c.base.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!is_zero(S(c.theta(i, j, k) - c.theta(j, k, i)))) return false;
  return true;
}

namespace detail {

/// Residual of condition (1) at (a, i, j, m).
template <FieldScalar S>
S pairing_condition1(const LieSuperalgebra<S>& g, const Tensor3<S>& phi, Index a, Index i, Index j, Index m) {
  const Index n = g.dim();
  S v(0);
  for (Index k = 0; k < n; ++k) {
    v += phi(i, j, k) * g.structure_constant(a, k, m);
    v += g.structure_constant(a, k, j) * phi(i, k, m);
    v += g.structure_constant(a, k, i) * phi(j, k, m);
  }
  return v;
}

/// Residual of condition (2) at (i, j, l), evaluated on e_w.
template <FieldScalar S>
S pairing_condition2(const LieSuperalgebra<S>& g, const Tensor3<S>& phi, Index i, Index j, Index l, Index w) {
  const Index n = g.dim();
  S v(0);
  for (Index k = 0; k < n; ++k) {
    v += phi(j, l, k) * g.structure_constant(k, w, i);
    v += phi(l, i, k) * g.structure_constant(k, w, j);
    v += phi(i, j, k) * g.structure_constant(k, w, l);
  }
  return v;
}

}  // namespace detail

template <FieldScalar S>
Report check_pairing(const SymPairing<S>& p) {
  Report r("symmetric pairing");
  const auto& g = p.base;
  const Index n = g.dim();
  if (p.phi.size() != n) throw ExtensionError("phi has wrong size");
  const auto dual = [&](Index i) { return g.space().label(i) + "*"; };
  std::string witness;
  for (Index i = 0; i < n && witness.empty(); ++i)
    for (Index j = 0; j < n && witness.empty(); ++j)
      for (Index k = 0; k < n && witness.empty(); ++k)
        if (!is_zero(S(p.phi(i, j, k) - p.phi(j, i, k)))) witness = "(" + dual(i) + "," + dual(j) + ")";
  r.add("phi symmetric", refs::pairing_symmetric, witness.empty(), {}, witness);

  witness.clear();
  for (Index a = 0; a < n && witness.empty(); ++a)
    for (Index i = 0; i < n && witness.empty(); ++i)
      for (Index j = i; j < n && witness.empty(); ++j)
        for (Index m = 0; m < n && witness.empty(); ++m)
          if (!is_zero(detail::pairing_condition1(g, p.phi, a, i, j, m)))
            witness = "(X,f,g) = (" + g.space().label(a) + "," + dual(i) + "," + dual(j) + ")";
  r.add("condition (1)", refs::pairing_condition1, witness.empty(), {}, witness);

  witness.clear();
  for (Index i = 0; i < n && witness.empty(); ++i)
    for (Index j = 0; j < n && witness.empty(); ++j)
      for (Index l = 0; l < n && witness.empty(); ++l)
        for (Index w = 0; w < n && witness.empty(); ++w)
          if (!is_zero(detail::pairing_condition2(g, p.phi, i, j, l, w)))
            witness = "(f,g,h) = (" + dual(i) + "," + dual(j) + "," + dual(l) + ") on " + g.space().label(w);
  r.add("condition (2)", refs::pairing_condition2, witness.empty(), {}, witness);
  return r;
}

template <FieldScalar S>
bool is_cyclic(const SymPairing<S>& p) {
  const Index n = p.base.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l)
        if (!is_zero(S(p.phi(i, j, l) - p.phi(j, l, i)))) return false;
  return true;
}

/// Basis of all symmetric pairings satisfying conditions (1) and (2)
/// (and the cyclic condition when requested).
template <FieldScalar S>
std::vector<Tensor3<S>> solve_sym_pairings(const LieSuperalgebra<S>& g, bool require_cyclic) {
  detail::require_lie_algebra(g, "solve_sym_pairings");
  const Index n = g.dim();
  // Unknowns: phi(i, j, k) for i <= j.
  std::vector<std::vector<Index>> slot(static_cast<std::size_t>(n * n), std::vector<Index>(static_cast<std::size_t>(n)));
  Index u = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        slot[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(k)] = u;
        slot[static_cast<std::size_t>(j * n + i)][static_cast<std::size_t>(k)] = u;
        ++u;
      }
  const auto var = [&](Index i, Index j, Index k) { return slot[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(k)]; };
  std::vector<Vector<S>> rows;
  const auto push = [&](Vector<S> row) {
    if (!is_zero(row)) rows.push_back(std::move(row));
  };
  for (Index a = 0; a < n; ++a)
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j)
        for (Index m = 0; m < n; ++m) {
          Vector<S> row = Vector<S>::Zero(u);
          for (Index k = 0; k < n; ++k) {
            row(var(i, j, k)) += g.structure_constant(a, k, m);
            row(var(i, k, m)) += g.structure_constant(a, k, j);
            row(var(j, k, m)) += g.structure_constant(a, k, i);
          }
          push(std::move(row));
        }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l)
        for (Index w = 0; w < n; ++w) {
          Vector<S> row = Vector<S>::Zero(u);
          for (Index k = 0; k < n; ++k) {
            row(var(j, l, k)) += g.structure_constant(k, w, i);
            row(var(l, i, k)) += g.structure_constant(k, w, j);
            row(var(i, j, k)) += g.structure_constant(k, w, l);
          }
          push(std::move(row));
        }
  if (require_cyclic)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index l = 0; l < n; ++l) {
          Vector<S> row = Vector<S>::Zero(u);
          row(var(i, j, l)) += S(1);
          row(var(j, l, i)) -= S(1);
          push(std::move(row));
        }
  Matrix<S> system(static_cast<Index>(rows.size()), u);
  for (std::size_t r = 0; r < rows.size(); ++r) system.row(static_cast<Index>(r)) = rows[r].transpose();
  std::vector<Tensor3<S>> out;
  for (const auto& v : nullspace(system)) {
    Tensor3<S> t(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) t(i, j, k) = v(var(i, j, k));
    out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors.

/// Double extension of (h, B) by g by means of psi : g -> Der_a(h, B).
/// Basis: g, then h, then g*.
template <FieldScalar S>
QuadraticAlgebra<S> double_extension_general(const LieSuperalgebra<S>& g, const QuadraticAlgebra<S>& h,
                                             const std::vector<Matrix<S>>& psi) {
  const std::string who = "double_extension_general";
  detail::require_lie_algebra(g, who);
  if (!h.space().is_purely_even()) throw ExtensionError(who + ": h must be a quadratic Lie algebra");
  h.require_valid("h");
  Report r = check_derivation_representation(g, h, psi);
  if (!r.passed()) throw ExtensionError(who + ": psi is not a homomorphism into Der_a(h,B)", r);

  const Index m = g.dim(), p = h.dim(), n = 2 * m + p;
  std::vector<std::string> labels = g.space().labels();
  for (const auto& l : h.space().labels()) labels.push_back(l);
  for (const auto& l : detail::dual_labels(g.space())) labels.push_back(l);
  BracketTable<S> t(SuperVectorSpace::even(labels));
  const auto G = [](Index a) { return a; };
  const auto H = [m](Index u) { return m + u; };
  const auto D = [m, p](Index a) { return m + p + a; };

  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index k = 0; k < m; ++k) v(G(k)) = g.structure_constant(a, b, k);
      t.set(G(a), G(b), v);
    }
    for (Index k = 0; k < m; ++k) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index j = 0; j < m; ++j) v(D(j)) = -g.structure_constant(a, j, k);
      t.set(G(a), D(k), v);
    }
    for (Index u = 0; u < p; ++u) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index w = 0; w < p; ++w) v(H(w)) = psi[static_cast<std::size_t>(a)](w, u);
      t.set(G(a), H(u), v);
    }
  }
  for (Index u = 0; u < p; ++u)
    for (Index v = u + 1; v < p; ++v) {
      Vector<S> val = Vector<S>::Zero(n);
      for (Index w = 0; w < p; ++w) val(H(w)) = h.algebra().structure_constant(u, v, w);
      for (Index a = 0; a < m; ++a) {
        // phi(F_u, F_v)(e_a) = B(psi(e_a) F_u, F_v)
        S s(0);
        for (Index w = 0; w < p; ++w) s += psi[static_cast<std::size_t>(a)](w, u) * h.form().gram(w, v);
        val(D(a)) = s;
      }
      t.set(H(u), H(v), val);
    }
  FormTable<S> f(t.space(), FormParity::even);
  for (Index a = 0; a < m; ++a) f.set(G(a), D(a), S(1));
  for (Index u = 0; u < p; ++u)
    for (Index v = 0; v < p; ++v) f.set(H(u), H(v), h.form().gram(u, v));
  QuadraticAlgebra<S> out(t.build(), f.build());
  detail::require_output(out.algebra(), std::optional(out.form()), who);
  return out;
}

/// Double extension of q by a skew derivation C: basis e, q, f with
/// [e,X] = C X, [X,Y] gains B(C X, Y) f, B(e,f) = 1.
template <FieldScalar S>
QuadraticAlgebra<S> double_extension_1d(const QuadraticAlgebra<S>& q, const Matrix<S>& c,
                                        const std::string& e_label = "e", const std::string& f_label = "f") {
  const auto line = LieSuperalgebra<S>::abelian(SuperVectorSpace::even({e_label}));
  QuadraticAlgebra<S> out = [&] {
    try {
      return double_extension_general(line, q, {c});
    } catch (const ExtensionError& err) {
      throw ExtensionError(std::string("double_extension_1d: C is not a skew-symmetric derivation of q"),
                           err.report());
    }
  }();
  std::vector<std::string> labels = out.space().labels();
  labels.back() = f_label;
  return relabel(out, std::move(labels));
}

/// T*-extension of g by theta: basis g, then g*.
template <FieldScalar S>
ExtensionResult<S> t_star_extension(const Cocycle2<S>& c) {
  const std::string who = "t_star_extension";
  const auto& g = c.base;
  detail::require_lie_algebra(g, who);
  Report r = check_cocycle(c);
  if (!r.passed()) throw ExtensionError(who + ": theta is not a 2-cocycle", r);

  const Index m = g.dim(), n = 2 * m;
  std::vector<std::string> labels = g.space().labels();
  for (const auto& l : detail::dual_labels(g.space())) labels.push_back(l);
  BracketTable<S> t(SuperVectorSpace::even(labels));
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index k = 0; k < m; ++k) {
        v(k) = g.structure_constant(a, b, k);
        v(m + k) = c.theta(a, b, k);
      }
      t.set(a, b, v);
    }
    for (Index k = 0; k < m; ++k) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index j = 0; j < m; ++j) v(m + j) = -g.structure_constant(a, j, k);
      t.set(a, m + k, v);
    }
  }
  ExtensionResult<S> out{t.build(), std::nullopt, {}};
  if (is_cyclic(c)) {
    FormTable<S> f(t.space(), FormParity::even);
    for (Index a = 0; a < m; ++a) f.set(a, m + a, S(1));
    out.form = f.build();
  } else {
    out.warnings.push_back("theta is not cyclic; the T*-extension is a Lie algebra without invariant form");
  }
  detail::require_output(out.algebra, out.form, who);
  return out;
}

/// Quadratic Lie superalgebra g + g* (even) + h (odd) from a symplectic
/// representation psi, with optional 2-cocycle theta. Basis: g, g*, h.
template <FieldScalar S>
ExtensionResult<S> super_double_extension(const Representation<S>& rep,
                                          const std::optional<Cocycle2<S>>& theta = std::nullopt) {
  const std::string who = "super_double_extension";
  const auto& g = rep.base;
  detail::require_lie_algebra(g, who);
  Report r = check_representation(rep);
  if (theta) {
    if (theta->base.dim() != g.dim()) throw ExtensionError(who + ": theta is defined on a different algebra");
    r.merge(check_cocycle(*theta));
  }
  if (!r.passed()) throw ExtensionError(who + ": invalid input", r);

  const Index m = g.dim(), p = rep.target.dim(), n = 2 * m + p;
  std::vector<std::string> labels = g.space().labels();
  for (const auto& l : detail::dual_labels(g.space())) labels.push_back(l);
  for (const auto& l : rep.target.labels) labels.push_back(l);
  BracketTable<S> t(SuperVectorSpace(2 * m, p, labels));
  const auto D = [m](Index a) { return m + a; };
  const auto H = [m](Index u) { return 2 * m + u; };
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index k = 0; k < m; ++k) {
        v(k) = g.structure_constant(a, b, k);
        if (theta) v(D(k)) = theta->theta(a, b, k);
      }
      t.set(a, b, v);
    }
    for (Index k = 0; k < m; ++k) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index j = 0; j < m; ++j) v(D(j)) = -g.structure_constant(a, j, k);
      t.set(a, D(k), v);
    }
    for (Index u = 0; u < p; ++u) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index w = 0; w < p; ++w) v(H(w)) = rep.psi[static_cast<std::size_t>(a)](w, u);
      t.set(a, H(u), v);
    }
  }
  const std::vector<Matrix<S>> phi = induced_pairing(rep);
  std::string asym;
  for (Index u = 0; u < p; ++u)
    for (Index v = u; v < p; ++v) {
      Vector<S> val = Vector<S>::Zero(n);
      for (Index a = 0; a < m; ++a) {
        const auto& pa = phi[static_cast<std::size_t>(a)];
        val(D(a)) = pa(u, v);
        if (!is_zero(S(pa(u, v) - pa(v, u))) && asym.empty())
          asym = "(" + rep.target.labels[static_cast<std::size_t>(u)] + "," +
                 rep.target.labels[static_cast<std::size_t>(v)] + ")";
      }
      t.set(H(u), H(v), val);
    }
  if (!asym.empty()) {
    Report sym;
    sym.add("phi symmetric", refs::phi_symmetric, false, {}, asym);
    throw ExtensionError(who + ": induced phi is not symmetric", sym);
  }
  ExtensionResult<S> out{t.build(), std::nullopt, {}};
  if (!theta || is_cyclic(*theta)) {
    FormTable<S> f(t.space(), FormParity::even);
    for (Index a = 0; a < m; ++a) f.set(a, D(a), S(1));
    for (Index u = 0; u < p; ++u)
      for (Index v = 0; v < p; ++v) f.set(H(u), H(v), rep.target.omega(u, v));
    out.form = f.build();
  } else {
    out.warnings.push_back("theta is not cyclic; the result is a Lie superalgebra without invariant form");
  }
  detail::require_output(out.algebra, out.form, who);
  return out;
}

/// Odd T*s-extension of g by a symmetric pairing phi: g even, g* odd, with
/// [f, g] = phi(f, g) and the odd form B(X+f, Y+g) = f(Y) + g(X).
template <FieldScalar S>
ExtensionResult<S> ts_star_extension(const SymPairing<S>& p) {
  const std::string who = "ts_star_extension";
  const auto& g = p.base;
  detail::require_lie_algebra(g, who);
  Report r = check_pairing(p);
  if (!r.passed()) throw ExtensionError(who + ": phi violates the pairing conditions", r);

  const Index m = g.dim(), n = 2 * m;
  std::vector<std::string> labels = g.space().labels();
  for (const auto& l : detail::dual_labels(g.space())) labels.push_back(l);
  BracketTable<S> t(SuperVectorSpace(m, m, labels));
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index k = 0; k < m; ++k) v(k) = g.structure_constant(a, b, k);
      t.set(a, b, v);
    }
    for (Index k = 0; k < m; ++k) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index j = 0; j < m; ++j) v(m + j) = -g.structure_constant(a, j, k);
      t.set(a, m + k, v);
    }
  }
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j) {
      Vector<S> v = Vector<S>::Zero(n);
      for (Index k = 0; k < m; ++k) v(k) = p.phi(i, j, k);
      t.set(m + i, m + j, v);
    }
  ExtensionResult<S> out{t.build(), std::nullopt, {}};
  if (is_cyclic(p)) {
    FormTable<S> f(t.space(), FormParity::odd);
    for (Index a = 0; a < m; ++a) f.set(a, m + a, S(1));
    out.form = f.build();
  } else {
    out.warnings.push_back("phi is not cyclic; the result is a Lie superalgebra without odd invariant form");
  }
  detail::require_output(out.algebra, out.form, who);
  return out;
}

/// Orthogonal direct sum. Basis: evens of q1, evens of q2, odds of q1, odds
/// of q2. Basis labels must be distinct across the summands.
template <FieldScalar S>
QuadraticAlgebra<S> direct_sum(const QuadraticAlgebra<S>& q1, const QuadraticAlgebra<S>& q2) {
  if (q1.form().parity != q2.form().parity) throw ExtensionError("direct_sum: form parities differ");
  const auto& s1 = q1.space();
  const auto& s2 = q2.space();
  std::vector<Index> place1, place2;  // old index -> new index
  std::vector<std::string> labels;
  for (Index i = 0; i < s1.dim_even(); ++i) place1.push_back(static_cast<Index>(labels.size())), labels.push_back(s1.label(i));
  for (Index i = 0; i < s2.dim_even(); ++i) place2.push_back(static_cast<Index>(labels.size())), labels.push_back(s2.label(i));
  for (Index i = s1.dim_even(); i < s1.dim(); ++i) place1.push_back(static_cast<Index>(labels.size())), labels.push_back(s1.label(i));
  for (Index i = s2.dim_even(); i < s2.dim(); ++i) place2.push_back(static_cast<Index>(labels.size())), labels.push_back(s2.label(i));
  SuperVectorSpace space = [&] {
    try {
      return SuperVectorSpace(s1.dim_even() + s2.dim_even(), s1.dim_odd() + s2.dim_odd(), labels);
    } catch (const StructureError& e) {
      throw ExtensionError(std::string("direct_sum: ") + e.what());
    }
  }();
  const Index n = space.dim();
  BracketTable<S> t(space);
  FormTable<S> f(space, q1.form().parity);
  const auto embed = [&](const QuadraticAlgebra<S>& q, const std::vector<Index>& place) {
    for (Index i = 0; i < q.dim(); ++i) {
      for (Index j = i; j < q.dim(); ++j) {
        Vector<S> v = Vector<S>::Zero(n);
        for (Index k = 0; k < q.dim(); ++k) v(place[static_cast<std::size_t>(k)]) = q.algebra().structure_constant(i, j, k);
        t.set(place[static_cast<std::size_t>(i)], place[static_cast<std::size_t>(j)], v);
      }
      for (Index j = 0; j < q.dim(); ++j)
        f.set(place[static_cast<std::size_t>(i)], place[static_cast<std::size_t>(j)], q.form().gram(i, j));
    }
  };
  embed(q1, place1);
  embed(q2, place2);
  return QuadraticAlgebra<S>(t.build(), f.build());
}

}  // namespace qlsa
