#pragma once

// Homomorphisms, isomorphisms and isometries between (quadratic) Lie
// superalgebras; center-based decomposability witnesses; bracket-defined
// isomorphism invariants; the sp(2) lemma checker.

#include "qlsa/derivations.hpp"
#include "qlsa/superalgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlsa {

/// A parity-preserving linear map; column j is the image of source e_j.
template <FieldScalar S>
class GradedLinearMap {
 public:
  GradedLinearMap(SuperVectorSpace source, SuperVectorSpace target, Matrix<S> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw std::invalid_argument("GradedLinearMap: matrix shape does not match the spaces");
    for (Index j = 0; j < source_.dim(); ++j)
      for (Index i = 0; i < target_.dim(); ++i)
        if (source_.parity(j) != target_.parity(i) && !is_zero(matrix_(i, j)))
          throw std::invalid_argument("GradedLinearMap: map does not preserve parity (" + source_.label(j) + " -> " +
                                      target_.label(i) + ")");
  }

  /// Builds the map from images given as (source label, {coefficient, target label} ...).
  static GradedLinearMap from_images(
      SuperVectorSpace source, SuperVectorSpace target,
      std::initializer_list<std::pair<std::string_view, std::initializer_list<std::pair<S, std::string_view>>>> images) {
    Matrix<S> m = Matrix<S>::Zero(target.dim(), source.dim());
    for (const auto& [src, terms] : images)
      for (const auto& [c, label] : terms) m(target.index_of(label), source.index_of(src)) += c;
    return GradedLinearMap(std::move(source), std::move(target), std::move(m));
  }

  const SuperVectorSpace& source() const { return source_; }
  const SuperVectorSpace& target() const { return target_; }
  const Matrix<S>& matrix() const { return matrix_; }

 private:
  SuperVectorSpace source_;
  SuperVectorSpace target_;
  Matrix<S> matrix_;
};

namespace refs {
inline constexpr const char* homomorphism = "homomorphism A([X,Y]) = [A(X),A(Y)]";
inline constexpr const char* bijective = "isomorphism: A is bijective";
inline constexpr const char* isometry = "i-isomorphism B'(A(X),A(Y)) = B(X,Y)";
inline constexpr const char* decomposition = "g = g1 (+) g2 orthogonal, with g1 and g2 ideals";
inline constexpr const char* central_witness = "ideal I non-degenerate implies g = I (+) I^perp";
inline constexpr const char* sp2_lemma = "[A,B] = B in sp(2), A,B nonzero implies A semi-simple and B nilpotent";
}  // namespace refs

namespace detail {
template <FieldScalar S>
void check_map_shape(const Matrix<S>& a, const LieSuperalgebra<S>& src, const LieSuperalgebra<S>& tgt) {
  if (a.rows() != tgt.dim() || a.cols() != src.dim())
    throw std::invalid_argument("map shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " does not match " + std::to_string(tgt.dim()) + "x" + std::to_string(src.dim()));
}
}  // namespace detail

template <FieldScalar S>
Report verify_homomorphism(const Matrix<S>& a, const LieSuperalgebra<S>& src, const LieSuperalgebra<S>& tgt) {
  detail::check_map_shape(a, src, tgt);
  Report r("homomorphism");
  std::size_t failing = 0;
  double worst = 0.0;
  std::string witness;
  for (Index i = 0; i < src.dim(); ++i)
    for (Index j = i; j < src.dim(); ++j) {
      const Vector<S> lhs = a * src.bracket(i, j);
      const Vector<S> rhs = tgt.bracket(Vector<S>(a.col(i)), Vector<S>(a.col(j)));
      const Vector<S> diff = lhs - rhs;
      if (is_zero(diff)) continue;
      ++failing;
      worst = std::max(worst, max_magnitude(diff));
      if (witness.empty())
        witness = "(" + src.space().label(i) + "," + src.space().label(j) + "): A[X,Y] = " +
                  format_vector(lhs, tgt.space()) + " but [AX,AY] = " + format_vector(rhs, tgt.space());
    }
  std::ostringstream res;
  res << worst;
  r.add("A[X,Y] = [AX,AY]", refs::homomorphism, failing == 0, res.str(), witness);
  return r;
}

template <FieldScalar S>
Report verify_homomorphism(const GradedLinearMap<S>& a, const LieSuperalgebra<S>& src, const LieSuperalgebra<S>& tgt) {
  return verify_homomorphism(a.matrix(), src, tgt);
}

template <FieldScalar S>
Report verify_isomorphism(const Matrix<S>& a, const LieSuperalgebra<S>& src, const LieSuperalgebra<S>& tgt) {
  Report r = verify_homomorphism(a, src, tgt);
  const bool square = src.dim() == tgt.dim() && src.space().dim_even() == tgt.space().dim_even();
  const Index rk = rank(a);
  r.add("A bijective", refs::bijective, square && rk == src.dim(), {},
        "rank " + std::to_string(rk) + " of " + std::to_string(src.dim()));
  return r;
}

template <FieldScalar S>
Report verify_isomorphism(const GradedLinearMap<S>& a, const LieSuperalgebra<S>& src, const LieSuperalgebra<S>& tgt) {
  return verify_isomorphism(a.matrix(), src, tgt);
}

/// Isomorphism plus A^T G' A = G.
template <FieldScalar S>
Report verify_i_isomorphism(const Matrix<S>& a, const QuadraticAlgebra<S>& src, const QuadraticAlgebra<S>& tgt) {
  Report r = verify_isomorphism(a, src.algebra(), tgt.algebra());
  const Matrix<S> pulled = a.transpose() * tgt.form().gram * a;
  const Matrix<S> diff = pulled - src.form().gram;
  std::string witness;
  for (Index i = 0; i < diff.rows() && witness.empty(); ++i)
    for (Index j = 0; j < diff.cols() && witness.empty(); ++j)
      if (!is_zero(diff(i, j)))
        witness = "(" + src.space().label(i) + "," + src.space().label(j) + "): B'(AX,AY) = " +
                  format_scalar(pulled(i, j)) + " but B(X,Y) = " + format_scalar(src.form().gram(i, j));
  std::ostringstream res;
  res << max_magnitude(diff);
  r.add("B'(AX,AY) = B(X,Y)", refs::isometry, witness.empty(), res.str(), witness);
  return r;
}

template <FieldScalar S>
Report verify_i_isomorphism(const GradedLinearMap<S>& a, const QuadraticAlgebra<S>& src,
                            const QuadraticAlgebra<S>& tgt) {
  return verify_i_isomorphism(a.matrix(), src, tgt);
}

// ---------------------------------------------------------------------------
// Decompositions.

/// s1 and s2 are ideals, orthogonal, non-degenerate, and s1 + s2 = g directly.
template <FieldScalar S>
Report verify_decomposition(const QuadraticAlgebra<S>& q, const Subspace<S>& s1, const Subspace<S>& s2) {
  Report r("orthogonal decomposition");
  // Names the first bracket [e_i, v] that leaves the summand.
  const auto escape = [&](const Subspace<S>& s) -> std::string {
    for (Index i = 0; i < q.dim(); ++i)
      for (const auto& v : s.basis()) {
        const Vector<S> w = q.algebra().ad(i) * v;
        if (!s.contains(w))
          return "[" + q.space().label(i) + ", " + format_vector(v, q.space()) + "] = " + format_vector(w, q.space());
      }
    return {};
  };
  const std::string out1 = escape(s1), out2 = escape(s2);
  r.add("first summand is an ideal", refs::decomposition, out1.empty(), {}, out1);
  r.add("second summand is an ideal", refs::decomposition, out2.empty(), {}, out2);
  bool orthogonal = true;
  for (const auto& u : s1.basis())
    for (const auto& v : s2.basis())
      if (!is_zero(q.form(u, v))) orthogonal = false;
  r.add("summands orthogonal", refs::decomposition, orthogonal);
  r.add("form non-degenerate on first summand", refs::decomposition, is_nondegenerate_on(q, s1));
  r.add("form non-degenerate on second summand", refs::decomposition, is_nondegenerate_on(q, s2));
  const bool direct = s1.dim() + s2.dim() == q.dim() && (s1 + s2).dim() == q.dim();
  r.add("direct sum equals g", refs::decomposition, direct, {},
        std::to_string(s1.dim()) + " + " + std::to_string(s2.dim()) + " vs " + std::to_string(q.dim()));
  return r;
}

template <FieldScalar S>
struct DecompositionWitness {
  /// Central vectors spanning the non-degenerate ideal.
  std::vector<Vector<S>> central;
  Subspace<S> ideal;
  Subspace<S> complement;
  /// Gram matrix of the form on `central`.
  Matrix<S> gram;
};

/// Looks for a non-degenerate subspace of the center of dimension 1 (a
/// central w with B(w,w) != 0) or 2 (central u, v with B(u,v) != 0). Vectors
/// from `hints` that are central and homogeneous are searched on their own
/// before the center basis joins in. Returns nothing when the form vanishes
/// on the center or no proper split exists; that does not mean the algebra is
/// indecomposable.
template <FieldScalar S>
std::optional<DecompositionWitness<S>> decomposability_via_center(const QuadraticAlgebra<S>& q,
                                                                   const std::vector<Vector<S>>& hints = {}) {
  if (!q.verified().nondegenerate) return std::nullopt;
  const Subspace<S> z = center(q.algebra());
  std::vector<Vector<S>> candidates;
  for (const auto& h : hints)
    if (h.size() == q.dim() && !is_zero(h) && z.contains(h) && q.space().parity_of(h)) candidates.push_back(h);
  for (const auto& v : z.basis()) candidates.push_back(v);

  const auto attempt = [&](std::vector<Vector<S>> vs) -> std::optional<DecompositionWitness<S>> {
    const Subspace<S> u = Subspace<S>::span(vs, q.dim());
    if (u.dim() == q.dim() || !is_nondegenerate_on(q, u)) return std::nullopt;
    const Subspace<S> perp = orthogonal_complement(q, u);
    if (!verify_decomposition(q, u, perp).passed()) return std::nullopt;
    Matrix<S> gram(static_cast<Index>(vs.size()), static_cast<Index>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j) gram(static_cast<Index>(i), static_cast<Index>(j)) = q.form(vs[i], vs[j]);
    return DecompositionWitness<S>{std::move(vs), u, perp, std::move(gram)};
  };
  const auto search = [&](std::size_t count) -> std::optional<DecompositionWitness<S>> {
    for (std::size_t i = 0; i < count; ++i)
      if (!is_zero(q.form(candidates[i], candidates[i])))
        if (auto found = attempt({candidates[i]})) return found;
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        if (!is_zero(q.form(candidates[i], candidates[j])))
          if (auto found = attempt({candidates[i], candidates[j]})) return found;
    return std::nullopt;
  };
  const std::size_t usable_hints = candidates.size() - static_cast<std::size_t>(z.dim());
  if (usable_hints > 0)
    if (auto found = search(usable_hints)) return found;
  return search(candidates.size());
}

// ---------------------------------------------------------------------------
// Invariants.

/// Bracket-defined invariants; the skew-derivation dimension additionally
/// depends on the form and is only invariant under i-isomorphisms.
struct Fingerprint {
  Index dim = 0;
  Index dim_even = 0;
  Index dim_odd = 0;
  Index center = 0;
  std::vector<Index> derived_series;
  std::vector<Index> lower_central_series;
  Index derived_cap_center = 0;
  Index derivations = 0;
  Index skew_derivations = -1;  // -1 when no form is attached
  bool solvable = false;
  bool nilpotent = false;

  /// Compares the bracket-only fields.
  bool same_algebra_invariants(const Fingerprint& o) const {
    return dim == o.dim && dim_even == o.dim_even && dim_odd == o.dim_odd && center == o.center &&
           derived_series == o.derived_series && lower_central_series == o.lower_central_series &&
           derived_cap_center == o.derived_cap_center && derivations == o.derivations && solvable == o.solvable &&
           nilpotent == o.nilpotent;
  }

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const;
  nlohmann::json to_json() const;
};

template <FieldScalar S>
Fingerprint fingerprint(const LieSuperalgebra<S>& a) {
  Fingerprint f;
  f.dim = a.dim();
  f.dim_even = a.space().dim_even();
  f.dim_odd = a.space().dim_odd();
  const auto z = center(a);
  f.center = z.dim();
  for (const auto& s : derived_series(a)) f.derived_series.push_back(s.dim());
  for (const auto& s : lower_central_series(a)) f.lower_central_series.push_back(s.dim());
  f.derived_cap_center = derived_subalgebra(a).intersect(z).dim();
  f.derivations = derivation_space(a, DerivationKind::all).dim();
  f.solvable = f.derived_series.back() == 0;
  f.nilpotent = f.lower_central_series.back() == 0;
  return f;
}

template <FieldScalar S>
Fingerprint fingerprint(const QuadraticAlgebra<S>& q) {
  Fingerprint f = fingerprint(q.algebra());
  f.skew_derivations = derivation_space(q, DerivationKind::skew).dim();
  return f;
}

/// True when some bracket-defined invariant differs, which certifies that
/// the algebras are not isomorphic. False certifies nothing.
template <FieldScalar S>
bool fingerprints_distinguish(const LieSuperalgebra<S>& a, const LieSuperalgebra<S>& b) {
  return !fingerprint(a).same_algebra_invariants(fingerprint(b));
}

// ---------------------------------------------------------------------------

/// For 2x2 A, B in sp(2) with B != 0 and [A,B] = B: A is semisimple and B is
/// nilpotent. Throws std::invalid_argument when the preconditions fail.
template <FieldScalar S>
Report check_sp2_lemma(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw std::invalid_argument("check_sp2_lemma: A and B must be 2x2");
  if (!is_zero(a.trace()) || !is_zero(b.trace()))
    throw std::invalid_argument("check_sp2_lemma: A and B must lie in sp(2) (trace zero)");
  if (is_zero(b)) throw std::invalid_argument("check_sp2_lemma: B must be nonzero");
  if (!approx_equal<S>(Matrix<S>(a * b - b * a), b)) throw std::invalid_argument("check_sp2_lemma: [A,B] != B");
  Report r("sp(2) lemma");
  const auto ea = eigen_structure(a);
  const auto eb = eigen_structure(b);
  r.add("A semi-simple", refs::sp2_lemma, ea.is_semisimple);
  r.add("B nilpotent", refs::sp2_lemma, eb.is_nilpotent, {}, is_zero(Matrix<S>(b * b)) ? "B^2 = 0" : "B^2 != 0");
  return r;
}

}  // namespace qlsa
