#pragma once

// Z2-graded vector spaces, Lie superalgebras given by structure constants,
// supersymmetric bilinear forms, axiom verification and structural
// computations (center, derived and lower central series, orthogonal
// complements, ideals).
//
// Conventions:
//  * basis order is even block first, then odd block;
//  * [e_i, e_j] = sum_k c(i,j,k) e_k, stored as ad(e_i)(k, j) = c(i,j,k), so
//    linear maps act on column vectors;
//  * graded antisymmetry c(j,i,k) = -(-1)^{|i||j|} c(i,j,k);
//  * supersymmetry B(Y,X) = (-1)^{|X||Y|} B(X,Y).

#include "qlsa/linalg.hpp"
#include "qlsa/report.hpp"

#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qlsa {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (-1)^{a b} for parities a, b in {0, 1}.
inline int graded_sign(int a, int b) { return (a & b) ? -1 : 1; }

class SuperVectorSpace {
 public:
  SuperVectorSpace() = default;

  SuperVectorSpace(Index dim_even, Index dim_odd, std::vector<std::string> labels)
      : dim_even_(dim_even), dim_odd_(dim_odd), labels_(std::move(labels)) {
    if (dim_even < 0 || dim_odd < 0) throw StructureError("negative dimension");
    if (static_cast<Index>(labels_.size()) != dim_even + dim_odd)
      throw StructureError("label count does not match dim_even + dim_odd");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw StructureError("empty basis label");
      if (!seen.insert(l).second) throw StructureError("duplicate basis label '" + l + "'");
    }
  }

  /// A purely even space.
  static SuperVectorSpace even(std::vector<std::string> labels) {
    const auto n = static_cast<Index>(labels.size());
    return SuperVectorSpace(n, 0, std::move(labels));
  }

  Index dim() const { return dim_even_ + dim_odd_; }
  Index dim_even() const { return dim_even_; }
  Index dim_odd() const { return dim_odd_; }
  bool is_purely_even() const { return dim_odd_ == 0; }

  int parity(Index i) const { return i < dim_even_ ? 0 : 1; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }

  std::optional<Index> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<Index>(i);
    return std::nullopt;
  }

  Index index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw StructureError("unknown basis label '" + std::string(label) + "'");
  }

  /// Whether a vector lives in a single parity block (zero counts as both).
  template <FieldScalar S>
  std::optional<int> parity_of(const Vector<S>& v) const {
    bool has_even = false, has_odd = false;
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(v(i))) continue;
      (parity(i) == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? 1 : 0;
  }

  friend bool operator==(const SuperVectorSpace&, const SuperVectorSpace&) = default;

 private:
  Index dim_even_ = 0;
  Index dim_odd_ = 0;
  std::vector<std::string> labels_;
};

/// Renders a vector as a linear combination of basis labels, e.g. "Z - Z*".
template <FieldScalar S>
std::string format_vector(const Vector<S>& v, const SuperVectorSpace& space) {
  std::ostringstream out;
  bool first = true;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    std::string c = format_scalar(v(i));
    bool negative = false;
    if constexpr (FieldTraits<S>::backend == Backend::exact) {
      negative = v(i) < 0;
      if (negative) c = format_scalar(S(-v(i)));
    }
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    if (c != "1") out << c << " ";
    out << space.label(i);
    first = false;
  }
  return first ? std::string("0") : out.str();
}

template <FieldScalar S>
class LieSuperalgebra {
 public:
  LieSuperalgebra() = default;

  /// `ad[i](k, j)` is the coefficient of e_k in [e_i, e_j]. Parity
  /// consistency and graded antisymmetry are validated; the Jacobi identity
  /// is not assumed (see verify_jacobi).
  LieSuperalgebra(SuperVectorSpace space, std::vector<Matrix<S>> ad)
      : space_(std::move(space)), ad_(std::move(ad)) {
    validate();
  }

  static LieSuperalgebra abelian(SuperVectorSpace space) {
    const Index n = space.dim();
    return LieSuperalgebra(std::move(space), std::vector<Matrix<S>>(static_cast<std::size_t>(n), Matrix<S>::Zero(n, n)));
  }

  const SuperVectorSpace& space() const { return space_; }
  Index dim() const { return space_.dim(); }
  int parity(Index i) const { return space_.parity(i); }

  const Matrix<S>& ad(Index i) const { return ad_.at(static_cast<std::size_t>(i)); }
  const std::vector<Matrix<S>>& ad_matrices() const { return ad_; }

  const S& structure_constant(Index i, Index j, Index k) const { return ad_[static_cast<std::size_t>(i)](k, j); }

  /// [e_i, e_j] as a coordinate vector.
  Vector<S> bracket(Index i, Index j) const { return ad(i).col(j); }

  /// Bilinear extension of the bracket to arbitrary coordinate vectors.
  Vector<S> bracket(const Vector<S>& u, const Vector<S>& v) const {
    Vector<S> out = Vector<S>::Zero(dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(u(i))) out += u(i) * (ad(i) * v);
    return out;
  }

  /// ad(u) for an arbitrary vector u.
  Matrix<S> ad(const Vector<S>& u) const {
    Matrix<S> out = Matrix<S>::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(u(i))) out += u(i) * ad(i);
    return out;
  }

  bool is_abelian() const {
    for (const auto& m : ad_)
      if (!is_zero(m)) return false;
    return true;
  }

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    if (!(a.space_ == b.space_)) return false;
    for (std::size_t i = 0; i < a.ad_.size(); ++i)
      if (!approx_equal<S>(a.ad_[i], b.ad_[i])) return false;
    return true;
  }

 private:
  void validate() const {
    const Index n = space_.dim();
    if (static_cast<Index>(ad_.size()) != n) throw StructureError("need one ad matrix per basis element");
    for (const auto& m : ad_)
      if (m.rows() != n || m.cols() != n) throw StructureError("ad matrix has wrong shape");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          const S& c = structure_constant(i, j, k);
          if (!is_zero(c) && parity(k) != (parity(i) ^ parity(j)))
            throw StructureError("parity violation: [" + space_.label(i) + "," + space_.label(j) + "] has a " +
                                 space_.label(k) + " component");
          const S expected = -S(graded_sign(parity(i), parity(j))) * c;
          if (!is_zero(S(structure_constant(j, i, k) - expected)))
            throw StructureError("antisymmetry violation: [" + space_.label(j) + "," + space_.label(i) +
                                 "] is not -(-1)^{|a||b|}[" + space_.label(i) + "," + space_.label(j) + "]");
        }
  }

  SuperVectorSpace space_;
  std::vector<Matrix<S>> ad_;
};

enum class FormParity { even, odd };

inline std::string to_string(FormParity p) { return p == FormParity::even ? "even" : "odd"; }

template <FieldScalar S>
struct BilinearForm {
  Matrix<S> gram;
  FormParity parity = FormParity::even;

  S operator()(const Vector<S>& u, const Vector<S>& v) const { return u.dot(gram * v); }
  Index dim() const { return gram.rows(); }
};

/// Accumulates brackets by basis label and fills the opposite orientation
/// from graded antisymmetry.
template <FieldScalar S>
class BracketTable {
 public:
  explicit BracketTable(SuperVectorSpace space)
      : space_(std::move(space)),
        ad_(static_cast<std::size_t>(space_.dim()), Matrix<S>::Zero(space_.dim(), space_.dim())) {}

  using Terms = std::initializer_list<std::pair<S, std::string_view>>;

  BracketTable& set(std::string_view a, std::string_view b, Terms terms) {
    Vector<S> v = Vector<S>::Zero(space_.dim());
    for (const auto& [c, label] : terms) v(space_.index_of(label)) += c;
    return set(space_.index_of(a), space_.index_of(b), v);
  }

  BracketTable& set(Index i, Index j, const Vector<S>& value) {
    ad_[static_cast<std::size_t>(i)].col(j) = value;
    ad_[static_cast<std::size_t>(j)].col(i) = -S(graded_sign(space_.parity(i), space_.parity(j))) * value;
    return *this;
  }

  /// Adds to [e_i, e_j] (and the opposite orientation).
  BracketTable& add(Index i, Index j, const Vector<S>& value) {
    Vector<S> current = ad_[static_cast<std::size_t>(i)].col(j);
    return set(i, j, Vector<S>(current + value));
  }

  const SuperVectorSpace& space() const { return space_; }
  LieSuperalgebra<S> build() const { return LieSuperalgebra<S>(space_, ad_); }

 private:
  SuperVectorSpace space_;
  std::vector<Matrix<S>> ad_;
};

/// Accumulates form values by label, filling B(Y,X) by supersymmetry.
template <FieldScalar S>
class FormTable {
 public:
  FormTable(SuperVectorSpace space, FormParity parity)
      : space_(std::move(space)), gram_(Matrix<S>::Zero(space_.dim(), space_.dim())), parity_(parity) {}

  FormTable& set(std::string_view a, std::string_view b, const S& value) {
    return set(space_.index_of(a), space_.index_of(b), value);
  }

  FormTable& set(Index i, Index j, const S& value) {
    gram_(i, j) = value;
    gram_(j, i) = S(graded_sign(space_.parity(i), space_.parity(j))) * value;
    return *this;
  }

  BilinearForm<S> build() const { return {gram_, parity_}; }

 private:
  SuperVectorSpace space_;
  Matrix<S> gram_;
  FormParity parity_;
};

// ---------------------------------------------------------------------------
// Axiom verification.

namespace refs {
inline constexpr const char* jacobi =
    "graded Jacobi identity (-1)^{|X||Z|}[X,[Y,Z]] + (-1)^{|Y||X|}[Y,[Z,X]] + (-1)^{|Z||Y|}[Z,[X,Y]] = 0";
inline constexpr const char* supersymmetry = "supersymmetry B(Y,X) = (-1)^{xy} B(X,Y)";
inline constexpr const char* even_form = "even form: B(g_0, g_1) = 0";
inline constexpr const char* odd_form = "odd form: B(g_a, g_a) = 0 for both parities";
inline constexpr const char* nondegenerate = "non-degeneracy: B(X,Y) = 0 for all Y implies X = 0";
inline constexpr const char* invariance = "invariance B([X,Y],Z) = B(X,[Y,Z])";
inline constexpr const char* center_is_orthogonal = "Z(g) = [g,g]^perp";
inline constexpr const char* center_dimension = "dim Z(g) + dim [g,g] = dim g";
}  // namespace refs

template <FieldScalar S>
Report verify_jacobi(const LieSuperalgebra<S>& a) {
  Report report("graded Jacobi identity");
  const Index n = a.dim();
  double worst = 0.0;
  std::size_t failing = 0;
  std::vector<Check> failures;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const int pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
        Vector<S> r = S(graded_sign(pi, pk)) * (a.ad(i) * a.bracket(j, k)) +
                      S(graded_sign(pj, pi)) * (a.ad(j) * a.bracket(k, i)) +
                      S(graded_sign(pk, pj)) * (a.ad(k) * a.bracket(i, j));
        if (is_zero(r)) continue;
        ++failing;
        worst = std::max(worst, max_magnitude(r));
        failures.push_back({"jacobi triple", refs::jacobi, Status::fail, format_vector(r, a.space()),
                            "(" + a.space().label(i) + "," + a.space().label(j) + "," + a.space().label(k) + ")"});
      }
  std::ostringstream res;
  res << worst;
  report.add("jacobi", refs::jacobi, failing == 0, res.str(),
             failing == 0 ? "" : std::to_string(failing) + " failing triples");
  for (auto& f : failures) report.add(std::move(f));
  return report;
}

/// Supersymmetry, parity pattern, non-degeneracy and invariance of `form`
/// with respect to the bracket of `a`.
template <FieldScalar S>
Report verify_form(const LieSuperalgebra<S>& a, const BilinearForm<S>& form) {
  const Index n = a.dim();
  if (form.gram.rows() != n || form.gram.cols() != n)
    throw std::invalid_argument("verify_form: Gram matrix does not match the algebra dimension");
  Report report("bilinear form");
  const auto& g = form.gram;
  const auto pair_label = [&](Index i, Index j) { return "(" + a.space().label(i) + "," + a.space().label(j) + ")"; };

  std::string witness;
  for (Index i = 0; i < n && witness.empty(); ++i)
    for (Index j = 0; j < n && witness.empty(); ++j)
      if (!is_zero(S(g(j, i) - S(graded_sign(a.parity(i), a.parity(j))) * g(i, j)))) witness = pair_label(i, j);
  report.add("supersymmetric", refs::supersymmetry, witness.empty(), {}, witness);

  witness.clear();
  for (Index i = 0; i < n && witness.empty(); ++i)
    for (Index j = 0; j < n && witness.empty(); ++j) {
      const bool same = a.parity(i) == a.parity(j);
      const bool must_vanish = form.parity == FormParity::even ? !same : same;
      if (must_vanish && !is_zero(g(i, j))) witness = pair_label(i, j);
    }
  report.add("parity pattern (" + to_string(form.parity) + ")",
             form.parity == FormParity::even ? refs::even_form : refs::odd_form, witness.empty(), {}, witness);

  const Index r = rank(g);
  report.add("non-degenerate", refs::nondegenerate, r == n, {}, "rank " + std::to_string(r) + " of " + std::to_string(n));

  // B([e_i,e_j], e_k) - B(e_i, [e_j,e_k])
  double worst = 0.0;
  witness.clear();
  std::size_t failing = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<S> left = g.transpose() * a.bracket(i, j);  // left(k) = B([e_i,e_j], e_k)
      const Vector<S> right = (g.row(i) * a.ad(j)).transpose();  // right(k) = B(e_i, [e_j,e_k])
      for (Index k = 0; k < n; ++k) {
        const S d = left(k) - right(k);
        if (is_zero(d)) continue;
        ++failing;
        worst = std::max(worst, FieldTraits<S>::magnitude(d));
        if (witness.empty())
          witness = "(" + a.space().label(i) + "," + a.space().label(j) + "," + a.space().label(k) +
                    "): " + format_scalar(left(k)) + " vs " + format_scalar(right(k));
      }
    }
  std::ostringstream res;
  res << worst;
  report.add("invariant", refs::invariance, failing == 0, res.str(), witness);
  return report;
}

/// Which axiom checks passed for a quadratic (super)algebra.
struct Verification {
  bool jacobi = false;
  bool supersymmetric = false;
  bool parity_pattern = false;
  bool nondegenerate = false;
  bool invariant = false;

  bool all() const { return jacobi && supersymmetric && parity_pattern && nondegenerate && invariant; }
};

/// A Lie superalgebra together with a bilinear form. Construction records
/// which axioms hold; `require_valid` turns a failure into an exception.
template <FieldScalar S>
class QuadraticAlgebra {
 public:
  QuadraticAlgebra() = default;

  QuadraticAlgebra(LieSuperalgebra<S> algebra, BilinearForm<S> form)
      : algebra_(std::move(algebra)), form_(std::move(form)) {
    if (form_.gram.rows() != algebra_.dim() || form_.gram.cols() != algebra_.dim())
      throw std::invalid_argument("QuadraticAlgebra: Gram matrix does not match the algebra dimension");
    const Report jac = verify_jacobi(algebra_);
    const Report frm = verify_form(algebra_, form_);
    verified_.jacobi = jac.passed();
    verified_.supersymmetric = frm.checks()[0].status == Status::pass;
    verified_.parity_pattern = frm.checks()[1].status == Status::pass;
    verified_.nondegenerate = frm.checks()[2].status == Status::pass;
    verified_.invariant = frm.checks()[3].status == Status::pass;
  }

  const LieSuperalgebra<S>& algebra() const { return algebra_; }
  const BilinearForm<S>& form() const { return form_; }
  const SuperVectorSpace& space() const { return algebra_.space(); }
  Index dim() const { return algebra_.dim(); }
  const Verification& verified() const { return verified_; }

  const QuadraticAlgebra& require_valid(std::string_view what = "algebra") const {
    if (!verified_.all()) {
      Report r = verify_jacobi(algebra_);
      r.merge(verify_form(algebra_, form_));
      throw StructureError(std::string(what) + " is not a quadratic Lie superalgebra:\n" + r.to_text());
    }
    return *this;
  }

  S form(const Vector<S>& u, const Vector<S>& v) const { return form_(u, v); }

 private:
  LieSuperalgebra<S> algebra_;
  BilinearForm<S> form_;
  Verification verified_;
};

// ---------------------------------------------------------------------------
// Structural computations.

/// {v : [v, e_j] = 0 for all j}.
template <FieldScalar S>
Subspace<S> center(const LieSuperalgebra<S>& a) {
  const Index n = a.dim();
  // Row (j, k), column i: c(i, j, k).
  Matrix<S> system(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) system(j * n + k, i) = a.structure_constant(i, j, k);
  return Subspace<S>::span(nullspace(system), n);
}

/// span{[u, v] : u in s1, v in s2}.
template <FieldScalar S>
Subspace<S> bracket_space(const LieSuperalgebra<S>& a, const Subspace<S>& s1, const Subspace<S>& s2) {
  std::vector<Vector<S>> gens;
  for (const auto& u : s1.basis()) {
    const Matrix<S> adu = a.ad(u);
    for (const auto& v : s2.basis()) gens.push_back(adu * v);
  }
  return Subspace<S>::span(gens, a.dim());
}

template <FieldScalar S>
Subspace<S> derived_subalgebra(const LieSuperalgebra<S>& a) {
  std::vector<Vector<S>> gens;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) gens.push_back(a.bracket(i, j));
  return Subspace<S>::span(gens, a.dim());
}

/// g, [g,g], [[g,g],[g,g]], ... up to and including the first repeated term.
template <FieldScalar S>
std::vector<Subspace<S>> derived_series(const LieSuperalgebra<S>& a) {
  std::vector<Subspace<S>> series{Subspace<S>::whole(a.dim())};
  while (true) {
    Subspace<S> next = bracket_space(a, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// g, [g,g], [g,[g,g]], ... up to and including the first repeated term.
template <FieldScalar S>
std::vector<Subspace<S>> lower_central_series(const LieSuperalgebra<S>& a) {
  const auto whole = Subspace<S>::whole(a.dim());
  std::vector<Subspace<S>> series{whole};
  while (true) {
    Subspace<S> next = bracket_space(a, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

template <FieldScalar S>
bool is_solvable(const LieSuperalgebra<S>& a) {
  return derived_series(a).back().is_zero();
}

template <FieldScalar S>
bool is_nilpotent(const LieSuperalgebra<S>& a) {
  return lower_central_series(a).back().is_zero();
}

/// {v : B(s, v) = 0 for all s in `s`}.
template <FieldScalar S>
Subspace<S> orthogonal_complement(const QuadraticAlgebra<S>& q, const Subspace<S>& s) {
  if (!q.verified().nondegenerate) throw StructureError("orthogonal_complement: degenerate form");
  if (s.is_zero()) return Subspace<S>::whole(q.dim());
  const Matrix<S> system = s.echelon() * q.form().gram;
  return Subspace<S>::span(nullspace(system), q.dim());
}

/// [g, s] is contained in s.
template <FieldScalar S>
bool is_ideal(const LieSuperalgebra<S>& a, const Subspace<S>& s) {
  for (Index i = 0; i < a.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(Vector<S>(a.ad(i) * v))) return false;
  return true;
}

/// The form restricted to s has full rank.
template <FieldScalar S>
bool is_nondegenerate_on(const QuadraticAlgebra<S>& q, const Subspace<S>& s) {
  if (s.is_zero()) return true;
  const Matrix<S> restricted = s.echelon() * q.form().gram * s.basis_matrix();
  return rank(restricted) == s.dim();
}

/// Center/derived identities for a non-degenerate invariant form. For odd
/// forms they are asserted the same way and marked as such in the report.
template <FieldScalar S>
Report verify_center_identities(const QuadraticAlgebra<S>& q) {
  Report report("center and derived algebra");
  const auto z = center(q.algebra());
  const auto d = derived_subalgebra(q.algebra());
  const std::string suffix = q.form().parity == FormParity::odd ? " [odd form]" : "";
  report.add("dim Z + dim [g,g] = dim g" + suffix, refs::center_dimension, z.dim() + d.dim() == q.dim(), {},
             std::to_string(z.dim()) + " + " + std::to_string(d.dim()) + " vs " + std::to_string(q.dim()));
  const bool equal = q.verified().nondegenerate && orthogonal_complement(q, d) == z;
  report.add("Z(g) = [g,g]^perp" + suffix, refs::center_is_orthogonal, equal);
  if (q.form().parity == FormParity::odd)
    report.info("odd-form identities", "asserted for odd forms as a stated claim, not re-derived");
  return report;
}

/// Converts an exact algebra to another backend.
template <FieldScalar T>
LieSuperalgebra<T> cast_algebra(const LieSuperalgebra<Rational>& a) {
  std::vector<Matrix<T>> ad;
  for (const auto& m : a.ad_matrices()) ad.push_back(m.unaryExpr([](const Rational& x) { return from_rational<T>(x); }));
  return LieSuperalgebra<T>(a.space(), std::move(ad));
}

template <FieldScalar T>
QuadraticAlgebra<T> cast_quadratic(const QuadraticAlgebra<Rational>& q) {
  BilinearForm<T> form{q.form().gram.unaryExpr([](const Rational& x) { return from_rational<T>(x); }), q.form().parity};
  return QuadraticAlgebra<T>(cast_algebra<T>(q.algebra()), std::move(form));
}

/// Same structure constants and form, new basis labels.
template <FieldScalar S>
LieSuperalgebra<S> relabel(const LieSuperalgebra<S>& a, std::vector<std::string> labels) {
  return LieSuperalgebra<S>(SuperVectorSpace(a.space().dim_even(), a.space().dim_odd(), std::move(labels)),
                            a.ad_matrices());
}

template <FieldScalar S>
QuadraticAlgebra<S> relabel(const QuadraticAlgebra<S>& q, std::vector<std::string> labels) {
  return QuadraticAlgebra<S>(relabel(q.algebra(), std::move(labels)), q.form());
}

}  // namespace qlsa
