#include "qlsa/catalog.hpp"

#include "qlsa/extensions.hpp"

#include <algorithm>

namespace qlsa::catalog {

namespace {

using Q = Rational;
using Terms = BracketTable<Q>::Terms;

const Q half(1, 2);

struct Pair {
  const char* a;
  const char* b;
  Q value;
};

QuadraticAlgebra<Q> make(const SuperVectorSpace& space, FormParity parity,
                         std::initializer_list<std::tuple<const char*, const char*, Terms>> brackets,
                         std::initializer_list<Pair> form) {
  BracketTable<Q> t(space);
  for (const auto& [a, b, terms] : brackets) t.set(a, b, terms);
  FormTable<Q> f(space, parity);
  for (const auto& p : form) f.set(p.a, p.b, p.value);
  return {t.build(), f.build()};
}

const Q& param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw CatalogError("missing parameter '" + name + "'");
  return it->second;
}

// --- quadratic Lie algebras -------------------------------------------------

QuadraticAlgebra<Q> g4(const Params&) {
  return make(SuperVectorSpace::even({"X", "P", "Q", "Z"}), FormParity::even,
              {{"X", "P", {{1, "P"}}}, {"X", "Q", {{-1, "Q"}}}, {"P", "Q", {{1, "Z"}}}},
              {{"X", "Z", 1}, {"P", "Q", 1}});
}

QuadraticAlgebra<Q> g5(const Params&) {
  return make(SuperVectorSpace::even({"X1", "X2", "T", "Z1", "Z2"}), FormParity::even,
              {{"X1", "X2", {{1, "T"}}}, {"X1", "T", {{-1, "Z2"}}}, {"X2", "T", {{1, "Z1"}}}},
              {{"X1", "Z1", 1}, {"X2", "Z2", 1}, {"T", "T", 1}});
}

QuadraticAlgebra<Q> g2n2(const Params& p) {
  const Q& nq = param(p, "n");
  const int n = static_cast<int>(numerator(nq));
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  for (int i = 0; i <= n; ++i) labels.push_back("Y" + std::to_string(i));
  const auto space = SuperVectorSpace::even(labels);
  BracketTable<Q> t(space);
  FormTable<Q> f(space, FormParity::even);
  for (int i = 0; i <= n; ++i) {
    const std::string x = "X" + std::to_string(i), y = "Y" + std::to_string(i);
    f.set(x, y, 1);
    if (i == 0) continue;
    t.set("Y0", x, {{1, x}});
    t.set("Y0", y, {{-1, y}});
    t.set(x, y, {{1, "X0"}});
  }
  return {t.build(), f.build()};
}

SuperVectorSpace six_even() { return SuperVectorSpace::even({"X", "Y", "Z", "X*", "Y*", "Z*"}); }

QuadraticAlgebra<Q> g6_1(const Params&) {
  return make(six_even(), FormParity::even,
              {{"X", "Y", {{1, "Z"}}}, {"X", "Z*", {{-1, "Y*"}}}, {"Y", "Z*", {{1, "X*"}}}},
              {{"X", "X*", 1}, {"Y", "Y*", 1}, {"Z", "Z*", 1}});
}

QuadraticAlgebra<Q> g6_2(const Params&) {
  return make(six_even(), FormParity::even,
              {{"X", "Y", {{1, "Y"}}},
               {"X", "Z", {{1, "Y"}, {1, "Z"}}},
               {"X", "Y*", {{-1, "Y*"}, {-1, "Z*"}}},
               {"X", "Z*", {{-1, "Z*"}}},
               {"Y", "Y*", {{1, "X*"}}},
               {"Z", "Y*", {{1, "X*"}}},
               {"Z", "Z*", {{1, "X*"}}}},
              {{"X", "X*", 1}, {"Y", "Y*", 1}, {"Z", "Z*", 1}});
}

QuadraticAlgebra<Q> g6_3(const Params& p) {
  const Q& mu = param(p, "mu");
  return make(six_even(), FormParity::even,
              {{"X", "Y", {{1, "Y"}}},
               {"X", "Z", {{mu, "Z"}}},
               {"X", "Y*", {{-1, "Y*"}}},
               {"X", "Z*", {{-mu, "Z*"}}},
               {"Y", "Y*", {{1, "X*"}}},
               {"Z", "Z*", {{mu, "X*"}}}},
              {{"X", "X*", 1}, {"Y", "Y*", 1}, {"Z", "Z*", 1}});
}

// --- quadratic Lie superalgebras --------------------------------------------

SuperVectorSpace four_super() { return SuperVectorSpace(2, 2, {"X0", "Y0", "X1", "Y1"}); }

QuadraticAlgebra<Q> gs4_1(const Params&) {
  return make(four_super(), FormParity::even, {{"Y1", "Y1", {{-2, "X0"}}}, {"Y0", "Y1", {{-2, "X1"}}}},
              {{"X0", "Y0", 1}, {"X1", "Y1", 1}});
}

QuadraticAlgebra<Q> gs4_2(const Params&) {
  return make(four_super(), FormParity::even,
              {{"X1", "Y1", {{1, "X0"}}}, {"Y0", "X1", {{1, "X1"}}}, {"Y0", "Y1", {{-1, "Y1"}}}},
              {{"X0", "Y0", 1}, {"X1", "Y1", 1}});
}

// Split basis: sl(2) = <H, E, F> acting on the odd plane <U, V>.
QuadraticAlgebra<Q> osp12(const Params&) {
  return make(SuperVectorSpace(3, 2, {"H", "E", "F", "U", "V"}), FormParity::even,
              {{"H", "E", {{2, "E"}}},
               {"H", "F", {{-2, "F"}}},
               {"E", "F", {{1, "H"}}},
               {"H", "U", {{1, "U"}}},
               {"H", "V", {{-1, "V"}}},
               {"E", "V", {{1, "U"}}},
               {"F", "U", {{1, "V"}}},
               {"U", "U", {{-1, "E"}}},
               {"V", "V", {{1, "F"}}},
               {"U", "V", {{half, "H"}}}},
              {{"H", "H", 2}, {"E", "F", 1}, {"U", "V", 1}});
}

SuperVectorSpace diamond_super() { return SuperVectorSpace(4, 2, {"X", "P", "Q", "Z", "X1", "Y1"}); }

QuadraticAlgebra<Q> gs6_1(const Params&) {
  return make(diamond_super(), FormParity::even,
              {{"X", "P", {{1, "P"}}},
               {"X", "Q", {{-1, "Q"}}},
               {"P", "Q", {{1, "Z"}}},
               {"X", "Y1", {{1, "X1"}}},
               {"Y1", "Y1", {{1, "Z"}}}},
              {{"X", "Z", 1}, {"P", "Q", 1}, {"X1", "Y1", 1}});
}

QuadraticAlgebra<Q> gs6_2(const Params& p) {
  const Q& l = param(p, "lambda");
  return make(diamond_super(), FormParity::even,
              {{"X", "P", {{1, "P"}}},
               {"X", "Q", {{-1, "Q"}}},
               {"P", "Q", {{1, "Z"}}},
               {"X", "X1", {{l, "X1"}}},
               {"X", "Y1", {{-l, "Y1"}}},
               {"X1", "Y1", {{l, "Z"}}}},
              {{"X", "Z", 1}, {"P", "Q", 1}, {"X1", "Y1", 1}});
}

// Odd-odd brackets completed from invariance B([F,G],W) = B(F,[G,W]).
QuadraticAlgebra<Q> gs6_3(const Params&) {
  return make(diamond_super(), FormParity::even,
              {{"X", "P", {{1, "P"}}},
               {"X", "Q", {{-1, "Q"}}},
               {"P", "Q", {{1, "Z"}}},
               {"X", "X1", {{half, "X1"}}},
               {"X", "Y1", {{-half, "Y1"}}},
               {"P", "Y1", {{1, "X1"}}},
               {"X1", "Y1", {{half, "Z"}}},
               {"Y1", "Y1", {{1, "Q"}}}},
              {{"X", "Z", 1}, {"P", "Q", 1}, {"X1", "Y1", 1}});
}

// [Y0, F] = C F and [F, G] = B(C F, G) X0 on the odd part X1, X2, Y1, Y2.
QuadraticAlgebra<Q> from_sp4(const Matrix<Q>& c) {
  const SuperVectorSpace space(2, 4, {"X0", "Y0", "X1", "X2", "Y1", "Y2"});
  const auto omega = SymplecticSpace<Q>::canonical({"X1", "X2", "Y1", "Y2"}).omega;
  BracketTable<Q> t(space);
  for (Index u = 0; u < 4; ++u) {
    Vector<Q> v = Vector<Q>::Zero(6);
    v.tail(4) = c.col(u);
    t.set(1, 2 + u, v);
  }
  const Matrix<Q> pairing = c.transpose() * omega;
  for (Index u = 0; u < 4; ++u)
    for (Index v = u; v < 4; ++v) t.set(2 + u, 2 + v, pairing(u, v) * unit_vector<Q>(6, 0));
  FormTable<Q> f(space, FormParity::even);
  f.set("X0", "Y0", 1);
  for (Index u = 0; u < 4; ++u)
    for (Index v = 0; v < 4; ++v) f.set(2 + u, 2 + v, omega(u, v));
  return {t.build(), f.build()};
}

// --- odd quadratic Lie superalgebras ----------------------------------------

QuadraticAlgebra<Q> go2(const Params& p) {
  return make(SuperVectorSpace(1, 1, {"X0", "X1"}), FormParity::odd, {{"X1", "X1", {{param(p, "lambda"), "X0"}}}},
              {{"X0", "X1", 1}});
}

QuadraticAlgebra<Q> go4_1(const Params&) {
  return make(four_super(), FormParity::odd, {{"X1", "X1", {{1, "Y0"}}}, {"X1", "Y1", {{1, "X0"}}}},
              {{"X0", "X1", 1}, {"Y0", "Y1", 1}});
}

QuadraticAlgebra<Q> go4_2(const Params&) {
  return make(four_super(), FormParity::odd,
              {{"X1", "X1", {{1, "Y0"}}}, {"X1", "Y1", {{1, "X0"}, {1, "Y0"}}}, {"Y1", "Y1", {{1, "X0"}}}},
              {{"X0", "X1", 1}, {"Y0", "Y1", 1}});
}

QuadraticAlgebra<Q> go4_3(const Params&) {
  return make(four_super(), FormParity::odd,
              {{"X0", "Y0", {{1, "Y0"}}}, {"X0", "Y1", {{-1, "Y1"}}}, {"Y0", "Y1", {{1, "X1"}}}},
              {{"X0", "X1", 1}, {"Y0", "Y1", 1}});
}

SuperVectorSpace six_odd() { return SuperVectorSpace(3, 3, {"X0", "Y0", "Z0", "X1", "Y1", "Z1"}); }
#define ODD6_FORM {{"X0", "X1", 1}, {"Y0", "Y1", 1}, {"Z0", "Z1", 1}}

QuadraticAlgebra<Q> go6_0(const Params&) { return make(six_odd(), FormParity::odd, {}, ODD6_FORM); }

// [g1,g1] in g0 over the abelian algebra: the Hesse pencil of ternary cubics
// x^3 + y^3 + z^3 + t xyz as a fully symmetric pairing phi.
QuadraticAlgebra<Q> go6_1(const Params& p) {
  const Q& t = param(p, "t");
  const auto base = LieSuperalgebra<Q>::abelian(SuperVectorSpace::even({"X0", "Y0", "Z0"}));
  SymPairing<Q> phi = SymPairing<Q>::zero(base);
  for (Index i = 0; i < 3; ++i) phi.phi(i, i, i) = 1;
  const Index perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& s : perm) phi.phi(s[0], s[1], s[2]) = t / 6;
  const auto q = ts_star_extension(phi).quadratic();
  return relabel(q, {"X0", "Y0", "Z0", "X1", "Y1", "Z1"});
}

QuadraticAlgebra<Q> go6_2(const Params&) {
  return make(six_odd(), FormParity::odd,
              {{"X0", "Y0", {{1, "Z0"}}}, {"Y0", "Z1", {{1, "X1"}}}, {"X0", "Z1", {{-1, "Y1"}}}}, ODD6_FORM);
}

QuadraticAlgebra<Q> go6_3(const Params&) {
  return make(six_odd(), FormParity::odd,
              {{"X0", "Y0", {{1, "Z0"}}},
               {"Y0", "Z1", {{1, "X1"}}},
               {"X0", "Z1", {{-1, "Y1"}}},
               {"Z1", "Z1", {{1, "Z0"}}}},
              ODD6_FORM);
}

QuadraticAlgebra<Q> go6_4(const Params&) {
  return make(six_odd(), FormParity::odd,
              {{"X0", "Y0", {{1, "Y0"}}},
               {"X0", "Z0", {{1, "Y0"}, {1, "Z0"}}},
               {"X0", "Y1", {{-1, "Y1"}, {-1, "Z1"}}},
               {"Y0", "Y1", {{1, "X1"}}},
               {"Z0", "Y1", {{1, "X1"}}},
               {"X0", "Z1", {{-1, "Z1"}}},
               {"Z0", "Z1", {{1, "X1"}}}},
              ODD6_FORM);
}

QuadraticAlgebra<Q> go6_5(const Params& p) {
  return make(six_odd(), FormParity::odd,
              {{"X0", "Y0", {{1, "Y0"}}},
               {"X0", "Y1", {{-1, "Y1"}}},
               {"Y0", "Y1", {{1, "X1"}}},
               {"Z1", "Z1", {{param(p, "gamma"), "Z0"}}}},
              ODD6_FORM);
}

QuadraticAlgebra<Q> go6_6(const Params& p) {
  const Q& mu = param(p, "mu");
  return make(six_odd(), FormParity::odd,
              {{"X0", "Y0", {{1, "Y0"}}},
               {"X0", "Z0", {{mu, "Z0"}}},
               {"X0", "Y1", {{-1, "Y1"}}},
               {"Y0", "Y1", {{1, "X1"}}},
               {"X0", "Z1", {{-mu, "Z1"}}},
               {"Z0", "Z1", {{mu, "X1"}}}},
              ODD6_FORM);
}

QuadraticAlgebra<Q> go6_7(const Params&) {
  return make(six_odd(), FormParity::odd,
              {{"X0", "Y0", {{1, "Y0"}}},
               {"X0", "Z0", {{-half, "Z0"}}},
               {"X0", "Y1", {{-1, "Y1"}}},
               {"Y0", "Y1", {{1, "X1"}}},
               {"X0", "Z1", {{half, "Z1"}}},
               {"Z0", "Z1", {{-half, "X1"}}},
               {"Z1", "Z1", {{1, "Y0"}}},
               {"Z1", "Y1", {{1, "Z0"}}}},
              ODD6_FORM);
}
#undef ODD6_FORM

// --- entry table ------------------------------------------------------------

std::function<Decomposability(const Params&)> always(Decomposability d) {
  return [d](const Params&) { return d; };
}

ParamSpec any_param(std::string name) {
  return {std::move(name), "any", [](const Q&) { return true; }, {}};
}

ParamSpec nonzero_param(std::string name) {
  return {name, name + " != 0", [](const Q& x) { return !x.is_zero(); }, {}};
}

std::vector<CatalogEntry> make_entries() {
  using D = Decomposability;
  const auto ind = always(D::indecomposable);
  std::vector<CatalogEntry> e;
  e.push_back({"g4", "diamond Lie algebra with B(X,Z) = B(P,Q) = 1", {}, g4, ind, {}});
  e.push_back({"g5", "five-dimensional nilpotent quadratic Lie algebra", {}, g5, ind, {}});
  e.push_back({"g2n2",
               "quadratic Lie algebra g_{2n+2}: [Y0,Xi] = Xi, [Y0,Yi] = -Yi, [Xi,Yi] = X0",
               {{"n", "integer n >= 1",
                 [](const Q& n) { return denominator(n) == 1 && n >= 1 && n <= 6; },
                 {Q(1), Q(2), Q(3)}}},
               g2n2,
               always(D::unstated),
               {"g2n2(n=1) is the diamond algebra g4 under X0->Z, X1->P, Y0->X, Y1->Q"}});
  e.push_back({"g6_1", "T*-extension of g_{3,1}: [X,Y] = Z", {}, g6_1, ind, {}});
  e.push_back({"g6_2", "T*-extension of g_{3,2}: [X,Y] = Y, [X,Z] = Y + Z", {}, g6_2, ind, {}});
  e.push_back({"g6_3",
               "T*-extension of g_{3,3}: [X,Y] = Y, [X,Z] = mu Z",
               {{"mu", "|mu| <= 1, mu != -1", [](const Q& m) { return abs(m) <= 1 && m != -1; }, {}}},
               g6_3,
               [](const Params& p) { return param(p, "mu").is_zero() ? D::decomposable : D::indecomposable; },
               {"at mu = 0, Z and Z* are central with B(Z,Z*) = 1, so the algebra is decomposable"}});
  e.push_back({"gs4_1", "quadratic Lie superalgebra g^s_{4,1} (nilpotent C)", {}, gs4_1, ind, {}});
  e.push_back({"gs4_2", "quadratic Lie superalgebra g^s_{4,2} (semi-simple C)", {}, gs4_2, ind, {}});
  e.push_back({"osp12",
               "osp(1,2): even part acting on the odd plane as sp(2)",
               {},
               osp12,
               ind,
               {"stored in the rational split basis H, E, F | U, V; the o(3)-orthonormal basis needs sqrt(-1)"}});
  e.push_back({"gs6_1", "g^s_{6,1}: [X,Y1] = X1, [Y1,Y1] = Z over the diamond algebra", {}, gs6_1, ind, {}});
  e.push_back({"gs6_2",
               "g^s_{6,2}(lambda): [X,X1] = lambda X1, [X,Y1] = -lambda Y1, [X1,Y1] = lambda Z",
               {nonzero_param("lambda")},
               gs6_2,
               ind,
               {"g^s_{6,2}(l1) and g^s_{6,2}(l2) are i-isomorphic iff l1 = l2 (annotation; only l1 = l2 is checked)"}});
  e.push_back({"gs6_3", "g^s_{6,3}: ad(X) = diag(1/2,-1/2), ad(P) nilpotent on the odd part", {}, gs6_3, ind, {}});
  e.push_back({"gs6_4", "g^s_{6,4}: nilpotent C of partition [2^2]", {},
               [](const Params&) { return from_sp4(sp4_representative("gs6_4")); }, ind, {}});
  e.push_back({"gs6_5", "g^s_{6,5}: C = ad(Y0) with a nilpotent and a semi-simple block", {},
               [](const Params&) { return from_sp4(sp4_representative("gs6_5")); }, ind, {}});
  e.push_back({"gs6_6",
               "g^s_{6,6}(lambda): C = diag(1, lambda, -1, -lambda)",
               {nonzero_param("lambda")},
               [](const Params& p) { return from_sp4(sp4_representative("gs6_6", param(p, "lambda"))); },
               ind,
               {"g^s_{6,6}(l1) ~ g^s_{6,6}(l2) iff l1 = +-l2 or l2 = +-1/l1 (annotation; no maps are constructed)"}});
  e.push_back({"gs6_7", "g^s_{6,7}: C with two Jordan blocks of size 2", {},
               [](const Params&) { return from_sp4(sp4_representative("gs6_7")); }, ind,
               {"[Y0,Y2] = -Y2 as forced by C and invariance (the printed bracket list reads -Y1)"}});
  e.push_back({"go2", "odd quadratic g^o_2(lambda): [X1,X1] = lambda X0", {any_param("lambda")}, go2, ind,
               {"g^o_2(lambda) ~ g^o_2(1) for lambda != 0 via a cube-root map (complex backend)"}});
  e.push_back({"go4_1", "odd quadratic g^o_{4,1}: [X1,X1] = Y0, [X1,Y1] = X0", {}, go4_1, ind,
               {"g^o_{4,1} and g^o_{4,2} are not isomorphic; dim Der separates them"}});
  e.push_back({"go4_2", "odd quadratic g^o_{4,2}", {}, go4_2, ind, {}});
  e.push_back({"go4_3", "odd quadratic diamond type: [X0,Y0] = Y0, [X0,Y1] = -Y1, [Y0,Y1] = X1", {}, go4_3, ind, {}});
  e.push_back({"go6_0", "solvable six-dimensional odd quadratic, abelian", {}, go6_0, always(D::decomposable), {}});
  e.push_back({"go6_1", "solvable six-dimensional odd quadratic, g0 abelian with [g1,g1] in g0 (Hesse pencil)",
               {any_param("t")}, go6_1, always(D::unstated),
               {"one representative family of T*s-extensions of the abelian 3-dim algebra"}});
  e.push_back({"go6_2", "solvable six-dimensional odd quadratic over g_{3,1}", {}, go6_2, ind, {}});
  e.push_back({"go6_3", "solvable six-dimensional odd quadratic over g_{3,1} with [Z1,Z1] = Z0", {}, go6_3, ind, {}});
  e.push_back({"go6_4", "solvable six-dimensional odd quadratic over g_{3,2}", {}, go6_4, ind, {}});
  e.push_back({"go6_5", "solvable six-dimensional odd quadratic g^o_{4,3} (+) g^o_2(gamma)", {any_param("gamma")},
               go6_5, always(D::decomposable),
               {"listed as an orthogonal sum of two ideals, hence decomposable"}});
  e.push_back({"go6_6",
               "solvable six-dimensional odd quadratic over g_{3,3}(mu)",
               {{"mu", "mu != 0, |mu| <= 1", [](const Q& m) { return !m.is_zero() && abs(m) <= 1; }, {}}},
               go6_6,
               ind,
               {}});
  e.push_back({"go6_7", "solvable six-dimensional odd quadratic over g_{3,3}(-1/2) with [Z1,Z1] = Y0", {}, go6_7, ind,
               {}});
  std::sort(e.begin(), e.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return e;
}

// Fingerprints recorded from the default samples.
const std::map<std::string, std::string>& frozen() {
  static const std::map<std::string, std::string> table = {
#include "catalog_fingerprints.inc"
  };
  return table;
}

// Explicit ideals for decomposable entries whose splitting is not spanned by
// central vectors; the other summand is the orthogonal complement.
const std::map<std::string, std::vector<std::string>>& known_splits() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"go6_0", {"X0", "X1"}},
      {"go6_5", {"Z0", "Z1"}},
  };
  return table;
}

Subspace<Q> span_of(const SuperVectorSpace& space, const std::vector<std::string>& labels) {
  std::vector<Vector<Q>> gens;
  for (const auto& l : labels) gens.push_back(unit_vector<Q>(space.dim(), space.index_of(l)));
  return Subspace<Q>::span(gens, space.dim());
}

}  // namespace

std::string to_string(Decomposability d) {
  switch (d) {
    case Decomposability::indecomposable: return "indecomposable";
    case Decomposability::decomposable: return "decomposable";
    case Decomposability::unstated: return "unstated";
  }
  return "?";
}

const std::vector<Rational>& default_grid() {
  static const std::vector<Rational> grid{Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1), Q(2)};
  return grid;
}

std::vector<Params> CatalogEntry::samples() const {
  std::vector<Params> out{Params{}};
  for (const auto& param : params) {
    std::vector<Q> values;
    for (const auto& v : param.samples.empty() ? default_grid() : param.samples)
      if (param.admissible(v)) values.push_back(v);
    std::vector<Params> next;
    for (const auto& partial : out)
      for (const auto& v : values) {
        Params p = partial;
        p[param.name] = v;
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

void CatalogEntry::check_params(const Params& p) const {
  for (const auto& [name, value] : p) {
    auto it = std::find_if(params.begin(), params.end(), [&](const ParamSpec& s) { return s.name == name; });
    if (it == params.end()) throw CatalogError(id + ": unknown parameter '" + name + "'");
    if (!it->admissible(value))
      throw CatalogError(id + ": inadmissible " + name + " = " + format_scalar(value) + " (need " + it->rule + ")");
  }
  for (const auto& param : params)
    if (!p.count(param.name)) throw CatalogError(id + ": missing parameter '" + param.name + "'");
}

const std::vector<CatalogEntry>& list() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& entry(const std::string& id) {
  for (const auto& e : list())
    if (e.id == id) return e;
  throw CatalogError("unknown catalog id '" + id + "'");
}

QuadraticAlgebra<Rational> build(const std::string& id, const Params& params) {
  const auto& e = entry(id);
  e.check_params(params);
  return e.builder(params);
}

std::string sample_key(const std::string& id, const Params& params) {
  if (params.empty()) return id;
  std::string out = id + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    out += (first ? "" : ",") + k + "=" + format_scalar(v);
    first = false;
  }
  return out + ")";
}

std::optional<std::string> expected_fingerprint(const std::string& key) {
  auto it = frozen().find(key);
  if (it == frozen().end()) return std::nullopt;
  return it->second;
}

Report verify_entry(const std::string& id, const Params& params) {
  const auto& e = entry(id);
  const auto q = build(id, params);
  const std::string key = sample_key(id, params);
  Report r(key);
  r.merge(verify_jacobi(q.algebra()));
  r.merge(verify_form(q.algebra(), q.form()));
  if (q.verified().nondegenerate) r.merge(verify_center_identities(q));

  const auto fp = fingerprint(q);
  if (auto expected = expected_fingerprint(key)) {
    r.add("fingerprint", "frozen structural invariants of " + e.source, fp.to_string() == *expected, {},
          fp.to_string() == *expected ? fp.to_string() : "got " + fp.to_string() + ", expected " + *expected);
  } else {
    r.info("fingerprint", "no frozen value for this sample", fp.to_string());
  }

  const auto flag = e.decomposability(params);
  const auto witness = decomposability_via_center(q);
  const std::string found = witness ? "central witness of dim " + std::to_string(witness->ideal.dim()) : "no central witness";
  switch (flag) {
    case Decomposability::indecomposable:
      r.add("no central decomposition", "indecomposable as listed: " + e.source, !witness.has_value(), {}, found);
      break;
    case Decomposability::decomposable:
      if (witness) {
        r.add("central decomposition", "decomposable: " + e.source, true, {}, found);
      } else if (auto it = known_splits().find(id); it != known_splits().end()) {
        const auto s1 = span_of(q.space(), it->second);
        r.merge(verify_decomposition(q, s1, orthogonal_complement(q, s1)), "split: ");
      } else {
        r.add("central decomposition", "decomposable: " + e.source, false, {}, found);
      }
      break;
    case Decomposability::unstated:
      r.info("decomposability", "not stated", found);
      break;
  }
  for (const auto& n : e.notes) r.info("note", n);
  return r;
}

Report verify_all(const std::optional<std::string>& only) {
  Report all("catalog");
  for (const auto& e : list()) {
    if (only && e.id != *only) continue;
    for (const auto& p : e.samples()) all.merge(verify_entry(e.id, p), sample_key(e.id, p) + ": ");
  }
  if (only && all.checks().empty()) throw CatalogError("unknown catalog id '" + *only + "'");
  return all;
}

Matrix<Rational> sp4_representative(const std::string& id, const Rational& lambda) {
  Matrix<Q> c = Matrix<Q>::Zero(4, 4);
  if (id == "gs6_4") {
    c(0, 1) = 1;
    c(3, 2) = -1;
  } else if (id == "gs6_5") {
    c(0, 2) = 1;
    c(1, 1) = 1;
    c(3, 3) = -1;
  } else if (id == "gs6_6") {
    c(0, 0) = 1;
    c(1, 1) = lambda;
    c(2, 2) = -1;
    c(3, 3) = -lambda;
  } else if (id == "gs6_7") {
    c(0, 0) = 1;
    c(0, 1) = 1;
    c(1, 1) = 1;
    c(2, 2) = -1;
    c(3, 2) = -1;
    c(3, 3) = -1;
  } else {
    throw CatalogError("no sp(4) representative for '" + id + "'");
  }
  return c;
}

OrthonormalOsp osp12_orthonormal() {
  using C = Complex;
  const auto split = cast_quadratic<C>(build("osp12"));
  const C i(0, 1);
  // Columns: X1, X2, X3, U, V in the split basis H, E, F, U, V.
  Matrix<C> p = Matrix<C>::Zero(5, 5);
  p(1, 0) = -i / 2.0;
  p(2, 0) = -i / 2.0;
  p(1, 1) = -0.5;
  p(2, 1) = 0.5;
  p(0, 2) = -i / 2.0;
  p(3, 3) = 1;
  p(4, 4) = 1;
  const Matrix<C> p_inv = p.inverse();
  std::vector<Matrix<C>> ad;
  for (Index k = 0; k < 5; ++k) ad.push_back(p_inv * split.algebra().ad(Vector<C>(p.col(k))) * p);
  LieSuperalgebra<C> algebra(SuperVectorSpace(3, 2, {"X1", "X2", "X3", "U", "V"}), std::move(ad));
  BilinearForm<C> form{C(-2) * (p.transpose() * split.form().gram * p), FormParity::even};
  return {QuadraticAlgebra<C>(std::move(algebra), std::move(form)), p};
}

}  // namespace qlsa::catalog
