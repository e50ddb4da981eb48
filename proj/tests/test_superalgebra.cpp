#include "catch2/catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qlsa/catalog.hpp"

using namespace qlsa;
using Q = Rational;

namespace {

const SuperVectorSpace& diamond_space() {
  static const auto s = SuperVectorSpace::even({"X", "P", "Q", "Z"});
  return s;
}

LieSuperalgebra<Q> diamond(bool broken = false) {
  BracketTable<Q> t(diamond_space());
  t.set("X", "P", {{1, "P"}}).set("X", "Q", {{-1, "Q"}});
  if (broken)
    t.set("P", "Q", {{1, "P"}});  // [X,[P,Q]] + [P,[Q,X]] + [Q,[X,P]] = P
  else
    t.set("P", "Q", {{1, "Z"}});
  return t.build();
}

BilinearForm<Q> diamond_form(const Q& pq = 1) {
  return FormTable<Q>(diamond_space(), FormParity::even).set("X", "Z", 1).set("P", "Q", pq).build();
}

Subspace<Q> span_of(const SuperVectorSpace& s, std::initializer_list<const char*> labels) {
  std::vector<Vector<Q>> v;
  for (const char* l : labels) v.push_back(unit_vector<Q>(s.dim(), s.index_of(l)));
  return Subspace<Q>::span(v, s.dim());
}

bool failed(const Report& r, const std::string& fragment) {
  for (const auto& c : r.checks())
    if (c.status == Status::fail && (c.check + " " + c.witness).find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("graded sign") {
  CHECK(graded_sign(0, 0) == 1);
  CHECK(graded_sign(0, 1) == 1);
  CHECK(graded_sign(1, 1) == -1);
}

TEST_CASE("verify_jacobi examples") {
  CHECK(verify_jacobi(diamond()).passed());
  CHECK(verify_jacobi(LieSuperalgebra<Q>::abelian(SuperVectorSpace(2, 3, {"a", "b", "u", "v", "w"}))).passed());
  const auto r = verify_jacobi(diamond(true));
  CHECK_FALSE(r.passed());
  CHECK(failed(r, "(X,P,Q)"));
  CHECK(oracle::jacobi_violations(oracle::table(diamond(true))) > 0);
  // With [P,Q] = X instead the table is sl(2) in the basis H = 2X, E = P, F = 2Q: Jacobi holds.
  const auto sl2 = BracketTable<Q>(diamond_space())
                       .set("X", "P", {{1, "P"}})
                       .set("X", "Q", {{-1, "Q"}})
                       .set("P", "Q", {{1, "X"}})
                       .build();
  CHECK(verify_jacobi(sl2).passed());
  CHECK(oracle::jacobi_violations(oracle::table(sl2)) == 0);
}

TEST_CASE("verify_form examples") {
  CHECK(verify_form(diamond(), diamond_form()).passed());
  const auto zero = verify_form(diamond(), BilinearForm<Q>{Matrix<Q>::Zero(4, 4), FormParity::even});
  CHECK(failed(zero, "non-degenerate"));
  const auto scaled = verify_form(diamond(), diamond_form(2));
  CHECK(failed(scaled, "invariant"));
  CHECK_FALSE(oracle::invariant(oracle::table(QuadraticAlgebra<Q>(diamond(), diamond_form(2)))));
  CHECK_THROWS(verify_form(diamond(), BilinearForm<Q>{Matrix<Q>::Identity(3, 3), FormParity::even}));
}

TEST_CASE("bracket tables reject wrong parity and keep antisymmetry") {
  const SuperVectorSpace s(1, 2, {"E", "U", "V"});
  CHECK_THROWS(BracketTable<Q>(s).set("E", "U", {{1, "E"}}).build());
  const auto a = BracketTable<Q>(s).set("U", "V", {{1, "E"}}).set("E", "U", {{1, "U"}}).build();
  const auto t = oracle::table(a);
  CHECK(oracle::graded_antisymmetric(t));
  CHECK(t.at(2, 1, 0) == 1);  // [V,U] = +[U,V] for two odd elements
  CHECK(t.at(1, 0, 1) == -1);
}

TEST_CASE("center, derived series and orthogonal complements of g4") {
  const QuadraticAlgebra<Q> g4(diamond(), diamond_form());
  const auto& s = g4.space();
  CHECK(center(g4.algebra()) == span_of(s, {"Z"}));
  CHECK(center(LieSuperalgebra<Q>::abelian(SuperVectorSpace::even({"a", "b", "c"}))).dim() == 3);
  CHECK(derived_subalgebra(g4.algebra()) == span_of(s, {"P", "Q", "Z"}));
  CHECK(is_solvable(g4.algebra()));
  CHECK_FALSE(is_nilpotent(g4.algebra()));
  CHECK(derived_subalgebra(LieSuperalgebra<Q>::abelian(SuperVectorSpace::even({"a", "b"}))).is_zero());
  CHECK(orthogonal_complement(g4, Subspace<Q>::whole(4)).is_zero());
  CHECK(orthogonal_complement(g4, span_of(s, {"Z"})) == span_of(s, {"P", "Q", "Z"}));
  CHECK(is_ideal(g4.algebra(), span_of(s, {"Z"})));
  CHECK_FALSE(is_nondegenerate_on(g4, span_of(s, {"Z"})));
  CHECK(is_ideal(g4.algebra(), Subspace<Q>::whole(4)));
  CHECK_FALSE(is_ideal(g4.algebra(), span_of(s, {"P"})));
}

TEST_CASE("center of g6_1") {
  const auto q = catalog::build("g6_1");
  CHECK(center(q.algebra()) == span_of(q.space(), {"Z", "X*", "Y*"}));
}

TEST_CASE("library axiom checks agree with the brute-force oracle on transported catalog algebras") {
  oracle::Gen gen(23);
  int checked = 0;
  for (const auto& e : catalog::list()) {
    const auto samples = e.samples();
    const auto q = catalog::build(e.id, samples[static_cast<std::size_t>(gen.below(static_cast<int>(samples.size())))]);
    if (q.dim() > 7) continue;
    const auto t = oracle::table(q);
    REQUIRE(oracle::is_quadratic(t));
    const auto [a, inv] = gen.graded_invertible(t.n, static_cast<int>(q.space().dim_even()));
    const auto moved = oracle::transport(t, a, inv);
    // Any change of homogeneous basis keeps every axiom.
    CHECK(oracle::is_quadratic(moved));
    const auto lib = oracle::to_algebra(moved, q.space(), q.form().parity);
    CHECK(lib.verified().all());
    CHECK(center(lib.algebra()).dim() == oracle::center_dim(moved));
    CHECK(derived_subalgebra(lib.algebra()).dim() == oracle::derived_dim(moved));
    if (q.form().parity == FormParity::even) CHECK(verify_center_identities(lib).passed());
    ++checked;
  }
  CHECK(checked >= 25);
}

TEST_CASE("perturbed structure constants are caught by both checkers") {
  oracle::Gen gen(29);
  for (const char* id : {"g4", "g5", "g6_2", "gs4_1", "gs6_1", "go4_3", "osp12"}) {
    const auto q = catalog::build(id);
    auto t = oracle::table(q);
    // Perturb one antisymmetric pair within the allowed parity pattern.
    for (int attempt = 0; attempt < 50; ++attempt) {
      const int i = gen.below(t.n), j = gen.below(t.n), k = gen.below(t.n);
      if (i == j || t.parity[k] != (t.parity[i] ^ t.parity[j])) continue;
      const Q d = gen.nonzero();
      t.at(i, j, k) += d;
      t.at(j, i, k) -= oracle::sign(t.parity[i], t.parity[j]) * d;
      break;
    }
    const auto lib = oracle::to_algebra(t, q.space(), q.form().parity);
    const bool oracle_ok = oracle::jacobi_violations(t) == 0 && oracle::invariant(t);
    const bool lib_ok = verify_jacobi(lib.algebra()).passed() && verify_form(lib.algebra(), lib.form()).passed();
    CHECK(oracle_ok == lib_ok);
  }
}
