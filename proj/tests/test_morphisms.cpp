#include "catch2/catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qlsa/catalog.hpp"
#include "qlsa/claims.hpp"
#include "qlsa/morphisms.hpp"

using namespace qlsa;
using Q = Rational;

namespace {

Subspace<Q> span_of(const SuperVectorSpace& s, std::initializer_list<const char*> labels) {
  std::vector<Vector<Q>> v;
  for (const char* l : labels) v.push_back(unit_vector<Q>(s.dim(), s.index_of(l)));
  return Subspace<Q>::span(v, s.dim());
}

Matrix<Q> to_matrix(const std::vector<std::vector<Q>>& rows) {
  const auto n = static_cast<Index>(rows.size());
  Matrix<Q> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

bool failed_on(const Report& r, const std::string& fragment) {
  for (const auto& c : r.checks())
    if (c.status == Status::fail && (c.check + " " + c.witness).find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("homomorphism checks on g4") {
  const auto g4 = catalog::build("g4");
  CHECK(verify_isomorphism(Matrix<Q>(Matrix<Q>::Identity(4, 4)), g4.algebra(), g4.algebra()).passed());
  // P -> Q, others fixed: A[X,P] = Q but [AX,AP] = [X,Q] = -Q.
  Matrix<Q> a = Matrix<Q>::Identity(4, 4);
  a(1, 1) = 0;
  a(2, 1) = 1;
  const auto r = verify_homomorphism(a, g4.algebra(), g4.algebra());
  CHECK_FALSE(r.passed());
  CHECK(failed_on(r, "(X,P)"));
  CHECK_FALSE(oracle::is_morphism(oracle::table(g4), oracle::table(g4), a, false));
  CHECK_THROWS(verify_homomorphism(Matrix<Q>(Matrix<Q>::Identity(3, 3)), g4.algebra(), g4.algebra()));
}

TEST_CASE("graded maps must preserve parity") {
  const auto q = catalog::build("gs4_1");
  Matrix<Q> a = Matrix<Q>::Identity(4, 4);
  a(2, 0) = 1;
  CHECK_THROWS_AS(GradedLinearMap<Q>(q.space(), q.space(), a), std::invalid_argument);
}

TEST_CASE("T*-extension rescaling map for lambda = 3") {
  const auto a1 = t_star_extension(claims::h3_cyclic_cocycle(1)).quadratic();
  const auto a3 = t_star_extension(claims::h3_cyclic_cocycle(3)).quadratic();
  Matrix<Q> a = Matrix<Q>::Identity(6, 6);
  for (Index i = 3; i < 6; ++i) a(i, i) = 3;
  CHECK(verify_isomorphism(a, a1.algebra(), a3.algebra()).passed());
  // It is not an isometry.
  CHECK_FALSE(verify_i_isomorphism(a, a1, a3).passed());
}

TEST_CASE("isometry check") {
  const auto g4 = catalog::build("g4");
  const QuadraticAlgebra<Q> doubled(g4.algebra(), BilinearForm<Q>{Matrix<Q>(2 * g4.form().gram), FormParity::even});
  const auto r = verify_i_isomorphism(Matrix<Q>(Matrix<Q>::Identity(4, 4)), g4, doubled);
  CHECK_FALSE(r.passed());
  CHECK(verify_isomorphism(Matrix<Q>(Matrix<Q>::Identity(4, 4)), g4.algebra(), doubled.algebra()).passed());
}

TEST_CASE("cube-root map on the complex backend") {
  ScopedTolerance tol(1e-9);
  const auto base = cast_quadratic<Complex>(catalog::build("go2", {{"lambda", Q(1)}}));
  for (double l : {8.0, 27.0, 2.0}) {
    std::vector<Matrix<Complex>> ad = base.algebra().ad_matrices();
    for (auto& m : ad) m *= Complex(l);
    const QuadraticAlgebra<Complex> target(LieSuperalgebra<Complex>(base.space(), ad), base.form());
    CHECK(verify_i_isomorphism(claims::cube_root_map(Complex(l)), base, target).passed());
    // The plain identity is not an isomorphism unless l = 1.
    CHECK_FALSE(verify_isomorphism(Matrix<Complex>(Matrix<Complex>::Identity(2, 2)), base.algebra(), target.algebra()).passed());
  }
  const Complex a = std::pow(Complex(8.0), 1.0 / 3.0);
  CHECK(verify_i_isomorphism(claims::odd_heisenberg_map(a), claims::odd_heisenberg_family(1.0),
                             claims::odd_heisenberg_family(8.0))
            .passed());
}

TEST_CASE("decomposition checks") {
  const auto g4 = catalog::build("g4");
  CHECK_FALSE(decomposability_via_center(g4));
  CHECK(verify_decomposition(g4, Subspace<Q>::whole(4), Subspace<Q>::zero(4)).passed());
  const auto bad = verify_decomposition(g4, span_of(g4.space(), {"X", "Z"}), span_of(g4.space(), {"P", "Q"}));
  CHECK_FALSE(bad.passed());
  CHECK(failed_on(bad, "second summand is an ideal"));

  const auto t = t_star_extension(claims::h3_cyclic_cocycle(1)).quadratic();
  const auto w = decomposability_via_center(t);
  REQUIRE(w);
  const auto& s = t.space();
  const Vector<Q> z_minus = unit_vector<Q>(6, s.index_of("Z")) - unit_vector<Q>(6, s.index_of("Z*"));
  CHECK(w->ideal == Subspace<Q>::span(std::vector<Vector<Q>>{z_minus}, 6));
  CHECK(t.form(z_minus, z_minus) == -2);
  CHECK(verify_decomposition(t, w->ideal, w->complement).passed());
}

TEST_CASE("inner double extensions of g4 split off u = -e + xX - yP + zQ") {
  oracle::Gen gen(61);
  const auto g4 = catalog::build("g4");
  for (int trial = 0; trial < 10; ++trial) {
    const Q x = gen.rational(), y = gen.rational(), z = gen.rational();
    // The inner derivation ad(xX - yP + zQ).
    Vector<Q> v = Vector<Q>::Zero(4);
    v << x, -y, z, 0;
    const Matrix<Q> d = g4.algebra().ad(v);
    if (is_zero<Q>(d)) continue;
    const auto out = double_extension_1d(g4, d);
    const auto& s = out.space();
    Vector<Q> u = Vector<Q>::Zero(6);
    u(s.index_of("e")) = -1;
    u(s.index_of("X")) = x, u(s.index_of("P")) = -y, u(s.index_of("Q")) = z;
    const Vector<Q> f = unit_vector<Q>(6, s.index_of("f"));
    CHECK(center(out.algebra()).contains(u));
    CHECK(out.form(u, f) == -1);
    const auto w = decomposability_via_center(out, {u, f});
    REQUIRE(w);
    CHECK(w->ideal.contains(u));
    CHECK(verify_decomposition(out, w->ideal, w->complement).passed());
  }
}

TEST_CASE("fingerprints") {
  const auto g61 = catalog::build("g6_1");
  const auto g62 = catalog::build("g6_2");
  CHECK(fingerprints_distinguish(g61.algebra(), g62.algebra()));
  CHECK(fingerprint(g61.algebra()).nilpotent);
  CHECK_FALSE(fingerprint(g62.algebra()).nilpotent);
  CHECK_FALSE(fingerprints_distinguish(g61.algebra(), g61.algebra()));
  // The series agree for g^o_{4,1} and g^o_{4,2}; the dimension of Der does not.
  const auto f1 = fingerprint(catalog::build("go4_1").algebra());
  const auto f2 = fingerprint(catalog::build("go4_2").algebra());
  CHECK(f1.derived_series == f2.derived_series);
  CHECK(f1.lower_central_series == f2.lower_central_series);
  CHECK(f1.derivations != f2.derivations);
}

TEST_CASE("fingerprints and isomorphism checks survive random changes of basis") {
  oracle::Gen gen(71);
  for (const auto& e : catalog::list()) {
    const auto q = catalog::build(e.id, e.samples().back());
    if (q.dim() > 6) continue;
    const auto t = oracle::table(q);
    const auto [a, inv] = gen.graded_invertible(t.n, static_cast<int>(q.space().dim_even()));
    const auto moved = oracle::to_algebra(oracle::transport(t, a, inv), q.space(), q.form().parity);
    INFO(e.id);
    CHECK(fingerprint(moved) == fingerprint(q));
    // f_j = A e_j, so A maps the moved algebra onto the original one isometrically.
    const Matrix<Q> am = to_matrix(a);
    CHECK(verify_i_isomorphism(am, moved, q).passed());
    CHECK(oracle::is_morphism(oracle::table(moved), t, am, true));
    if (!q.algebra().is_abelian()) {
      const Matrix<Q> scaled = am * Q(2);
      CHECK_FALSE(verify_i_isomorphism(scaled, moved, q).passed());
    }
  }
}

TEST_CASE("sp(2) lemma") {
  Matrix<Q> a = Matrix<Q>::Zero(2, 2), e = Matrix<Q>::Zero(2, 2), f = Matrix<Q>::Zero(2, 2);
  a(0, 0) = Q(1, 2), a(1, 1) = Q(-1, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  CHECK(check_sp2_lemma(a, e).passed());
  CHECK_THROWS_AS(check_sp2_lemma(a, f), std::invalid_argument);  // [A,F] = -F
  CHECK_THROWS_AS(check_sp2_lemma(a, Matrix<Q>(Matrix<Q>::Zero(2, 2))), std::invalid_argument);

  // Solve [A,B] = B for A given B = P E P^{-1} with an independent linear solve.
  oracle::Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [p, p_inv] = gen.graded_invertible(2, 2);
    const Matrix<Q> pm = to_matrix(p), pi = to_matrix(p_inv);
    const Matrix<Q> b = pm * (gen.nonzero() * e) * pi;
    const Matrix<Q> h = pm * a * pi;  // a particular solution
    const Matrix<Q> sol = h + gen.rational() * b;
    REQUIRE(Matrix<Q>(sol * b - b * sol) == b);
    const auto r = check_sp2_lemma(sol, b);
    CHECK(r.passed());
    CHECK(is_zero<Q>(Matrix<Q>(b * b)));
  }
}
