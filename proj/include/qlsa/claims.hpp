#pragma once

// Reproducible checks of the structural statements about the catalog and the
// extension constructions, plus the small building blocks they use. Each
// check returns a Report; `all_claims` lists them in a fixed order for the
// full verification report.

#include "qlsa/catalog.hpp"
#include "qlsa/derivations.hpp"
#include "qlsa/extensions.hpp"
#include "qlsa/morphisms.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace qlsa::claims {

// --- building blocks --------------------------------------------------------

/// Heisenberg algebra h3: [X,Y] = Z.
LieSuperalgebra<Rational> h3();

/// The cyclic cocycle on h3: theta(X,Y) = l Z*, theta(Y,Z) = l X*, theta(Z,X) = l Y*.
Cocycle2<Rational> h3_cyclic_cocycle(const Rational& l);

/// Solvable three-dimensional Lie algebras on X, Y, Z: kind 1 is [X,Y] = Z,
/// kind 2 is [X,Y] = Y, [X,Z] = Y + Z, kind 3 is [X,Y] = Y, [X,Z] = mu Z.
LieSuperalgebra<Rational> solvable3(int kind, const Rational& mu = Rational(0));

/// Skew derivation of g4 (basis X, P, Q, Z) with parameters x, y, z.
Matrix<Rational> g4_skew_pattern(const Rational& x, const Rational& y, const Rational& z);

/// Skew derivation of g5 (basis X1, X2, T, Z1, Z2) with parameters x, y, z, t, b, c.
Matrix<Rational> g5_skew_pattern(const Rational& x, const Rational& y, const Rational& z, const Rational& t,
                                 const Rational& b, const Rational& c);

/// Double extension of g5 by g5_skew_pattern(x, y, z, 0, 0, 0). Basis e, X1, X2, T, Z1, Z2, f.
QuadraticAlgebra<Rational> g5_bar(const Rational& x, const Rational& y, const Rational& z);

/// Odd quadratic family over g_{3,1}: the g^o_{6,2} brackets plus [Z1,Z1] = l Z0.
QuadraticAlgebra<Complex> odd_heisenberg_family(const Complex& l);

/// A(X0) = l^{1/3} X0, A(X1) = l^{-1/3} X1 from g^o_2(1) to g^o_2(l).
Matrix<Complex> cube_root_map(const Complex& l);

/// The map C(X0) = aX0 + Y0, C(Y0) = aX0 + 2Y0, C(Z0) = aZ0,
/// C(X1) = (2/a)X1 - Y1, C(Y1) = -(1/a)X1 + Y1, C(Z1) = (1/a)Z1.
Matrix<Complex> odd_heisenberg_map(const Complex& a);

/// Deterministic generator of small rationals p/q with |p| <= 4, 1 <= q <= 3.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 1) {}
  Rational next();
  Rational nonzero();
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Random element of sp(V, omega): omega^{-1} S with S symmetric.
Matrix<Rational> random_symplectic_element(RationalSampler& rng, const Matrix<Rational>& omega);

/// Random pair (A, B) in sp(2) with [A,B] = B and B != 0.
std::pair<Matrix<Rational>, Matrix<Rational>> random_sp2_pair(RationalSampler& rng);

// --- checks -----------------------------------------------------------------

/// Jacobi and form axioms for every catalog sample.
Report catalog_axioms();
/// dim Z + dim [g,g] = dim g and Z = [g,g]^perp for every even-form catalog sample.
Report center_identities();
/// Skew-derivation spaces of g4, g5 and g_{2n+2} against the solved patterns.
Report derivation_dimensions();
/// Double extensions by inner derivations of g4 and g5 split off e - X0.
Report inner_extension_decomposability(std::uint64_t seed = 1, int samples = 20);
/// T*-extensions of h3 and of the solvable three-dimensional algebras.
Report t_star_suite();
/// A(X + f) = X + l f from T*_theta(h3) to T*_{l theta}(h3).
Report t_star_rescaling();
/// Second derived ideal of g5_bar(1,0,0) and the stated splitting of g5_bar(0,1,0).
Report two_step_extensions();
/// Random super double extensions and the four-dimensional examples.
Report super_double_constructions(std::uint64_t seed = 2, int samples = 50);
/// T*s-extensions over the two-dimensional Lie algebras.
Report odd_constructions();
/// Cube-root i-isomorphisms on the complex backend.
Report irrational_isomorphisms();
/// Sampled pairs for the sp(2) lemma.
Report sp2_lemma_samples(std::uint64_t seed = 3, int samples = 200);
/// The eight six-dimensional odd quadratic rows read from `data_dir`.
Report odd_six_table(const std::filesystem::path& data_dir);
/// Relations between catalog entries (relabelings, sp(4) representatives, osp(1,2)).
Report catalog_relations();

struct Claim {
  std::string id;
  std::string title;
  std::function<Report()> run;
};

std::vector<Claim> all_claims(const std::filesystem::path& data_dir);

}  // namespace qlsa::claims
