#include "qlsa/derivations.hpp"

namespace qlsa {

std::string to_string(DerivationKind k) {
  switch (k) {
    case DerivationKind::all: return "all";
    case DerivationKind::skew: return "skew";
    case DerivationKind::inner: return "inner";
  }
  return "?";
}

DerivationKind parse_derivation_kind(const std::string& text) {
  if (text == "all") return DerivationKind::all;
  if (text == "skew") return DerivationKind::skew;
  if (text == "inner") return DerivationKind::inner;
  throw std::invalid_argument("unknown derivation kind '" + text + "' (expected all, skew or inner)");
}

Matrix<Rational> g2n2_skew_derivation(const Matrix<Rational>& a_coeffs, const Vector<Rational>& alpha,
                                      const Vector<Rational>& beta) {
  const Index n = a_coeffs.rows();
  if (n < 1 || a_coeffs.cols() != n || alpha.size() != n || beta.size() != n)
    throw std::invalid_argument("g2n2_skew_derivation: inconsistent parameter sizes");
  const auto x = [](Index i) { return i; };
  const auto y = [n](Index i) { return n + 1 + i; };
  Matrix<Rational> d = Matrix<Rational>::Zero(2 * n + 2, 2 * n + 2);
  for (Index i = 1; i <= n; ++i) {
    d(x(i), y(0)) = alpha(i - 1);
    d(y(i), y(0)) = beta(i - 1);
    d(x(0), x(i)) = -beta(i - 1);
    d(x(0), y(i)) = -alpha(i - 1);
    for (Index j = 1; j <= n; ++j) {
      d(x(j), x(i)) = a_coeffs(i - 1, j - 1);
      d(y(j), y(i)) = -a_coeffs(j - 1, i - 1);
    }
  }
  return d;
}

DerivationSpace<Rational> skew_derivation_family_g2n2(int n) {
  if (n < 1) throw std::invalid_argument("skew_derivation_family_g2n2: n must be >= 1");
  const Index m = n;
  DerivationSpace<Rational> out;
  out.kind = DerivationKind::skew;
  const Matrix<Rational> zero_a = Matrix<Rational>::Zero(m, m);
  const Vector<Rational> zero_v = Vector<Rational>::Zero(m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      Matrix<Rational> a = zero_a;
      a(i, j) = 1;
      out.basis.push_back(g2n2_skew_derivation(a, zero_v, zero_v));
    }
  for (Index i = 0; i < m; ++i) out.basis.push_back(g2n2_skew_derivation(zero_a, unit_vector<Rational>(m, i), zero_v));
  for (Index i = 0; i < m; ++i) out.basis.push_back(g2n2_skew_derivation(zero_a, zero_v, unit_vector<Rational>(m, i)));
  return out;
}

}  // namespace qlsa
