#pragma once

// Brute-force reference computations on flat structure-constant arrays,
// written without the library's solvers, plus small deterministic generators
// for property tests.

#include "qlsa/superalgebra.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using qlsa::Index;
using Q = qlsa::Rational;

/// c[(i*n + j)*n + k] = coefficient of e_k in [e_i, e_j]; g[i*n + j] = B(e_i, e_j).
struct Table {
  int n = 0;
  std::vector<int> parity;
  std::vector<Q> c;
  std::vector<Q> g;

  Q& at(int i, int j, int k) { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
  const Q& at(int i, int j, int k) const { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
  const Q& form(int i, int j) const { return g[static_cast<std::size_t>(i * n + j)]; }
};

inline Table table(const qlsa::LieSuperalgebra<Q>& a) {
  Table t;
  t.n = static_cast<int>(a.dim());
  t.c.assign(static_cast<std::size_t>(t.n * t.n * t.n), Q(0));
  t.g.assign(static_cast<std::size_t>(t.n * t.n), Q(0));
  for (int i = 0; i < t.n; ++i) {
    t.parity.push_back(a.parity(i));
    for (int j = 0; j < t.n; ++j) {
      const auto v = a.bracket(i, j);
      for (int k = 0; k < t.n; ++k) t.at(i, j, k) = v(k);
    }
  }
  return t;
}

inline Table table(const qlsa::QuadraticAlgebra<Q>& q) {
  Table t = table(q.algebra());
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) t.g[static_cast<std::size_t>(i * t.n + j)] = q.form().gram(i, j);
  return t;
}

inline int sign(int a, int b) { return (a & b) ? -1 : 1; }

/// [e_a, sum_m v_m e_m] as a coefficient vector.
inline std::vector<Q> bracket_with(const Table& t, int a, const std::vector<Q>& v) {
  std::vector<Q> out(static_cast<std::size_t>(t.n), Q(0));
  for (int m = 0; m < t.n; ++m) {
    if (v[static_cast<std::size_t>(m)] == 0) continue;
    for (int l = 0; l < t.n; ++l) out[static_cast<std::size_t>(l)] += v[static_cast<std::size_t>(m)] * t.at(a, m, l);
  }
  return out;
}

inline std::vector<Q> basis_bracket(const Table& t, int a, int b) {
  std::vector<Q> out;
  for (int k = 0; k < t.n; ++k) out.push_back(t.at(a, b, k));
  return out;
}

/// Number of triples violating the graded Jacobi identity.
inline int jacobi_violations(const Table& t) {
  int bad = 0;
  const auto& p = t.parity;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (int z = 0; z < t.n; ++z) {
        const auto a = bracket_with(t, x, basis_bracket(t, y, z));
        const auto b = bracket_with(t, y, basis_bracket(t, z, x));
        const auto c = bracket_with(t, z, basis_bracket(t, x, y));
        for (int k = 0; k < t.n; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          const Q sum = sign(p[x], p[z]) * a[uk] + sign(p[y], p[x]) * b[uk] + sign(p[z], p[y]) * c[uk];
          if (sum != 0) {
            ++bad;
            break;
          }
        }
      }
  return bad;
}

/// [e_j, e_i] = -(-1)^{p_i p_j} [e_i, e_j] for all pairs.
inline bool graded_antisymmetric(const Table& t) {
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k)
        if (t.at(j, i, k) != -sign(t.parity[i], t.parity[j]) * t.at(i, j, k)) return false;
  return true;
}

/// Nonzero c(i,j,k) only when p_k = p_i + p_j mod 2.
inline bool parity_consistent(const Table& t) {
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k)
        if (t.at(i, j, k) != 0 && t.parity[k] != (t.parity[i] ^ t.parity[j])) return false;
  return true;
}

inline bool invariant(const Table& t) {
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) {
        Q lhs = 0, rhs = 0;
        for (int m = 0; m < t.n; ++m) {
          lhs += t.at(i, j, m) * t.form(m, k);
          rhs += t.form(i, m) * t.at(j, k, m);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

inline bool supersymmetric(const Table& t) {
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      if (t.form(j, i) != sign(t.parity[i], t.parity[j]) * t.form(i, j)) return false;
  return true;
}

/// Rank by plain Gaussian elimination on a row-major copy.
inline int rank(std::vector<std::vector<Q>> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      const Q f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                  rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = 0; k < cols; ++k)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }
    ++r;
  }
  return r;
}

inline bool nondegenerate(const Table& t) {
  std::vector<std::vector<Q>> rows(static_cast<std::size_t>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) rows[static_cast<std::size_t>(i)].push_back(t.form(i, j));
  return rank(rows) == t.n;
}

/// dim of the center: n minus the rank of the stacked maps v -> [v, e_j].
inline int center_dim(const Table& t) {
  std::vector<std::vector<Q>> rows;
  for (int j = 0; j < t.n; ++j)
    for (int k = 0; k < t.n; ++k) {
      std::vector<Q> row;
      for (int i = 0; i < t.n; ++i) row.push_back(t.at(i, j, k));
      rows.push_back(row);
    }
  return t.n - rank(rows);
}

/// dim [g,g]: rank of all bracket vectors.
inline int derived_dim(const Table& t) {
  std::vector<std::vector<Q>> rows;
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) rows.push_back(basis_bracket(t, i, j));
  return rank(rows);
}

inline bool is_quadratic(const Table& t) {
  return jacobi_violations(t) == 0 && graded_antisymmetric(t) && parity_consistent(t) && supersymmetric(t) &&
         invariant(t) && nondegenerate(t);
}

/// Structure constants in the basis f_j = sum_i A(i,j) e_i, where A is
/// invertible; `inv` is A^{-1}. The gram transforms as A^T G A.
inline Table transport(const Table& t, const std::vector<std::vector<Q>>& a, const std::vector<std::vector<Q>>& inv) {
  Table out = t;
  const auto n = static_cast<std::size_t>(t.n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Q> v(n, Q(0));  // [f_i, f_j] in e-coordinates
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Q coeff = a[p][i] * a[q][j];
          if (coeff == 0) continue;
          for (std::size_t k = 0; k < n; ++k) v[k] += coeff * t.at(static_cast<int>(p), static_cast<int>(q), static_cast<int>(k));
        }
      for (std::size_t k = 0; k < n; ++k) {
        Q s = 0;
        for (std::size_t m = 0; m < n; ++m) s += inv[k][m] * v[m];
        out.at(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)) = s;
      }
      Q b = 0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) b += a[p][i] * t.form(static_cast<int>(p), static_cast<int>(q)) * a[q][j];
      out.g[i * n + j] = b;
    }
  return out;
}

/// A[e_i,e_j] = [Ae_i, Ae_j] for all pairs; with `isometry`, also
/// B'(Ae_i, Ae_j) = B(e_i, e_j). Column j of `a` is the image of e_j.
inline bool is_morphism(const Table& src, const Table& tgt, const qlsa::Matrix<Q>& a, bool isometry) {
  const int n = src.n, m = tgt.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < m; ++k) {
        Q lhs = 0, rhs = 0;
        for (int l = 0; l < n; ++l) lhs += a(k, l) * src.at(i, j, l);
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q) rhs += a(p, i) * a(q, j) * tgt.at(p, q, k);
        if (lhs != rhs) return false;
      }
      if (isometry) {
        Q b = 0;
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q) b += a(p, i) * tgt.form(p, q) * a(q, j);
        if (b != src.form(i, j)) return false;
      }
    }
  return true;
}

/// Builds a library algebra from a table (for round trips through the library).
inline qlsa::QuadraticAlgebra<Q> to_algebra(const Table& t, const qlsa::SuperVectorSpace& space,
                                            qlsa::FormParity parity) {
  std::vector<qlsa::Matrix<Q>> ad;
  for (int i = 0; i < t.n; ++i) {
    qlsa::Matrix<Q> m(t.n, t.n);
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) m(k, j) = t.at(i, j, k);
    ad.push_back(m);
  }
  qlsa::Matrix<Q> g(t.n, t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) g(i, j) = t.form(i, j);
  return {qlsa::LieSuperalgebra<Q>(space, ad), qlsa::BilinearForm<Q>{g, parity}};
}

// --- generators -------------------------------------------------------------

/// xorshift64* driven source of small rationals and matrices.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed ? seed : 0x2545F4914F6CDD1DULL) {}

  std::uint64_t raw() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1DULL;
  }
  int below(int n) { return static_cast<int>(raw() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  /// p/q with |p| <= 5, 1 <= q <= 4.
  Q rational() { return Q(range(-5, 5), range(1, 4)); }
  Q nonzero() {
    Q r;
    do r = rational();
    while (r == 0);
    return r;
  }

  qlsa::Matrix<Q> matrix(Index rows, Index cols) {
    qlsa::Matrix<Q> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = below(3) == 0 ? Q(0) : rational();
    return m;
  }

  /// Random matrix of rank at most r (product of n x r and r x m factors).
  qlsa::Matrix<Q> low_rank(Index rows, Index cols, Index r) {
    return qlsa::Matrix<Q>(matrix(rows, r) * matrix(r, cols));
  }

  /// Invertible parity-preserving map as a product of elementary operations
  /// within the even block [0, even) and the odd block [even, n); returns
  /// the matrix and its inverse as nested vectors.
  std::pair<std::vector<std::vector<Q>>, std::vector<std::vector<Q>>> graded_invertible(int n, int even) {
    std::vector<std::vector<Q>> a(static_cast<std::size_t>(n), std::vector<Q>(static_cast<std::size_t>(n), Q(0)));
    auto inv = a;
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int step = 0; step < 3 * n; ++step) {
      const bool odd_block = even < n && (even == 0 || below(2) == 1);
      const int lo = odd_block ? even : 0, hi = odd_block ? n : even;
      if (hi - lo < 1) continue;
      const int r = lo + below(hi - lo), s = lo + below(hi - lo);
      const auto ur = static_cast<std::size_t>(r), us = static_cast<std::size_t>(s);
      if (r == s) {
        const Q f = nonzero();
        // column r of a scaled by f; row r of inv scaled by 1/f.
        for (auto& row : a) row[ur] *= f;
        for (auto& x : inv[ur]) x /= f;
      } else {
        const Q f = rational();
        // a <- a (I + f E_{sr}); inv <- (I - f E_{sr}) inv.
        for (auto& row : a) row[ur] += f * row[us];
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) inv[us][k] -= f * inv[ur][k];
      }
    }
    return {a, inv};
  }

 private:
  std::uint64_t s_;
};

}  // namespace oracle
