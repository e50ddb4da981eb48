#pragma once

// Named quadratic and odd-quadratic Lie superalgebras of low dimension, with
// their parameters, admissibility rules, frozen fingerprints and
// decomposability flags. All entries use exact rational structure constants.

#include "qlsa/morphisms.hpp"
#include "qlsa/superalgebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlsa::catalog {

using Params = std::map<std::string, Rational>;

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamSpec {
  std::string name;
  /// Human-readable admissibility rule, e.g. "|mu| <= 1, mu != -1".
  std::string rule;
  std::function<bool(const Rational&)> admissible;
  /// Explicit sample grid; when empty the default grid is filtered by `admissible`.
  std::vector<Rational> samples;
};

enum class Decomposability { indecomposable, decomposable, unstated };

std::string to_string(Decomposability d);

struct CatalogEntry {
  std::string id;
  /// The statement the entry comes from, by name.
  std::string source;
  std::vector<ParamSpec> params;
  std::function<QuadraticAlgebra<Rational>(const Params&)> builder;
  std::function<Decomposability(const Params&)> decomposability;
  std::vector<std::string> notes;

  /// Default parameter samples: every combination of per-parameter grids.
  std::vector<Params> samples() const;
  /// Throws CatalogError for unknown or inadmissible parameters.
  void check_params(const Params& p) const;
};

/// {-2, -1, -1/2, 0, 1/2, 1, 2}.
const std::vector<Rational>& default_grid();

const std::vector<CatalogEntry>& list();
const CatalogEntry& entry(const std::string& id);

QuadraticAlgebra<Rational> build(const std::string& id, const Params& params = {});

/// "g6_3(mu=1/2)" style key for a sample.
std::string sample_key(const std::string& id, const Params& params);

/// Frozen fingerprint for a default sample, if one is recorded.
std::optional<std::string> expected_fingerprint(const std::string& key);

/// Axioms, center identities, frozen fingerprints and decomposability flags
/// for one sample.
Report verify_entry(const std::string& id, const Params& params = {});

/// verify_entry over every entry (sorted by id) and its default samples, or
/// only over `only` when given.
Report verify_all(const std::optional<std::string>& only = std::nullopt);

/// C = ad(Y0) restricted to the odd part in the canonical basis X1, X2, Y1, Y2,
/// for the g^s_{6,4..7} entries ("gs6_4" .. "gs6_7").
Matrix<Rational> sp4_representative(const std::string& id, const Rational& lambda = Rational(1));

/// osp(1,2) on the complex backend in a basis X1, X2, X3 of o(3) with
/// B(Xi,Xj) = delta_ij and [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2, plus the
/// map (column j = image of basis vector j) from it to the rational split basis.
struct OrthonormalOsp {
  QuadraticAlgebra<Complex> algebra;
  Matrix<Complex> to_split;
};
OrthonormalOsp osp12_orthonormal();

}  // namespace qlsa::catalog
