#include "qlsa/morphisms.hpp"

#include <sstream>

namespace qlsa {

namespace {

std::string join(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "dim=" << dim << " (" << dim_even << "|" << dim_odd << ") center=" << center << " derived=[" << join(derived_series)
      << "] lcs=[" << join(lower_central_series) << "] derived^center=" << derived_cap_center << " der=" << derivations;
  if (skew_derivations >= 0) out << " skew=" << skew_derivations;
  out << " solvable=" << (solvable ? "yes" : "no") << " nilpotent=" << (nilpotent ? "yes" : "no");
  return out.str();
}

nlohmann::json Fingerprint::to_json() const {
  nlohmann::json j{{"dim", dim},
                   {"dim_even", dim_even},
                   {"dim_odd", dim_odd},
                   {"center", center},
                   {"derived_series", derived_series},
                   {"lower_central_series", lower_central_series},
                   {"derived_cap_center", derived_cap_center},
                   {"derivations", derivations},
                   {"solvable", solvable},
                   {"nilpotent", nilpotent}};
  if (skew_derivations >= 0) j["skew_derivations"] = skew_derivations;
  return j;
}

}  // namespace qlsa
