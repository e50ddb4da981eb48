// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit code 0 when the set of failing criteria equals the --known-failure set.

#include "qlsa/claims.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>

namespace {

struct Criterion {
  int number;
  const char* claim;
  const char* summary;
  double max_seconds;  // 0 means no limit
};

const Criterion kCriteria[] = {
    {1, "catalog-axioms", "catalog soundness", 10.0},
    {2, "center-identities", "Z(g) = [g,g]^perp and dim Z + dim [g,g] = dim g", 0},
    {3, "derivations", "skew derivation dimensions", 0},
    {4, "inner-extensions", "inner double extensions decompose", 0},
    {5, "t-star", "T*-extension suite", 0},
    {6, "t-star-rescaling", "T*-extension rescaling isomorphism", 0},
    {7, "two-step", "two-step double extensions of g5", 0},
    {8, "super-double", "super double extensions", 0},
    {9, "odd-t-star", "T*s-extensions", 0},
    {10, "cube-roots", "irrational i-isomorphisms", 0},
    {11, "sp2", "sp(2) lemma samples", 1.0},
    {12, "odd-six", "six-dimensional odd quadratic table", 0},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> known;
  std::string data_dir = QLSA_DATA_DIR;
  bool verbose = false;
  app.add_option("--known-failure", known, "criterion expected to fail (repeatable)");
  app.add_option("--data-dir", data_dir, "directory of the shipped algebra files");
  app.add_flag("-v,--verbose", verbose, "print failing checks");
  CLI11_PARSE(app, argc, argv);

  const auto claims = qlsa::claims::all_claims(data_dir);
  std::set<int> failing;
  for (const auto& c : kCriteria) {
    const auto it = std::find_if(claims.begin(), claims.end(), [&](const auto& k) { return k.id == c.claim; });
    if (it == claims.end()) {
      std::cout << "criterion " << c.number << ": FAIL " << c.summary << " (no such claim)\n";
      failing.insert(c.number);
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto report = it->run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.max_seconds == 0 || secs < c.max_seconds;
    const bool ok = report.passed() && in_time;
    if (!ok) failing.insert(c.number);
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS " : "FAIL ") << c.summary << " ["
              << report.checks().size() << " checks, " << report.failures() << " failed, " << secs << " s";
    if (!in_time) std::cout << ", limit " << c.max_seconds << " s";
    std::cout << "]\n";
    if (!ok && verbose)
      for (const auto& k : report.checks())
        if (k.status == qlsa::Status::fail) std::cout << "    " << k.check << "  " << k.witness << "\n";
  }
  const std::set<int> expected(known.begin(), known.end());
  std::cout << failing.size() << " of " << std::size(kCriteria) << " criteria failing\n";
  return failing == expected ? 0 : 1;
}
