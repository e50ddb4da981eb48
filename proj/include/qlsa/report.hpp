#pragma once

// Verification reports: an ordered list of named checks, each tied to the
// mathematical statement it tests.

#include "json.hpp"

#include <string>
#include <vector>

namespace qlsa {

enum class Status { pass, fail, info };

std::string to_string(Status s);

struct Check {
  std::string check;
  /// The mathematical statement being checked, e.g. "invariance B([X,Y],Z) = B(X,[Y,Z])".
  std::string reference;
  Status status = Status::pass;
  std::string residual;
  std::string witness;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string check, std::string reference, bool ok, std::string residual = {},
           std::string witness = {}) {
    checks_.push_back({std::move(check), std::move(reference), ok ? Status::pass : Status::fail,
                       std::move(residual), std::move(witness)});
  }
  void info(std::string check, std::string reference, std::string witness = {}) {
    checks_.push_back({std::move(check), std::move(reference), Status::info, {}, std::move(witness)});
  }

  /// Appends another report's checks, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& title() const { return title_; }

  /// Finds the first check with the given name, or nullptr.
  const Check* find(const std::string& name) const;

  std::string to_text() const;
  /// A JSON array of {check, paper_ref, status, residual, witness}.
  nlohmann::json to_json() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace qlsa
