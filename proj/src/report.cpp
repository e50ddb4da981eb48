#include "qlsa/report.hpp"

#include <algorithm>
#include <sstream>

namespace qlsa {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.check = prefix + c.check;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; }));
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.check == name) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (!title_.empty()) out << "== " << title_ << "\n";
  for (const auto& c : checks_) {
    out << "[" << to_string(c.status) << "] " << c.check;
    if (!c.witness.empty()) out << "  witness: " << c.witness;
    if (!c.residual.empty()) out << "  residual: " << c.residual;
    if (c.status == Status::fail && !c.reference.empty()) out << "  (" << c.reference << ")";
    out << "\n";
  }
  out << (passed() ? "PASS" : "FAIL") << " (" << checks_.size() << " checks, " << failures() << " failed)\n";
  return out.str();
}

nlohmann::json Report::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    arr.push_back({{"check", c.check},
                   {"paper_ref", c.reference},
                   {"status", to_string(c.status)},
                   {"residual", c.residual},
                   {"witness", c.witness}});
  }
  return arr;
}

}  // namespace qlsa
