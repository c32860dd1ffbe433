#include "bhc/report.hpp"

#include <sstream>

namespace bhc {

CheckEntry& CheckReport::add(CheckEntry e) {
  entries_.push_back(std::move(e));
  return entries_.back();
}

CheckEntry& CheckReport::expect_equal(const std::string& name, const LinearMap& lhs, const LinearMap& rhs,
                                      bool required) {
  CheckEntry e;
  e.name = name;
  e.required = required;
  if (lhs.domain().dim() != rhs.domain().dim() || lhs.codomain().dim() != rhs.codomain().dim()) {
    e.passed = false;
    e.detail = "shapes differ: " + lhs.domain().describe() + "→" + lhs.codomain().describe() + " vs " +
               rhs.domain().describe() + "→" + rhs.codomain().describe();
    return add(std::move(e));
  }
  auto diff = first_difference(lhs, rhs);
  e.passed = !diff.has_value();
  if (diff) {
    e.witness = lhs.domain().label(*diff);
    e.detail = "lhs(" + e.witness + ") = " + format_vector(lhs.codomain(), lhs.column(*diff)) + ", rhs(" + e.witness +
               ") = " + format_vector(rhs.codomain(), rhs.column(*diff));
  }
  return add(std::move(e));
}

CheckEntry& CheckReport::expect(const std::string& name, bool ok, std::string detail, bool required) {
  CheckEntry e;
  e.name = name;
  e.passed = ok;
  e.required = required;
  e.detail = std::move(detail);
  return add(std::move(e));
}

void CheckReport::note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    if (!prefix.empty()) e.name = prefix + e.name;
    entries_.push_back(std::move(e));
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool CheckReport::passed() const noexcept { return first_failure() == nullptr; }

const CheckEntry* CheckReport::find(const std::string& name) const noexcept {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CheckEntry* CheckReport::first_failure() const noexcept {
  for (const auto& e : entries_)
    if (e.required && !e.passed) return &e;
  return nullptr;
}

std::size_t CheckReport::count_passed() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.passed ? 1 : 0;
  return n;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << title_ << "\n";
  for (const auto& e : entries_) {
    os << "  [" << (e.passed ? "pass" : (e.required ? "FAIL" : "no")) << "] " << e.name;
    if (!e.required) os << " (informational)";
    if (!e.witness.empty()) os << "  witness " << e.witness;
    os << "\n";
    if (!e.detail.empty()) os << "         " << e.detail << "\n";
  }
  for (const auto& [k, v] : notes_) os << "  note: " << k << ": " << v << "\n";
  os << "  verdict: " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace bhc
