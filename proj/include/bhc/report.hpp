#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhc/linalg.hpp"

namespace bhc {

struct CheckEntry {
  std::string name;
  bool passed = false;
  bool required = true;  // informational entries never affect the verdict
  std::string witness;   // label of a basis vector where the two sides differ
  std::string detail;
  std::optional<LinearMap> matrix;
};

class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  const std::string& title() const noexcept { return title_; }
  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const noexcept { return notes_; }

  CheckEntry& add(CheckEntry e);
  // Exact equality of two maps; on failure records the first differing column.
  CheckEntry& expect_equal(const std::string& name, const LinearMap& lhs, const LinearMap& rhs, bool required = true);
  CheckEntry& expect(const std::string& name, bool ok, std::string detail = {}, bool required = true);
  void note(std::string key, std::string value);
  void merge(const CheckReport& other, const std::string& prefix = {});

  bool passed() const noexcept;
  const CheckEntry* find(const std::string& name) const noexcept;
  const CheckEntry* first_failure() const noexcept;
  std::size_t count_passed() const noexcept;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<CheckEntry> entries_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace bhc
