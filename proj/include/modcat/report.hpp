#pragma once

#include <string>
#include <vector>

namespace modcat {

/// Outcome of one named identity or comparison.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered list of checks; passes iff every item passes.
struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool passed, std::string detail = {}) {
    items.push_back({std::move(name), passed, std::move(detail)});
  }
  bool passed() const {
    for (const auto& item : items) {
      if (!item.passed) return false;
    }
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& item : items) {
      if (!item.passed) return &item;
    }
    return nullptr;
  }
  const CheckItem* find(const std::string& name) const {
    for (const auto& item : items) {
      if (item.name == name) return &item;
    }
    return nullptr;
  }
  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& item : other.items) items.push_back({prefix + item.name, item.passed, item.detail});
  }
};

}  // namespace modcat
