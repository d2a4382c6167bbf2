#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "modcat/golden/catalog.hpp"

namespace modcat::golden {

enum class Status { pass, warn, fail };

std::string_view status_name(Status status);

struct AuditLine {
  std::string locus;
  std::string check;
  Status status = Status::pass;
  std::string detail;
};

struct Audit {
  std::vector<AuditLine> lines;
  std::vector<std::string> notes;

  std::size_t count(Status status) const;
  /// No FAIL lines (WARN allowed).
  bool passed() const { return count(Status::fail) == 0; }
};

/// Runs every comparison between the golden tables in `dir` and the values
/// computed from first principles. Unreadable files and failed loads are
/// reported as FAIL lines; nothing throws.
Audit verify_paper(const std::filesystem::path& dir = default_data_dir());

}  // namespace modcat::golden
