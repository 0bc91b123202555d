#pragma once

#include "sugawara/pbw.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sugawara {

enum class Status { pass, fail, vacuous };

std::string to_string(Status s);

/// One checked identity. Fields that do not apply to a check stay empty.
struct Case {
  std::string generator;
  std::optional<int> s;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> m;
  Status status = Status::pass;
  /// Offending difference (lhs - rhs); only present on failure.
  std::optional<Element> difference;
  std::string note;
};

struct Report {
  std::string check;
  std::string pyramid;
  std::vector<Case> cases;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0;  // not serialized, output stays reproducible

  bool passed() const;
  std::size_t count(Status s) const;
  /// Records a comparison; stores the difference only when nonzero.
  Case& record(Case c, const Element& difference);
};

}  // namespace sugawara
