#pragma once

#include <stdexcept>
#include <string>

namespace latzeta {

// Thrown when an enumeration would exceed the configured basis budget.
// Deliberately distinct from std::invalid_argument so callers (and the CLI)
// can map budget exhaustion to its own exit code.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Knobs shared by the enumeration-backed counting operations.
struct EnumOptions {
  std::int64_t budget = 100'000'000;  // max number of HNF bases to visit
  int threads = 1;                    // 0 = hardware concurrency
};

}  // namespace latzeta
