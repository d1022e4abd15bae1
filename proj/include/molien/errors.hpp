#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace molien {

/// Malformed input: bad parameters, a subgroup that is not S_n-stable, etc.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed (rank, limit, oracle).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration caps. Every N^m or matrix enumeration checks against these.
struct Limits {
  std::uint64_t enumeration_cap = 10'000'000;
  std::uint64_t oracle_cap = 1'000'000;
};

}  // namespace molien
