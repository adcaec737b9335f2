#ifndef CSSMAX_TYPES_HPP
#define CSSMAX_TYPES_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cssmax {

/// Absolute tolerance for all floating-point comparisons in checkers and
/// tie-breaking. Shipped instances use small rationals, so 1e-9 separates
/// true ties from rounding noise.
inline constexpr double kTol = 1e-9;

/// Default cap on the number of enumerated realizations (|Y|^|X|).
inline constexpr std::uint64_t kRealizationCap = std::uint64_t{1} << 20;

/// Largest item count representable as a subset mask.
inline constexpr int kMaxMaskItems = 25;

/// Item subsets as bitmasks over dense item indices.
using Mask = std::uint32_t;

inline constexpr Mask mask_bit(int i) { return Mask{1} << i; }
inline constexpr bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline constexpr Mask mask_full(int n) { return (Mask{1} << n) - 1u; }
inline int mask_count(Mask m) { return std::popcount(m); }

// Configuration problems: malformed instance files, invalid model
// parameters, unknown kinds.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance too large for an exact (exhaustive) operation.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (item already selected,
// insufficient observations, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Observations have zero prior mass under the hypothesis class.
class EvidenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cost model violated its structural contract at runtime (e.g. a
// non-positive increment inside a greedy ratio).
class CostViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cssmax

#endif  // CSSMAX_TYPES_HPP
