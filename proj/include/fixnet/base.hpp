#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixnet {

/// Malformed input file or text format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed a hard size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition, bad argument, or inconsistent structure.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate, layout or network fails its structural contract.
class StructureError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A requested witness object does not exist.
class WitnessError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

namespace caps {

// Truth tables are stored explicitly; construction rejects higher in-degree.
inline constexpr int kDegCap = 16;
// 2^n configuration scans.
inline constexpr int kNaiveNCap = 24;
// Subset search for tau_plus.
inline constexpr int kTauNCap = 20;
// Simple-cycle enumeration.
inline constexpr std::uint64_t kCycleCap = 1'000'000;
// Per-vertex admissible-function enumeration (2^(2^d) candidates).
inline constexpr int kEnumDegCap = 4;
// Default bound on |F(D)| for whole-family enumeration; the CLI may lower it
// (env FIXNET_MAX_FAMILY) but never raise it above the hard maximum.
inline constexpr std::uint64_t kFamilyCap = 100'000'000;
inline constexpr std::uint64_t kFamilyHardMax = 1'000'000'000;
// Succinct expansion: number of address bits for clauses (m) and variables (n).
inline constexpr int kExpandCap = 16;
// Storage bound of Configuration.
inline constexpr int kConfigMaxBits = 256;

}  // namespace caps

}  // namespace fixnet
