#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "fixnet/bn.hpp"
#include "fixnet/sid.hpp"

namespace fixnet {

/// All local truth tables admissible at vertex i of d: every in-neighbor is
/// an effective dependency and its observed monotonicity matches the arc
/// sign exactly. Tables are single words (in-degree <= kEnumDegCap <= 6),
/// listed in ascending numeric order; for a source the two constants 0, 1.
std::vector<std::uint64_t> enumerate_local_functions(const SignedDigraph& d, int i);

/// Test hooks: when `validate` is set, every network materialized by a
/// NetworkFamily is checked against the local-function contracts (sign
/// profile matches the digraph; if a vertex has at least one in-neighbor and
/// at most one zero in-neighbor, every input pattern agrees with some
/// non-zero in-neighbor up to its sign). Violations throw std::logic_error.
struct EnumerationHooks {
  static std::atomic<bool> validate;
  static std::atomic<std::uint64_t> validated;
};

/// The family F(D) of networks whose interaction digraph is exactly D,
/// presented as a random-access sequence: index order is lexicographic in
/// the per-vertex choice indices with the last vertex varying fastest.
/// Ranges [begin, end) are disjoint by construction, so callers may scan
/// ranges concurrently and reduce associatively.
class NetworkFamily {
 public:
  explicit NetworkFamily(const SignedDigraph& d, std::uint64_t family_cap = caps::kFamilyCap);

  const SignedDigraph& digraph() const { return *d_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::uint64_t>& choices(int i) const {
    return per_vertex_[static_cast<size_t>(i)];
  }

  BooleanNetwork at(std::uint64_t index) const;

  /// Decode into an existing network (avoids re-allocating input lists).
  void materialize(std::uint64_t index, BooleanNetwork& f) const;

  /// Calls visit(index, f) for every index in [begin, end), reusing one
  /// network object.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(std::uint64_t, const BooleanNetwork&)>& visit) const;

 private:
  void check_network(const BooleanNetwork& f) const;

  const SignedDigraph* d_;
  std::vector<std::vector<std::uint64_t>> per_vertex_;  // index 0 unused
  std::vector<std::vector<int>> inputs_;                // sorted in-neighborhoods
  std::uint64_t size_ = 1;
};

}  // namespace fixnet
