#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fixnet/sid.hpp"

namespace fixnet {

/// A simple directed cycle in canonical rotation: the minimal vertex leads.
struct CycleRecord {
  std::vector<int> vertices;
  Sign sign = Sign::positive;
  int length() const { return static_cast<int>(vertices.size()); }
};

struct CycleCounts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
  std::uint64_t total() const { return positive + negative + zero; }
};

/// Johnson-style enumeration of all simple cycles, ascending root vertex,
/// each cycle exactly once in canonical rotation. The callback may return
/// false to stop early. Throws CapError past `cap` emitted cycles.
void for_each_cycle(const Digraph& g,
                    const std::function<bool(const std::vector<int>&)>& visit,
                    std::uint64_t cap = caps::kCycleCap);

/// All simple cycles of a signed digraph with their signs, plus the counts
/// c+, c-, c0. Deterministic order.
std::pair<std::vector<CycleRecord>, CycleCounts> enumerate_signed_cycles(
    const SignedDigraph& d, std::uint64_t cap = caps::kCycleCap);

/// True iff some simple cycle has positive sign. Requires a nice digraph
/// (no zero arcs); early exit.
bool has_positive_cycle(const SignedDigraph& d, std::uint64_t cap = caps::kCycleCap);

/// True iff every simple cycle has negative sign (vacuously true if acyclic).
bool has_only_negative_cycles(const SignedDigraph& d, std::uint64_t cap = caps::kCycleCap);

bool is_acyclic(const Digraph& g);

/// Topological order of g (throws InvalidInput on a cycle).
std::vector<int> topological_order(const Digraph& g);

/// Minimum size of a positive feedback vertex set: a set I such that D \ I
/// has only negative cycles or is acyclic. Subset search in increasing size;
/// n <= kTauNCap.
int tau_plus(const SignedDigraph& d);

/// Replaces each positive arc by a length-two path through a fresh vertex
/// and each negative arc by a direct arc. The input must be nice. The result
/// has an even-length simple cycle iff the input has a positive cycle.
Digraph even_cycle_transform(const SignedDigraph& d);

bool has_even_cycle(const Digraph& g, std::uint64_t cap = caps::kCycleCap);

/// Strongly connected components (Tarjan). Returns one sorted vertex list
/// per component, components listed by their minimal vertex.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

struct SccInfo {
  std::vector<int> vertices;  // sorted
  bool trivial = false;       // single vertex, no arc (not even a loop)
  bool initial = false;       // no arc entering from outside
};

std::vector<SccInfo> scc_analysis(const SignedDigraph& d);

}  // namespace fixnet
