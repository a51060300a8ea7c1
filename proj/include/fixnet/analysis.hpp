#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixnet/bn.hpp"
#include "fixnet/enumeration.hpp"
#include "fixnet/sid.hpp"

namespace fixnet {

struct AnalysisReport {
  std::uint64_t phi_max = 0;
  std::uint64_t phi_min = 0;
  std::uint64_t family_size = 0;
  int delta = 0;
  std::optional<int> tau_plus;
  std::optional<BooleanNetwork> max_witness;
  std::optional<BooleanNetwork> min_witness;
  double seconds = 0.0;

  /// Flat JSON object with keys phi_max, phi_min, family_size, delta,
  /// tau_plus, witnesses. Deterministic (no timing).
  std::string to_json() const;
};

/// Exact phi(f) for a feedback vertex set I: iterate the 2^|I| assignments
/// to I, evaluate the remaining vertices in topological order of the
/// dependency graph minus I, and keep assignments reproduced by f.
/// Requires that graph to be acyclic.
std::uint64_t count_fixed_points_fvs(const BooleanNetwork& f, const std::vector<int>& fvs);

/// Greedy feedback vertex set of d: repeatedly take the vertex on the most
/// uncovered simple cycles (smallest id on ties) until none remain.
std::vector<int> choose_fvs(const SignedDigraph& d);

struct PhiOptions {
  std::vector<int> fvs_hint;       // callers that know a small FVS pass it here
  bool compute_tau = false;        // also report tau_plus (subset search)
  std::uint64_t family_cap = caps::kFamilyCap;
};

/// Exact extremes of phi over F(D) by full enumeration, with one witnessing
/// network for each extreme (smallest enumeration index on ties).
AnalysisReport phi_extremes(const SignedDigraph& d, const PhiOptions& options = {});

/// phi for max-in-degree <= 1: zero if any negative cycle exists, otherwise
/// 2^(number of positive cycles). Equals both extremes.
std::uint64_t phi_delta1(const SignedDigraph& d);

/// The nice digraph obtained by deleting every arc into a vertex with two or
/// more zero in-neighbors and the arc from a unique zero in-neighbor. Keeps
/// the existence of a fixable configuration unchanged.
SignedDigraph nicefy(const SignedDigraph& d);

/// A network in F(D) fixing y, built per the constructive cases (AND/OR on
/// the nicefied digraph, then the zero-arc repairs). Throws WitnessError if
/// no network in F(nicefy(D)) fixes y.
BooleanNetwork lift_fixed_point(const SignedDigraph& d, const Configuration& y);

struct MaxGe1Result {
  bool yes = false;
  std::optional<BooleanNetwork> witness;  // a network with a fixed point
};

/// Polynomial-path decision of "some network over D has a fixed point":
/// nicefy, then check that every non-trivial initial strongly connected
/// component has a positive cycle. On yes, synthesizes a witness network.
MaxGe1Result decide_max_ge1(const SignedDigraph& d, bool want_witness = true);

}  // namespace fixnet
