#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fixnet/bn.hpp"
#include "fixnet/sid.hpp"

namespace fixnet {

/// Certificate that phi_max(D) >= k: k distinct configurations plus, for
/// every non-negative arc (j,i), a configuration with bit j clear where
/// raising j must raise f_i, and symmetrically for non-positive arcs (zero
/// arcs carry both witnesses).
struct Certificate {
  std::vector<Configuration> fixed_points;
  std::map<std::pair<int, int>, Configuration> up_witness;    // non-negative arcs
  std::map<std::pair<int, int>, Configuration> down_witness;  // non-positive arcs
};

/// Accepts iff the induced false/true sets admit no pair y in T_i, x in F_i
/// with y <=_i x. Rejects immediately when k exceeds 2^n. Structural
/// defects (duplicate configurations, missing or ill-formed witnesses) throw
/// StructureError.
bool certificate_check(const SignedDigraph& d, std::uint64_t k, const Certificate& cert);

/// The network defined by f_i(x) = 1 iff some y in T_i has y <=_i x.
/// Requires an accepting certificate; its fixed points include the k
/// certified configurations and its interaction digraph is exactly d.
BooleanNetwork certificate_to_bn(const SignedDigraph& d, const Certificate& cert);

/// Deterministic exhaustive replacement for the nondeterministic choice:
/// fixed-point tuples ascend lexicographically, witnesses likewise, first
/// accepted certificate wins. Returns nothing iff phi_max(D) < k.
std::optional<Certificate> certificate_search(const SignedDigraph& d, std::uint64_t k,
                                              int n_cap = 6);

/// Harvests a certificate from an actual network: its first k fixed points
/// plus sign witnesses read off the local tables. Throws WitnessError if f
/// has fewer than k fixed points; requires sid_of(f) == d.
Certificate certificate_from_network(const SignedDigraph& d, const BooleanNetwork& f,
                                     std::uint64_t k);

/// Text format:
///   cert <n> <k>
///   fp <bits>                 (k lines)
///   wit + <j> <i> <bits>      (one per non-negative arc)
///   wit - <j> <i> <bits>      (one per non-positive arc)
Certificate parse_certificate(std::istream& in);
Certificate load_certificate(const std::string& path);
std::string certificate_to_string(const SignedDigraph& d, const Certificate& cert);

}  // namespace fixnet
