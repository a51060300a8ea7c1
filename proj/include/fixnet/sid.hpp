#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fixnet/base.hpp"
#include "fixnet/config.hpp"

namespace fixnet {

/// Arc sign. The flipped flag (sigma-tilde) is 1 exactly for negative arcs.
enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline bool sign_flip(Sign s) { return s == Sign::negative; }
inline char sign_char(Sign s) {
  return s == Sign::negative ? '-' : (s == Sign::zero ? '0' : '+');
}
Sign sign_from_char(char c);

/// Product of signs: zero absorbs, otherwise parity of negatives.
inline Sign sign_product(Sign a, Sign b) {
  if (a == Sign::zero || b == Sign::zero) return Sign::zero;
  return (a == b) ? Sign::positive : Sign::negative;
}

struct Arc {
  int from = 0;
  int to = 0;
  Sign sign = Sign::positive;
};

/// A plain (unsigned) digraph, used by the even-cycle transformation and the
/// strongly-connected-component machinery.
struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;  // 1-based; out[0] unused

  explicit Digraph(int n_ = 0) : n(n_), out(static_cast<size_t>(n_) + 1) {}
  void add_arc(int from, int to);
};

/// Signed digraph over dense vertex ids 1..n, at most one arc per ordered
/// pair. Vertices may carry optional role names (used by gadget builders).
class SignedDigraph {
 public:
  SignedDigraph() = default;
  explicit SignedDigraph(int n);

  int vertex_count() const { return n_; }
  int arc_count() const { return arc_count_; }

  /// Throws InvalidInput on a duplicate ordered pair or out-of-range vertex.
  void add_arc(int from, int to, Sign s);
  void remove_arc(int from, int to);

  bool has_arc(int from, int to) const;
  Sign sign(int from, int to) const;  // throws if absent

  /// In-neighbors of i, sorted ascending by source id.
  std::span<const std::pair<int, Sign>> in_arcs(int i) const {
    check_vertex(i);
    return ins_[static_cast<size_t>(i)];
  }
  std::vector<int> in_neighbors(int i) const;
  std::vector<int> in_neighbors(int i, Sign s) const;
  int in_degree(int i) const { return static_cast<int>(in_arcs(i).size()); }
  int in_degree(int i, Sign s) const;
  bool is_source(int i) const { return in_degree(i) == 0; }

  std::span<const int> out_neighbors(int i) const {
    check_vertex(i);
    return outs_[static_cast<size_t>(i)];
  }

  /// Maximum in-degree Delta(D).
  int max_in_degree() const;

  /// All arcs, grouped by target ascending, then source ascending.
  std::vector<Arc> arcs() const;

  bool is_nice() const;           // no zero arc
  bool is_full_positive() const;

  /// Induced subgraph on `keep` (ascending ids are renumbered 1..k).
  /// Returns the subgraph plus the original id for each new vertex.
  std::pair<SignedDigraph, std::vector<int>> induced(std::span<const int> keep) const;

  /// Deletes vertices in `drop`, renumbering the rest (ascending order kept).
  std::pair<SignedDigraph, std::vector<int>> without(std::span<const int> drop) const;

  Digraph underlying() const;

  // Optional vertex names (empty if unnamed).
  bool has_names() const { return !names_.empty(); }
  const std::string& name(int i) const;
  void set_name(int i, std::string name);

 private:
  void check_vertex(int i) const;

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::vector<std::pair<int, Sign>>> ins_;  // per target, sorted
  std::vector<std::vector<int>> outs_;                  // per source, sorted
  std::vector<std::string> names_;
};

struct SidValidity {
  bool valid = true;
  std::vector<int> offenders;  // vertices with |N0(i)| == 1 and |N(i)| < 3
};

/// A signed digraph is realizable as the interaction digraph of some Boolean
/// network iff every vertex has |N0(i)| != 1 or |N(i)| >= 3.
SidValidity validate_sid(const SignedDigraph& d);

/// Text format:
///   sid <n>
///   <j> <i> <s>     one arc per line, s in {+,-,0}
/// '#' starts a comment; blank lines are ignored; duplicate pairs are errors.
SignedDigraph parse_sid(std::istream& in);
SignedDigraph parse_sid_string(const std::string& text);
SignedDigraph load_sid(const std::string& path);
std::string sid_to_string(const SignedDigraph& d);
void save_sid(const SignedDigraph& d, const std::string& path);

}  // namespace fixnet
