#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fixnet/config.hpp"
#include "fixnet/sid.hpp"

namespace fixnet {

/// One local truth table. Inputs are vertex ids sorted ascending; table bit b
/// is the value at the input pattern whose t-th bit (LSB first) is the state
/// of inputs[t]. Bit 0 is therefore the all-zero input.
class LocalFunction {
 public:
  LocalFunction() : table_(1, 0) {}
  LocalFunction(std::vector<int> inputs, std::vector<std::uint64_t> table);

  /// Convenience for arity <= 6 (table fits one word).
  static LocalFunction from_word(std::vector<int> inputs, std::uint64_t word);
  static LocalFunction constant(bool value) {
    return LocalFunction({}, {value ? 1ULL : 0ULL});
  }

  int arity() const { return static_cast<int>(inputs_.size()); }
  std::span<const int> inputs() const { return inputs_; }
  const std::vector<std::uint64_t>& table() const { return table_; }

  bool bit(std::uint32_t index) const {
    return (table_[index >> 6] >> (index & 63)) & 1u;
  }
  void set_bit(std::uint32_t index, bool b) {
    if (b)
      table_[index >> 6] |= 1ULL << (index & 63);
    else
      table_[index >> 6] &= ~(1ULL << (index & 63));
  }

  bool eval(const Configuration& x) const {
    std::uint32_t idx = 0;
    for (int t = 0; t < arity(); ++t)
      idx |= static_cast<std::uint32_t>(x.get(inputs_[static_cast<size_t>(t)])) << t;
    return bit(idx);
  }

  std::uint64_t word() const;       // arity <= 6 only
  void set_word(std::uint64_t w);   // arity <= 6 only; keeps inputs

  /// Monotonicity profile of input position t over the stored table:
  /// positive / negative / zero if effective, nullopt-like via `effective`.
  struct InputProfile {
    bool effective = false;
    bool increases = false;  // some pattern where raising the input raises f
    bool decreases = false;
  };
  InputProfile input_profile(int t) const;

 private:
  std::vector<int> inputs_;             // sorted ascending
  std::vector<std::uint64_t> table_;    // ceil(2^arity / 64) words
};

/// A Boolean network: one local function per vertex 1..n. Evaluation of f_i
/// reads only the listed inputs of vertex i.
class BooleanNetwork {
 public:
  BooleanNetwork() = default;
  explicit BooleanNetwork(int n);

  int vertex_count() const { return n_; }

  void set_local(int i, LocalFunction f);
  /// Replaces just the table of vertex i (arity <= 6), keeping its inputs.
  void set_local_word(int i, std::uint64_t word);
  const LocalFunction& local(int i) const;

  bool eval_vertex(int i, const Configuration& x) const { return local(i).eval(x); }
  Configuration apply(const Configuration& x) const;

  bool is_fixed_point(const Configuration& x) const { return apply(x) == x; }

 private:
  int n_ = 0;
  std::vector<LocalFunction> fns_;  // index 0 unused
};

/// The signed interaction digraph of f: an arc (j,i) for every effective
/// dependency, signed by monotonicity. Ineffective listed inputs produce no
/// arc.
SignedDigraph sid_of(const BooleanNetwork& f);

/// Exact fixed-point set by scanning all 2^n configurations (n <= kNaiveNCap),
/// in ascending configuration order.
std::vector<Configuration> fixed_points_naive(const BooleanNetwork& f);

/// The per-vertex partial order on configurations: x <=_i y iff x <= y on
/// positive in-neighbors of i, y <= x on negative ones, and x = y on zero
/// ones. Coordinates outside N(i) are unconstrained.
bool leq_config(const SignedDigraph& d, int i, const Configuration& x, const Configuration& y);

enum class LocalKind { const0, const1, copy, and_gate, or_gate, other };

std::string to_string(LocalKind k);

/// Classifies f_i: the AND/OR functions are the sign-adjusted conjunction/
/// disjunction over the declared effective in-neighborhood; in-degree one is
/// "copy" (AND = OR); sources are constants.
LocalKind classify_local(const BooleanNetwork& f, int i);

/// Sign-adjusted conjunction over `d`'s in-neighborhood of i (inputs with a
/// negative arc are flipped). `conj` false gives the disjunction.
LocalFunction make_and_or(const SignedDigraph& d, int i, bool conj);

/// Text format:
///   bn <n>
///   fn <i> <j1> ... <jd> <hex table>    2^d bits, LSB = all-zero input
BooleanNetwork parse_bn(std::istream& in);
BooleanNetwork parse_bn_string(const std::string& text);
BooleanNetwork load_bn(const std::string& path);
std::string bn_to_string(const BooleanNetwork& f);
void save_bn(const BooleanNetwork& f, const std::string& path);

}  // namespace fixnet
