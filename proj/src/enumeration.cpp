#include "fixnet/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fixnet {

std::atomic<bool> EnumerationHooks::validate{false};
std::atomic<std::uint64_t> EnumerationHooks::validated{0};

namespace {

// Admissible tables depend only on the sign vector over the sorted
// in-neighborhood, so results are cached per sign vector.
using SignKey = std::vector<Sign>;

std::vector<std::uint64_t> filter_tables(const SignKey& signs) {
  int d = static_cast<int>(signs.size());
  std::uint32_t bits = 1u << d;
  std::uint64_t full = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
  // Per input position, mask of table positions whose input bit is clear.
  std::vector<std::uint64_t> m0(static_cast<size_t>(d), 0);
  for (int t = 0; t < d; ++t)
    for (std::uint32_t b = 0; b < bits; ++b)
      if (!(b & (1u << t))) m0[static_cast<size_t>(t)] |= 1ULL << b;
  std::vector<std::uint64_t> out;
  for (std::uint64_t table = 0; table <= full; ++table) {
    bool ok = true;
    for (int t = 0; t < d && ok; ++t) {
      std::uint64_t lo = table & m0[static_cast<size_t>(t)];
      std::uint64_t hi = (table >> (1u << t)) & m0[static_cast<size_t>(t)];
      bool inc = (~lo & hi) != 0;
      bool dec = (lo & ~hi) != 0;
      switch (signs[static_cast<size_t>(t)]) {
        case Sign::positive: ok = inc && !dec; break;
        case Sign::negative: ok = dec && !inc; break;
        case Sign::zero: ok = inc && dec; break;
      }
    }
    if (ok) out.push_back(table);
    if (table == full) break;  // avoid wrap at 64-bit full mask
  }
  return out;
}

const std::vector<std::uint64_t>& cached_tables(const SignKey& signs) {
  static std::map<SignKey, std::vector<std::uint64_t>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(signs);
  if (it == cache.end()) it = cache.emplace(signs, filter_tables(signs)).first;
  return it->second;
}

}  // namespace

std::vector<std::uint64_t> enumerate_local_functions(const SignedDigraph& d, int i) {
  auto arcs = d.in_arcs(i);
  if (static_cast<int>(arcs.size()) > caps::kEnumDegCap)
    throw CapError("enumerate_local_functions: in-degree " + std::to_string(arcs.size()) +
                   " exceeds cap " + std::to_string(caps::kEnumDegCap));
  SignKey signs;
  for (const auto& [j, s] : arcs) signs.push_back(s);
  return cached_tables(signs);
}

NetworkFamily::NetworkFamily(const SignedDigraph& d, std::uint64_t family_cap) : d_(&d) {
  int n = d.vertex_count();
  per_vertex_.resize(static_cast<size_t>(n) + 1);
  inputs_.resize(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    per_vertex_[static_cast<size_t>(i)] = enumerate_local_functions(d, i);
    inputs_[static_cast<size_t>(i)] = d.in_neighbors(i);
    std::uint64_t c = per_vertex_[static_cast<size_t>(i)].size();
    if (c == 0) {
      size_ = 0;
      return;  // not a realizable digraph: the family is empty
    }
    if (size_ > family_cap / c)
      throw CapError("family size exceeds cap " + std::to_string(family_cap));
    size_ *= c;
  }
}

BooleanNetwork NetworkFamily::at(std::uint64_t index) const {
  BooleanNetwork f(d_->vertex_count());
  materialize(index, f);
  return f;
}

void NetworkFamily::materialize(std::uint64_t index, BooleanNetwork& f) const {
  if (index >= size_) throw InvalidInput("family index out of range");
  int n = d_->vertex_count();
  if (f.vertex_count() != n) f = BooleanNetwork(n);
  for (int i = n; i >= 1; --i) {
    const auto& options = per_vertex_[static_cast<size_t>(i)];
    std::uint64_t c = index % options.size();
    index /= options.size();
    f.set_local(i, LocalFunction::from_word(inputs_[static_cast<size_t>(i)], options[c]));
  }
  if (EnumerationHooks::validate.load(std::memory_order_relaxed)) check_network(f);
}

void NetworkFamily::for_each(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, const BooleanNetwork&)>& visit) const {
  if (begin >= end) return;
  if (end > size_) throw InvalidInput("family range out of bounds");
  int n = d_->vertex_count();
  BooleanNetwork f(n);
  std::vector<std::uint64_t> digit(static_cast<size_t>(n) + 1, 0);
  std::uint64_t rest = begin;
  for (int i = n; i >= 1; --i) {
    digit[static_cast<size_t>(i)] = rest % per_vertex_[static_cast<size_t>(i)].size();
    rest /= per_vertex_[static_cast<size_t>(i)].size();
  }
  for (int i = 1; i <= n; ++i)
    f.set_local(i, LocalFunction::from_word(inputs_[static_cast<size_t>(i)],
                                            per_vertex_[static_cast<size_t>(i)]
                                                       [digit[static_cast<size_t>(i)]]));
  bool hooked = EnumerationHooks::validate.load(std::memory_order_relaxed);
  for (std::uint64_t idx = begin;;) {
    if (hooked) check_network(f);
    visit(idx, f);
    if (++idx == end) break;
    // Odometer step: the last vertex varies fastest.
    for (int i = n;; --i) {
      const auto& options = per_vertex_[static_cast<size_t>(i)];
      if (++digit[static_cast<size_t>(i)] < options.size()) {
        f.set_local_word(i, options[digit[static_cast<size_t>(i)]]);
        break;
      }
      digit[static_cast<size_t>(i)] = 0;
      f.set_local_word(i, options[0]);
    }
  }
}

void NetworkFamily::check_network(const BooleanNetwork& f) const {
  const SignedDigraph& d = *d_;
  for (int i = 1; i <= d.vertex_count(); ++i) {
    const LocalFunction& g = f.local(i);
    auto arcs = d.in_arcs(i);
    if (g.arity() != static_cast<int>(arcs.size()))
      throw std::logic_error("enumerated network: arity mismatch");
    int zeros = 0;
    for (int t = 0; t < g.arity(); ++t) {
      auto p = g.input_profile(t);
      Sign want = arcs[static_cast<size_t>(t)].second;
      Sign got = !p.effective ? Sign::zero
                 : p.increases ? (p.decreases ? Sign::zero : Sign::positive)
                               : Sign::negative;
      if (!p.effective || got != want)
        throw std::logic_error("enumerated network: sign profile mismatch at vertex " +
                               std::to_string(i));
      if (want == Sign::zero) ++zeros;
    }
    if (g.arity() >= 1 && zeros <= 1) {
      // Every value must be delivered by some non-zero in-neighbor.
      for (std::uint32_t b = 0; b < (1u << g.arity()); ++b) {
        bool value = g.bit(b);
        bool witnessed = false;
        for (int t = 0; t < g.arity() && !witnessed; ++t) {
          Sign s = arcs[static_cast<size_t>(t)].second;
          if (s == Sign::zero) continue;
          bool input = (b >> t) & 1u;
          witnessed = (input != sign_flip(s)) == value;
        }
        if (!witnessed)
          throw std::logic_error("enumerated network: no delivering in-neighbor at vertex " +
                                 std::to_string(i));
      }
    }
  }
  EnumerationHooks::validated.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace fixnet
