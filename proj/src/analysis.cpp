#include "fixnet/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "fixnet/cycles.hpp"
#include "json.hpp"

namespace fixnet {

namespace {

// Shared machinery for structured counting: assignments to a feedback set I
// are completed by evaluating the remaining vertices in topological order.
struct FvsCounter {
  std::vector<int> fvs;   // sorted
  std::vector<int> topo;  // evaluation order of the non-fvs vertices

  FvsCounter(const SignedDigraph& d, std::vector<int> fvs_in) : fvs(std::move(fvs_in)) {
    std::sort(fvs.begin(), fvs.end());
    fvs.erase(std::unique(fvs.begin(), fvs.end()), fvs.end());
    init(arcs_of(d), d.vertex_count());
  }

  FvsCounter(const BooleanNetwork& f, std::vector<int> fvs_in) : fvs(std::move(fvs_in)) {
    std::sort(fvs.begin(), fvs.end());
    fvs.erase(std::unique(fvs.begin(), fvs.end()), fvs.end());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= f.vertex_count(); ++i)
      for (int j : f.local(i).inputs()) arcs.push_back({j, i});
    init(arcs, f.vertex_count());
  }

  static std::vector<std::pair<int, int>> arcs_of(const SignedDigraph& d) {
    std::vector<std::pair<int, int>> arcs;
    for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
    return arcs;
  }

  void init(const std::vector<std::pair<int, int>>& arcs, int n) {
    if (static_cast<int>(fvs.size()) > caps::kNaiveNCap)
      throw CapError("feedback set larger than assignment-scan cap");
    std::vector<bool> in_fvs(static_cast<size_t>(n) + 1, false);
    for (int v : fvs) {
      if (v < 1 || v > n) throw InvalidInput("feedback vertex out of range");
      in_fvs[static_cast<size_t>(v)] = true;
    }
    Digraph rest(n);
    for (auto [j, i] : arcs)
      if (!in_fvs[static_cast<size_t>(j)] && !in_fvs[static_cast<size_t>(i)] && j != i)
        rest.add_arc(j, i);
      else if (j == i && !in_fvs[static_cast<size_t>(j)])
        throw InvalidInput("dependency graph minus feedback set has a cycle");
    std::vector<int> order;
    try {
      order = topological_order(rest);
    } catch (const InvalidInput&) {
      throw InvalidInput("dependency graph minus feedback set has a cycle");
    }
    for (int v : order)
      if (!in_fvs[static_cast<size_t>(v)]) topo.push_back(v);
  }

  std::uint64_t count(const BooleanNetwork& f, Configuration& x) const {
    std::uint64_t total = 0;
    std::uint64_t assignments = 1ULL << fvs.size();
    for (std::uint64_t a = 0; a < assignments; ++a) {
      for (size_t t = 0; t < fvs.size(); ++t) x.set(fvs[t], (a >> t) & 1u);
      for (int v : topo) x.set(v, f.eval_vertex(v, x));
      bool fixed = true;
      for (int v : fvs)
        if (f.eval_vertex(v, x) != x.get(v)) {
          fixed = false;
          break;
        }
      if (fixed) ++total;
    }
    return total;
  }
};

}  // namespace

std::uint64_t count_fixed_points_fvs(const BooleanNetwork& f, const std::vector<int>& fvs) {
  FvsCounter counter(f, fvs);
  Configuration x(f.vertex_count());
  return counter.count(f, x);
}

std::vector<int> choose_fvs(const SignedDigraph& d) {
  std::vector<int> fvs;
  try {
    auto [cycles, counts] = enumerate_signed_cycles(d);
    std::vector<bool> covered(cycles.size(), false);
    size_t remaining = cycles.size();
    while (remaining > 0) {
      std::map<int, std::uint64_t> participation;
      for (size_t c = 0; c < cycles.size(); ++c)
        if (!covered[c])
          for (int v : cycles[c].vertices) ++participation[v];
      int best = 0;
      std::uint64_t best_count = 0;
      for (auto [v, cnt] : participation)
        if (cnt > best_count) {
          best = v;
          best_count = cnt;
        }
      fvs.push_back(best);
      for (size_t c = 0; c < cycles.size(); ++c)
        if (!covered[c] &&
            std::find(cycles[c].vertices.begin(), cycles[c].vertices.end(), best) !=
                cycles[c].vertices.end()) {
          covered[c] = true;
          --remaining;
        }
    }
  } catch (const CapError&) {
    // Too many cycles to list: peel one cycle at a time.
    SignedDigraph work = d;
    std::vector<int> alive(static_cast<size_t>(d.vertex_count()), 0);
    std::vector<int> ids;
    for (int v = 1; v <= d.vertex_count(); ++v) ids.push_back(v);
    while (true) {
      std::vector<int> cycle;
      for_each_cycle(work.underlying(), [&](const std::vector<int>& vs) {
        cycle = vs;
        return false;
      });
      if (cycle.empty()) break;
      int best = cycle[0];
      std::uint64_t best_score = 0;
      for (int v : cycle) {
        std::uint64_t score =
            static_cast<std::uint64_t>(work.in_degree(v)) * work.out_neighbors(v).size();
        if (score > best_score) {
          best = v;
          best_score = score;
        }
      }
      fvs.push_back(ids[static_cast<size_t>(best - 1)]);
      auto [next, kept] = work.without(std::vector<int>{best});
      std::vector<int> next_ids;
      for (int old_pos : kept) next_ids.push_back(ids[static_cast<size_t>(old_pos - 1)]);
      work = std::move(next);
      ids = std::move(next_ids);
    }
    std::sort(fvs.begin(), fvs.end());
  }
  std::sort(fvs.begin(), fvs.end());
  return fvs;
}

AnalysisReport phi_extremes(const SignedDigraph& d, const PhiOptions& options) {
  auto started = std::chrono::steady_clock::now();
  NetworkFamily family(d, options.family_cap);
  if (family.size() == 0) throw InvalidInput("phi_extremes: digraph is not a SID");

  std::vector<int> fvs = options.fvs_hint.empty() ? choose_fvs(d) : options.fvs_hint;
  FvsCounter counter(d, fvs);

  AnalysisReport report;
  report.family_size = family.size();
  report.delta = d.max_in_degree();

  std::uint64_t best_max = 0, best_min = 0;
  std::uint64_t max_index = 0, min_index = 0;
  bool first = true;
  Configuration scratch(d.vertex_count());
  family.for_each(0, family.size(), [&](std::uint64_t idx, const BooleanNetwork& f) {
    std::uint64_t phi = counter.count(f, scratch);
    if (first || phi > best_max) {
      best_max = phi;
      max_index = idx;
    }
    if (first || phi < best_min) {
      best_min = phi;
      min_index = idx;
    }
    first = false;
  });

  report.phi_max = best_max;
  report.phi_min = best_min;
  report.max_witness = family.at(max_index);
  report.min_witness = family.at(min_index);
  if (options.compute_tau) report.tau_plus = tau_plus(d);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string AnalysisReport::to_json() const {
  nlohmann::ordered_json j;
  j["phi_max"] = phi_max;
  j["phi_min"] = phi_min;
  j["family_size"] = family_size;
  j["delta"] = delta;
  if (tau_plus)
    j["tau_plus"] = *tau_plus;
  else
    j["tau_plus"] = nullptr;
  nlohmann::ordered_json w;
  w["max"] = max_witness ? nlohmann::ordered_json(bn_to_string(*max_witness))
                         : nlohmann::ordered_json(nullptr);
  w["min"] = min_witness ? nlohmann::ordered_json(bn_to_string(*min_witness))
                         : nlohmann::ordered_json(nullptr);
  j["witnesses"] = w;
  return j.dump(2);
}

std::uint64_t phi_delta1(const SignedDigraph& d) {
  if (d.max_in_degree() > 1)
    throw InvalidInput("phi_delta1 requires max in-degree <= 1");
  if (!validate_sid(d).valid) throw InvalidInput("phi_delta1: not a SID");
  auto [cycles, counts] = enumerate_signed_cycles(d);
  if (counts.negative > 0) return 0;
  if (counts.positive >= 64) throw CapError("phi_delta1: too many positive cycles");
  return 1ULL << counts.positive;
}

SignedDigraph nicefy(const SignedDigraph& d) {
  auto validity = validate_sid(d);
  if (!validity.valid) throw InvalidInput("nicefy: input is not a SID");
  SignedDigraph out(d.vertex_count());
  for (int i = 1; i <= d.vertex_count(); ++i) {
    int zeros = d.in_degree(i, Sign::zero);
    if (zeros >= 2) continue;  // i becomes a source
    for (const auto& [j, s] : d.in_arcs(i)) {
      if (zeros == 1 && s == Sign::zero) continue;
      out.add_arc(j, i, s);
    }
  }
  if (d.has_names())
    for (int i = 1; i <= d.vertex_count(); ++i) out.set_name(i, d.name(i));
  return out;
}

namespace {

// Evaluates x_j xor sigma-tilde for arc (j, i) of d.
bool delivered(const SignedDigraph& d, int j, int i, const Configuration& y) {
  return y.get(j) != sign_flip(d.sign(j, i));
}

LocalFunction zero_repair_unique(const SignedDigraph& d, int i, int j, int k,
                                 const Configuration& y) {
  std::vector<int> inputs = d.in_neighbors(i);
  int ar = static_cast<int>(inputs.size());
  auto pos = [&](int v) {
    return static_cast<int>(std::lower_bound(inputs.begin(), inputs.end(), v) - inputs.begin());
  };
  size_t words = (ar <= 6) ? 1 : (1ULL << (ar - 6));
  LocalFunction g(inputs, std::vector<std::uint64_t>(words, 0));
  bool yi = y.get(i), yk = y.get(k);
  for (std::uint32_t b = 0; b < (1u << ar); ++b) {
    auto lit = [&](int v) {
      bool raw = (b >> pos(v)) & 1u;
      return raw != sign_flip(d.sign(v, i));
    };
    bool xk = (b >> pos(k)) & 1u;
    bool value;
    if (!yi) {
      value = lit(j) || (xk != yk);
      for (int l : inputs)
        if (l != j && l != k) value = value && (lit(l) || (xk == yk));
    } else {
      value = lit(j) && (xk == yk);
      for (int l : inputs)
        if (l != j && l != k) value = value || (lit(l) && (xk != yk));
    }
    g.set_bit(b, value);
  }
  return g;
}

LocalFunction zero_repair_many(const SignedDigraph& d, int i, const Configuration& y) {
  std::vector<int> inputs = d.in_neighbors(i);
  int ar = static_cast<int>(inputs.size());
  size_t words = (ar <= 6) ? 1 : (1ULL << (ar - 6));
  LocalFunction g(inputs, std::vector<std::uint64_t>(words, 0));
  bool yi = y.get(i);
  for (std::uint32_t b = 0; b < (1u << ar); ++b) {
    bool parity = false;  // xor over zero in-neighbors of (x_j xor y_j)
    bool conj = true, disj = false;
    for (int t = 0; t < ar; ++t) {
      int v = inputs[static_cast<size_t>(t)];
      bool raw = (b >> t) & 1u;
      if (d.sign(v, i) == Sign::zero) {
        parity = parity != (raw != y.get(v));
      } else {
        bool lit = raw != sign_flip(d.sign(v, i));
        conj = conj && lit;
        disj = disj || lit;
      }
    }
    // Vanishes at x = y regardless of how many zero in-neighbors there are.
    g.set_bit(b, yi ? (!parity || disj) : (parity && conj));
  }
  return g;
}

}  // namespace

BooleanNetwork lift_fixed_point(const SignedDigraph& d, const Configuration& y) {
  if (y.size() != d.vertex_count()) throw InvalidInput("configuration domain mismatch");
  SignedDigraph nice = nicefy(d);
  BooleanNetwork f(d.vertex_count());
  for (int i = 1; i <= d.vertex_count(); ++i) {
    // Pick a delivering in-neighbor in the nicefied digraph.
    int deliverer = 0;
    if (!nice.is_source(i)) {
      for (const auto& [j, s] : nice.in_arcs(i))
        if (delivered(nice, j, i, y) == y.get(i)) {
          deliverer = j;
          break;
        }
      if (deliverer == 0)
        throw WitnessError("no network over the nicefied digraph fixes " + y.to_string() +
                           " (vertex " + std::to_string(i) + ")");
    }
    int zeros = d.in_degree(i, Sign::zero);
    if (zeros == 0) {
      if (d.is_source(i))
        f.set_local(i, LocalFunction::constant(y.get(i)));
      else
        f.set_local(i, make_and_or(d, i, /*conj=*/!y.get(i)));
    } else if (zeros == 1) {
      int k = d.in_neighbors(i, Sign::zero)[0];
      f.set_local(i, zero_repair_unique(d, i, deliverer, k, y));
    } else {
      f.set_local(i, zero_repair_many(d, i, y));
    }
  }
  if (!f.is_fixed_point(y)) throw std::logic_error("lift_fixed_point failed to fix y");
  return f;
}

MaxGe1Result decide_max_ge1(const SignedDigraph& d, bool want_witness) {
  SignedDigraph nice = nicefy(d);  // also validates
  auto sccs = scc_analysis(nice);

  std::vector<Configuration> cycle_seeds;
  std::vector<std::vector<int>> seed_cycles;
  for (const SccInfo& scc : sccs) {
    if (scc.trivial || !scc.initial) continue;
    auto [sub, ids] = nice.induced(scc.vertices);
    std::vector<int> positive;
    for_each_cycle(sub.underlying(), [&](const std::vector<int>& vs) {
      Sign s = Sign::positive;
      for (size_t t = 0; t < vs.size(); ++t)
        s = sign_product(s, sub.sign(vs[t], vs[(t + 1) % vs.size()]));
      if (s == Sign::positive) {
        positive = vs;
        return false;
      }
      return true;
    });
    if (positive.empty()) return {false, std::nullopt};
    std::vector<int> mapped;
    for (int v : positive) mapped.push_back(ids[static_cast<size_t>(v - 1)]);
    seed_cycles.push_back(std::move(mapped));
  }
  if (!want_witness) return {true, std::nullopt};

  // Assemble a fixable configuration: propagate values along each chosen
  // positive cycle, set sources to zero, then walk forward.
  int n = nice.vertex_count();
  std::vector<int> state(static_cast<size_t>(n) + 1, -1);
  std::vector<int> queue;
  for (const auto& cycle : seed_cycles) {
    state[static_cast<size_t>(cycle[0])] = 0;
    for (size_t t = 0; t + 1 < cycle.size(); ++t) {
      bool prev = state[static_cast<size_t>(cycle[t])] != 0;
      bool next = prev != sign_flip(nice.sign(cycle[t], cycle[t + 1]));
      state[static_cast<size_t>(cycle[t + 1])] = next ? 1 : 0;
    }
    for (int v : cycle) queue.push_back(v);
  }
  for (int v = 1; v <= n; ++v)
    if (nice.is_source(v) && state[static_cast<size_t>(v)] < 0) {
      state[static_cast<size_t>(v)] = 0;
      queue.push_back(v);
    }
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[static_cast<size_t>(head)];
    for (int w : nice.out_neighbors(v))
      if (state[static_cast<size_t>(w)] < 0) {
        bool val = (state[static_cast<size_t>(v)] != 0) != sign_flip(nice.sign(v, w));
        state[static_cast<size_t>(w)] = val ? 1 : 0;
        queue.push_back(w);
      }
  }
  Configuration y(n);
  for (int v = 1; v <= n; ++v) {
    if (state[static_cast<size_t>(v)] < 0)
      throw std::logic_error("decide_max_ge1: unreachable vertex in witness assembly");
    y.set(v, state[static_cast<size_t>(v)] != 0);
  }
  return {true, lift_fixed_point(d, y)};
}

}  // namespace fixnet
