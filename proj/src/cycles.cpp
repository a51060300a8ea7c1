#include "fixnet/cycles.hpp"

#include <algorithm>
#include <set>

namespace fixnet {

namespace {

// Johnson's circuit enumeration. Roots are processed in ascending order and
// paths stay within {root..n}, so every cycle is reported once, rotated to
// start at its minimal vertex.
class CycleEnumerator {
 public:
  CycleEnumerator(const Digraph& g, const std::function<bool(const std::vector<int>&)>& visit,
                  std::uint64_t cap)
      : g_(g), visit_(visit), cap_(cap) {}

  void run() {
    int n = g_.n;
    blocked_.assign(static_cast<size_t>(n) + 1, false);
    block_list_.assign(static_cast<size_t>(n) + 1, {});
    for (root_ = 1; root_ <= n && !stopped_; ++root_) {
      for (int v = root_; v <= n; ++v) {
        blocked_[static_cast<size_t>(v)] = false;
        block_list_[static_cast<size_t>(v)].clear();
      }
      path_.clear();
      circuit(root_);
    }
  }

 private:
  bool circuit(int v) {
    bool found = false;
    blocked_[static_cast<size_t>(v)] = true;
    path_.push_back(v);
    for (int w : g_.out[static_cast<size_t>(v)]) {
      if (w < root_ || stopped_) continue;
      if (w == root_) {
        emit();
        found = true;
        if (stopped_) break;
      } else if (!blocked_[static_cast<size_t>(w)]) {
        if (circuit(w)) found = true;
        if (stopped_) break;
      }
    }
    if (found)
      unblock(v);
    else
      for (int w : g_.out[static_cast<size_t>(v)])
        if (w >= root_) {
          auto& lst = block_list_[static_cast<size_t>(w)];
          if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
        }
    path_.pop_back();
    return found;
  }

  void unblock(int v) {
    blocked_[static_cast<size_t>(v)] = false;
    auto lst = std::move(block_list_[static_cast<size_t>(v)]);
    block_list_[static_cast<size_t>(v)].clear();
    for (int w : lst)
      if (blocked_[static_cast<size_t>(w)]) unblock(w);
  }

  void emit() {
    if (++emitted_ > cap_) throw CapError("cycle enumeration exceeds cap");
    if (!visit_(path_)) stopped_ = true;
  }

  const Digraph& g_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::uint64_t cap_;
  std::uint64_t emitted_ = 0;
  int root_ = 1;
  bool stopped_ = false;
  std::vector<int> path_;
  std::vector<bool> blocked_;
  std::vector<std::vector<int>> block_list_;
};

Sign cycle_sign(const SignedDigraph& d, const std::vector<int>& vs) {
  Sign s = Sign::positive;
  for (size_t t = 0; t < vs.size(); ++t)
    s = sign_product(s, d.sign(vs[t], vs[(t + 1) % vs.size()]));
  return s;
}

}  // namespace

void for_each_cycle(const Digraph& g, const std::function<bool(const std::vector<int>&)>& visit,
                    std::uint64_t cap) {
  CycleEnumerator(g, visit, cap).run();
}

std::pair<std::vector<CycleRecord>, CycleCounts> enumerate_signed_cycles(const SignedDigraph& d,
                                                                         std::uint64_t cap) {
  std::vector<CycleRecord> cycles;
  CycleCounts counts;
  Digraph g = d.underlying();
  for_each_cycle(
      g,
      [&](const std::vector<int>& vs) {
        CycleRecord rec{vs, cycle_sign(d, vs)};
        switch (rec.sign) {
          case Sign::positive: ++counts.positive; break;
          case Sign::negative: ++counts.negative; break;
          case Sign::zero: ++counts.zero; break;
        }
        cycles.push_back(std::move(rec));
        return true;
      },
      cap);
  return {std::move(cycles), counts};
}

bool has_positive_cycle(const SignedDigraph& d, std::uint64_t cap) {
  if (!d.is_nice()) throw InvalidInput("has_positive_cycle requires a nice digraph");
  bool found = false;
  Digraph g = d.underlying();
  for_each_cycle(
      g,
      [&](const std::vector<int>& vs) {
        if (cycle_sign(d, vs) == Sign::positive) {
          found = true;
          return false;
        }
        return true;
      },
      cap);
  return found;
}

bool has_only_negative_cycles(const SignedDigraph& d, std::uint64_t cap) {
  bool ok = true;
  Digraph g = d.underlying();
  for_each_cycle(
      g,
      [&](const std::vector<int>& vs) {
        if (cycle_sign(d, vs) != Sign::negative) {
          ok = false;
          return false;
        }
        return true;
      },
      cap);
  return ok;
}

bool is_acyclic(const Digraph& g) {
  // Kahn's algorithm.
  std::vector<int> indeg(static_cast<size_t>(g.n) + 1, 0);
  for (int v = 1; v <= g.n; ++v)
    for (int w : g.out[static_cast<size_t>(v)]) ++indeg[static_cast<size_t>(w)];
  std::vector<int> queue;
  for (int v = 1; v <= g.n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int w : g.out[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(w)] == 0) queue.push_back(w);
  }
  return seen == g.n;
}

std::vector<int> topological_order(const Digraph& g) {
  std::vector<int> indeg(static_cast<size_t>(g.n) + 1, 0);
  for (int v = 1; v <= g.n; ++v)
    for (int w : g.out[static_cast<size_t>(v)]) ++indeg[static_cast<size_t>(w)];
  // Min-id-first for a deterministic order.
  std::set<int> ready;
  for (int v = 1; v <= g.n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.insert(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : g.out[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(w)] == 0) ready.insert(w);
  }
  if (static_cast<int>(order.size()) != g.n)
    throw InvalidInput("topological_order: digraph has a cycle");
  return order;
}

int tau_plus(const SignedDigraph& d) {
  int n = d.vertex_count();
  if (n > caps::kTauNCap)
    throw CapError("tau_plus: n = " + std::to_string(n) + " exceeds cap " +
                   std::to_string(caps::kTauNCap));
  // Subsets in increasing size, lexicographic within a size.
  std::vector<int> subset;
  auto ok = [&](const std::vector<int>& del) {
    auto [sub, ids] = d.without(del);
    return has_only_negative_cycles(sub);
  };
  for (int size = 0; size <= n; ++size) {
    subset.resize(static_cast<size_t>(size));
    std::function<bool(int, int)> rec = [&](int pos, int first) {
      if (pos == size) return ok(subset);
      for (int v = first; v <= n; ++v) {
        subset[static_cast<size_t>(pos)] = v;
        if (rec(pos + 1, v + 1)) return true;
      }
      return false;
    };
    if (rec(0, 1)) return size;
  }
  return n;  // unreachable: deleting everything is always enough
}

Digraph even_cycle_transform(const SignedDigraph& d) {
  if (!d.is_nice()) throw InvalidInput("even_cycle_transform requires a nice digraph");
  int extra = 0;
  for (const Arc& a : d.arcs())
    if (a.sign == Sign::positive) ++extra;
  Digraph g(d.vertex_count() + extra);
  int next = d.vertex_count();
  for (const Arc& a : d.arcs()) {
    if (a.sign == Sign::positive) {
      ++next;
      g.add_arc(a.from, next);
      g.add_arc(next, a.to);
    } else {
      g.add_arc(a.from, a.to);
    }
  }
  return g;
}

bool has_even_cycle(const Digraph& g, std::uint64_t cap) {
  bool found = false;
  for_each_cycle(
      g,
      [&](const std::vector<int>& vs) {
        if (vs.size() % 2 == 0) {
          found = true;
          return false;
        }
        return true;
      },
      cap);
  return found;
}

namespace {

struct TarjanState {
  const Digraph& g;
  std::vector<int> index, low, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  explicit TarjanState(const Digraph& g_)
      : g(g_),
        index(static_cast<size_t>(g_.n) + 1, -1),
        low(static_cast<size_t>(g_.n) + 1, 0),
        on_stack(static_cast<size_t>(g_.n) + 1, false) {}

  void visit(int v) {
    index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<size_t>(v)] = true;
    for (int w : g.out[static_cast<size_t>(v)]) {
      if (index[static_cast<size_t>(w)] < 0) {
        visit(w);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
      } else if (on_stack[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
      }
    }
    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
      std::vector<int> scc;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<size_t>(w)] = false;
        scc.push_back(w);
      } while (w != v);
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
  TarjanState st(g);
  for (int v = 1; v <= g.n; ++v)
    if (st.index[static_cast<size_t>(v)] < 0) st.visit(v);
  std::sort(st.sccs.begin(), st.sccs.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return st.sccs;
}

std::vector<SccInfo> scc_analysis(const SignedDigraph& d) {
  Digraph g = d.underlying();
  auto comps = strongly_connected_components(g);
  std::vector<int> comp_of(static_cast<size_t>(d.vertex_count()) + 1, -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int v : comps[static_cast<size_t>(c)]) comp_of[static_cast<size_t>(v)] = c;
  std::vector<SccInfo> infos(comps.size());
  for (size_t c = 0; c < comps.size(); ++c) {
    infos[c].vertices = comps[c];
    infos[c].trivial = comps[c].size() == 1 && !d.has_arc(comps[c][0], comps[c][0]);
    infos[c].initial = true;
  }
  for (const Arc& a : d.arcs()) {
    int cf = comp_of[static_cast<size_t>(a.from)], ct = comp_of[static_cast<size_t>(a.to)];
    if (cf != ct) infos[static_cast<size_t>(ct)].initial = false;
  }
  return infos;
}

}  // namespace fixnet
