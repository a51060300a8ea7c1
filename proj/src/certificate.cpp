#include "fixnet/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fixnet {

namespace {

struct VertexSets {
  std::vector<Configuration> falses;  // F_i
  std::vector<Configuration> trues;   // T_i
};

// True iff adding keeps the acceptance condition: no y in T with y <=_i x
// for x in F.
bool can_add_false(const SignedDigraph& d, int i, const VertexSets& sets,
                   const Configuration& x) {
  for (const Configuration& y : sets.trues)
    if (leq_config(d, i, y, x)) return false;
  return true;
}

bool can_add_true(const SignedDigraph& d, int i, const VertexSets& sets,
                  const Configuration& y) {
  for (const Configuration& x : sets.falses)
    if (leq_config(d, i, y, x)) return false;
  return true;
}

struct WitnessSlot {
  int from = 0;
  bool up = true;  // up: witness lands in F_i, flipped partner in T_i
};

std::vector<WitnessSlot> witness_slots(const SignedDigraph& d, int i) {
  std::vector<WitnessSlot> slots;
  for (const auto& [j, s] : d.in_arcs(i)) {
    if (s != Sign::negative) slots.push_back({j, true});
    if (s != Sign::positive) slots.push_back({j, false});
  }
  return slots;
}

}  // namespace

bool certificate_check(const SignedDigraph& d, std::uint64_t k, const Certificate& cert) {
  int n = d.vertex_count();
  if (cert.fixed_points.size() != k)
    throw StructureError("certificate holds " + std::to_string(cert.fixed_points.size()) +
                         " configurations, expected " + std::to_string(k));
  if (n < 64 && k > (1ULL << n)) return false;  // obviously false instance
  std::set<Configuration> seen;
  for (const Configuration& x : cert.fixed_points) {
    if (x.size() != n) throw StructureError("certificate configuration over wrong domain");
    if (!seen.insert(x).second) throw StructureError("duplicate certified configuration");
  }
  for (int i = 1; i <= n; ++i)
    for (const WitnessSlot& slot : witness_slots(d, i)) {
      const auto& pool = slot.up ? cert.up_witness : cert.down_witness;
      auto it = pool.find({slot.from, i});
      if (it == pool.end())
        throw StructureError("missing witness for arc (" + std::to_string(slot.from) + "," +
                             std::to_string(i) + ")");
      if (it->second.size() != n || it->second.get(slot.from))
        throw StructureError("witness for arc (" + std::to_string(slot.from) + "," +
                             std::to_string(i) + ") must have bit " +
                             std::to_string(slot.from) + " clear");
    }
  for (const auto& [arc, x] : cert.up_witness)
    if (!d.has_arc(arc.first, arc.second) || d.sign(arc.first, arc.second) == Sign::negative)
      throw StructureError("up witness for an arc that is not non-negative");
  for (const auto& [arc, x] : cert.down_witness)
    if (!d.has_arc(arc.first, arc.second) || d.sign(arc.first, arc.second) == Sign::positive)
      throw StructureError("down witness for an arc that is not non-positive");

  for (int i = 1; i <= n; ++i) {
    VertexSets sets;
    for (const Configuration& x : cert.fixed_points)
      (x.get(i) ? sets.trues : sets.falses).push_back(x);
    for (const WitnessSlot& slot : witness_slots(d, i)) {
      const auto& pool = slot.up ? cert.up_witness : cert.down_witness;
      const Configuration& w = pool.at({slot.from, i});
      Configuration flipped = w ^ Configuration::unit(n, slot.from);
      if (slot.up) {
        sets.falses.push_back(w);
        sets.trues.push_back(flipped);
      } else {
        sets.trues.push_back(w);
        sets.falses.push_back(flipped);
      }
    }
    for (const Configuration& x : sets.falses)
      for (const Configuration& y : sets.trues)
        if (leq_config(d, i, y, x)) return false;
  }
  return true;
}

BooleanNetwork certificate_to_bn(const SignedDigraph& d, const Certificate& cert) {
  if (!certificate_check(d, cert.fixed_points.size(), cert))
    throw InvalidInput("certificate_to_bn requires an accepting certificate");
  int n = d.vertex_count();
  BooleanNetwork f(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<Configuration> trues;
    for (const Configuration& x : cert.fixed_points)
      if (x.get(i)) trues.push_back(x);
    for (const WitnessSlot& slot : witness_slots(d, i)) {
      if (slot.up)
        trues.push_back(cert.up_witness.at({slot.from, i}) ^ Configuration::unit(n, slot.from));
      else
        trues.push_back(cert.down_witness.at({slot.from, i}));
    }
    std::vector<int> inputs = d.in_neighbors(i);
    int ar = static_cast<int>(inputs.size());
    if (ar > caps::kDegCap) throw CapError("in-degree exceeds table cap");
    size_t words = (ar <= 6) ? 1 : (1ULL << (ar - 6));
    LocalFunction g(inputs, std::vector<std::uint64_t>(words, 0));
    // f_i(x) = 1 iff some y in T_i has y <=_i x; this reads only N(i).
    for (std::uint32_t b = 0; b < (1u << ar); ++b) {
      bool value = false;
      for (const Configuration& y : trues) {
        bool leq = true;
        for (int t = 0; t < ar && leq; ++t) {
          int j = inputs[static_cast<size_t>(t)];
          bool xb = (b >> t) & 1u;
          bool yb = y.get(j);
          switch (d.sign(j, i)) {
            case Sign::positive: leq = !yb || xb; break;
            case Sign::negative: leq = !xb || yb; break;
            case Sign::zero: leq = xb == yb; break;
          }
        }
        if (leq) {
          value = true;
          break;
        }
      }
      g.set_bit(b, value);
    }
    f.set_local(i, std::move(g));
  }
  return f;
}

std::optional<Certificate> certificate_search(const SignedDigraph& d, std::uint64_t k,
                                              int n_cap) {
  int n = d.vertex_count();
  if (n > n_cap || n > 20)
    throw CapError("certificate_search: n = " + std::to_string(n) + " exceeds cap");
  std::uint64_t space = 1ULL << n;
  if (k == 0) throw InvalidInput("certificate_search needs k >= 1");
  if (k > space) return std::nullopt;

  std::vector<std::uint64_t> tuple(k);
  Certificate cert;

  // Witness backtracking at one vertex; first feasible choice in ascending
  // order of configuration value.
  auto place_witnesses = [&](int i, VertexSets sets,
                             std::vector<std::pair<WitnessSlot, Configuration>>& placed) {
    auto slots = witness_slots(d, i);
    placed.clear();
    std::vector<std::uint64_t> choice(slots.size(), 0);
    size_t level = 0;
    std::vector<size_t> f_marks, t_marks;
    while (true) {
      if (level == slots.size()) return true;
      const WitnessSlot& slot = slots[level];
      bool advanced = false;
      for (std::uint64_t& v = choice[level]; v < space; ++v) {
        if ((v >> (slot.from - 1)) & 1u) continue;  // witness bit must be clear
        Configuration w = Configuration::from_value(n, v);
        Configuration flipped = w ^ Configuration::unit(n, slot.from);
        const Configuration& to_f = slot.up ? w : flipped;
        const Configuration& to_t = slot.up ? flipped : w;
        if (!can_add_false(d, i, sets, to_f)) continue;
        sets.falses.push_back(to_f);
        if (!can_add_true(d, i, sets, to_t)) {
          sets.falses.pop_back();
          continue;
        }
        sets.trues.push_back(to_t);
        placed.push_back({slot, w});
        ++level;
        advanced = true;
        break;
      }
      if (advanced) continue;
      // Exhausted this level: backtrack.
      if (level == 0) return false;
      choice[level] = 0;
      --level;
      sets.falses.pop_back();
      sets.trues.pop_back();
      placed.pop_back();
      ++choice[level];
    }
  };

  std::function<bool(std::uint64_t, std::uint64_t)> pick =
      [&](std::uint64_t pos, std::uint64_t first) {
        if (pos == k) {
          cert.fixed_points.clear();
          for (std::uint64_t v : tuple)
            cert.fixed_points.push_back(Configuration::from_value(n, v));
          cert.up_witness.clear();
          cert.down_witness.clear();
          for (int i = 1; i <= n; ++i) {
            VertexSets sets;
            for (const Configuration& x : cert.fixed_points)
              (x.get(i) ? sets.trues : sets.falses).push_back(x);
            for (const Configuration& x : sets.falses)
              for (const Configuration& y : sets.trues)
                if (leq_config(d, i, y, x)) return false;
            std::vector<std::pair<WitnessSlot, Configuration>> placed;
            if (!place_witnesses(i, sets, placed)) return false;
            for (auto& [slot, w] : placed)
              (slot.up ? cert.up_witness : cert.down_witness)[{slot.from, i}] = w;
          }
          return true;
        }
        for (std::uint64_t v = first; v + (k - pos - 1) < space; ++v) {
          tuple[pos] = v;
          if (pick(pos + 1, v + 1)) return true;
        }
        return false;
      };

  if (pick(0, 0)) return cert;
  return std::nullopt;
}

Certificate certificate_from_network(const SignedDigraph& d, const BooleanNetwork& f,
                                     std::uint64_t k) {
  int n = d.vertex_count();
  auto fps = fixed_points_naive(f);
  if (fps.size() < k)
    throw WitnessError("network has only " + std::to_string(fps.size()) + " fixed points");
  Certificate cert;
  cert.fixed_points.assign(fps.begin(), fps.begin() + static_cast<long>(k));
  for (int i = 1; i <= n; ++i) {
    const LocalFunction& g = f.local(i);
    auto inputs = g.inputs();
    for (const WitnessSlot& slot : witness_slots(d, i)) {
      auto it = std::find(inputs.begin(), inputs.end(), slot.from);
      if (it == inputs.end()) throw InvalidInput("network does not read arc source");
      int t = static_cast<int>(it - inputs.begin());
      std::uint32_t stride = 1u << t;
      bool found = false;
      for (std::uint32_t b = 0; b < (1u << g.arity()) && !found; ++b) {
        if (b & stride) continue;
        bool lo = g.bit(b), hi = g.bit(b | stride);
        bool match = slot.up ? (!lo && hi) : (lo && !hi);
        if (!match) continue;
        Configuration w(n);
        for (int u = 0; u < g.arity(); ++u)
          w.set(inputs[static_cast<size_t>(u)], (b >> u) & 1u);
        (slot.up ? cert.up_witness : cert.down_witness)[{slot.from, i}] = w;
        found = true;
      }
      if (!found)
        throw WitnessError("no sign witness for arc (" + std::to_string(slot.from) + "," +
                           std::to_string(i) + "): network is not over this digraph");
    }
  }
  return cert;
}

namespace {

bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    tokens.assign(std::istream_iterator<std::string>(ls), std::istream_iterator<std::string>());
    if (!tokens.empty()) return true;
  }
  return false;
}

}  // namespace

Certificate parse_certificate(std::istream& in) {
  std::vector<std::string> tok;
  if (!next_tokens(in, tok) || tok.size() != 3 || tok[0] != "cert")
    throw ParseError("expected header line 'cert <n> <k>'");
  int n = std::stoi(tok[1]);
  std::uint64_t k = std::stoull(tok[2]);
  Certificate cert;
  while (next_tokens(in, tok)) {
    if (tok[0] == "fp" && tok.size() == 2) {
      Configuration x = Configuration::from_string(tok[1]);
      if (x.size() != n) throw ParseError("fp line over wrong domain");
      cert.fixed_points.push_back(x);
    } else if (tok[0] == "wit" && tok.size() == 5 && (tok[1] == "+" || tok[1] == "-")) {
      Configuration x = Configuration::from_string(tok[4]);
      if (x.size() != n) throw ParseError("wit line over wrong domain");
      std::pair<int, int> arc{std::stoi(tok[2]), std::stoi(tok[3])};
      auto& pool = tok[1] == "+" ? cert.up_witness : cert.down_witness;
      if (!pool.emplace(arc, x).second) throw ParseError("duplicate witness line");
    } else {
      throw ParseError("bad certificate line");
    }
  }
  if (cert.fixed_points.size() != k)
    throw ParseError("certificate header promises " + std::to_string(k) + " fp lines");
  return cert;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_certificate(in);
}

std::string certificate_to_string(const SignedDigraph& d, const Certificate& cert) {
  std::ostringstream out;
  out << "cert " << d.vertex_count() << " " << cert.fixed_points.size() << "\n";
  for (const Configuration& x : cert.fixed_points) out << "fp " << x.to_string() << "\n";
  for (const auto& [arc, x] : cert.up_witness)
    out << "wit + " << arc.first << " " << arc.second << " " << x.to_string() << "\n";
  for (const auto& [arc, x] : cert.down_witness)
    out << "wit - " << arc.first << " " << arc.second << " " << x.to_string() << "\n";
  return out.str();
}

}  // namespace fixnet
