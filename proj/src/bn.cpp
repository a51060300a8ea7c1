#include "fixnet/bn.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fixnet {

LocalFunction::LocalFunction(std::vector<int> inputs, std::vector<std::uint64_t> table)
    : inputs_(std::move(inputs)), table_(std::move(table)) {
  if (!std::is_sorted(inputs_.begin(), inputs_.end()) ||
      std::adjacent_find(inputs_.begin(), inputs_.end()) != inputs_.end())
    throw InvalidInput("local function inputs must be sorted and distinct");
  if (arity() > caps::kDegCap)
    throw CapError("local in-degree " + std::to_string(arity()) + " exceeds cap " +
                   std::to_string(caps::kDegCap));
  size_t words = (arity() <= 6) ? 1 : (1ULL << (arity() - 6));
  if (table_.size() != words) throw InvalidInput("truth table has wrong size");
  if (arity() < 6) {
    std::uint64_t mask = (1ULL << (1u << arity())) - 1;
    table_[0] &= mask;
  }
}

LocalFunction LocalFunction::from_word(std::vector<int> inputs, std::uint64_t word) {
  if (inputs.size() > 6) throw InvalidInput("from_word needs arity <= 6");
  return LocalFunction(std::move(inputs), {word});
}

std::uint64_t LocalFunction::word() const {
  if (arity() > 6) throw InvalidInput("table wider than one word");
  return table_[0];
}

void LocalFunction::set_word(std::uint64_t w) {
  if (arity() > 6) throw InvalidInput("table wider than one word");
  if (arity() < 6) w &= (1ULL << (1u << arity())) - 1;
  table_[0] = w;
}

LocalFunction::InputProfile LocalFunction::input_profile(int t) const {
  InputProfile p;
  std::uint32_t stride = 1u << t;
  std::uint32_t size = 1u << arity();
  for (std::uint32_t b = 0; b < size; ++b) {
    if (b & stride) continue;
    bool lo = bit(b), hi = bit(b | stride);
    if (lo < hi) p.increases = true;
    if (lo > hi) p.decreases = true;
  }
  p.effective = p.increases || p.decreases;
  return p;
}

BooleanNetwork::BooleanNetwork(int n) : n_(n), fns_(static_cast<size_t>(n) + 1) {
  if (n < 0 || n > caps::kConfigMaxBits)
    throw InvalidInput("network size out of range: " + std::to_string(n));
}

void BooleanNetwork::set_local(int i, LocalFunction f) {
  if (i < 1 || i > n_) throw InvalidInput("vertex out of range: " + std::to_string(i));
  for (int j : f.inputs())
    if (j < 1 || j > n_) throw InvalidInput("local input out of range: " + std::to_string(j));
  fns_[static_cast<size_t>(i)] = std::move(f);
}

void BooleanNetwork::set_local_word(int i, std::uint64_t word) {
  if (i < 1 || i > n_) throw InvalidInput("vertex out of range: " + std::to_string(i));
  fns_[static_cast<size_t>(i)].set_word(word);
}

const LocalFunction& BooleanNetwork::local(int i) const {
  if (i < 1 || i > n_) throw InvalidInput("vertex out of range: " + std::to_string(i));
  return fns_[static_cast<size_t>(i)];
}

Configuration BooleanNetwork::apply(const Configuration& x) const {
  if (x.size() != n_) throw InvalidInput("configuration domain mismatch");
  Configuration y(n_);
  for (int i = 1; i <= n_; ++i) y.set(i, eval_vertex(i, x));
  return y;
}

SignedDigraph sid_of(const BooleanNetwork& f) {
  SignedDigraph d(f.vertex_count());
  for (int i = 1; i <= f.vertex_count(); ++i) {
    const LocalFunction& g = f.local(i);
    for (int t = 0; t < g.arity(); ++t) {
      auto p = g.input_profile(t);
      if (!p.effective) continue;
      Sign s = p.increases ? (p.decreases ? Sign::zero : Sign::positive) : Sign::negative;
      d.add_arc(g.inputs()[static_cast<size_t>(t)], i, s);
    }
  }
  return d;
}

std::vector<Configuration> fixed_points_naive(const BooleanNetwork& f) {
  int n = f.vertex_count();
  if (n > caps::kNaiveNCap)
    throw CapError("fixed_points_naive: n = " + std::to_string(n) + " exceeds cap " +
                   std::to_string(caps::kNaiveNCap));
  std::vector<Configuration> fps;
  for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
    Configuration x = Configuration::from_value(n, v);
    if (f.is_fixed_point(x)) fps.push_back(x);
  }
  return fps;
}

bool leq_config(const SignedDigraph& d, int i, const Configuration& x, const Configuration& y) {
  for (const auto& [j, s] : d.in_arcs(i)) {
    switch (s) {
      case Sign::positive:
        if (x.get(j) && !y.get(j)) return false;
        break;
      case Sign::negative:
        if (y.get(j) && !x.get(j)) return false;
        break;
      case Sign::zero:
        if (x.get(j) != y.get(j)) return false;
        break;
    }
  }
  return true;
}

std::string to_string(LocalKind k) {
  switch (k) {
    case LocalKind::const0: return "const0";
    case LocalKind::const1: return "const1";
    case LocalKind::copy: return "copy";
    case LocalKind::and_gate: return "and";
    case LocalKind::or_gate: return "or";
    case LocalKind::other: return "other";
  }
  return "?";
}

LocalKind classify_local(const BooleanNetwork& f, int i) {
  const LocalFunction& g = f.local(i);
  std::vector<int> eff;     // effective input positions
  std::vector<bool> flip;   // sigma-tilde per effective input
  for (int t = 0; t < g.arity(); ++t) {
    auto p = g.input_profile(t);
    if (!p.effective) continue;
    if (p.increases && p.decreases) return LocalKind::other;  // zero dependency
    eff.push_back(t);
    flip.push_back(p.decreases);
  }
  if (eff.empty()) return g.bit(0) ? LocalKind::const1 : LocalKind::const0;
  if (eff.size() == 1) return LocalKind::copy;

  bool is_and = true, is_or = true;
  for (std::uint32_t b = 0; b < (1u << g.arity()); ++b) {
    bool conj = true, disj = false;
    for (size_t t = 0; t < eff.size(); ++t) {
      bool lit = (((b >> eff[t]) & 1u) != 0) != static_cast<bool>(flip[t]);
      conj = conj && lit;
      disj = disj || lit;
    }
    if (g.bit(b) != conj) is_and = false;
    if (g.bit(b) != disj) is_or = false;
  }
  if (is_and) return LocalKind::and_gate;
  if (is_or) return LocalKind::or_gate;
  return LocalKind::other;
}

LocalFunction make_and_or(const SignedDigraph& d, int i, bool conj) {
  auto arcs = d.in_arcs(i);
  std::vector<int> inputs;
  std::vector<bool> flip;
  for (const auto& [j, s] : arcs) {
    if (s == Sign::zero)
      throw InvalidInput("AND/OR function undefined with a zero in-neighbor");
    inputs.push_back(j);
    flip.push_back(sign_flip(s));
  }
  int ar = static_cast<int>(inputs.size());
  if (ar > caps::kDegCap) throw CapError("in-degree exceeds table cap");
  size_t words = (ar <= 6) ? 1 : (1ULL << (ar - 6));
  LocalFunction g(inputs, std::vector<std::uint64_t>(words, 0));
  for (std::uint32_t b = 0; b < (1u << ar); ++b) {
    bool acc = conj;
    for (int t = 0; t < ar; ++t) {
      bool lit = (((b >> t) & 1u) != 0) != static_cast<bool>(flip[static_cast<size_t>(t)]);
      acc = conj ? (acc && lit) : (acc || lit);
    }
    g.set_bit(b, acc);
  }
  return g;
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

int parse_int(const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("bad integer: " + tok);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad integer: " + tok);
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw ParseError(std::string("bad hex digit: ") + c);
}

}  // namespace

BooleanNetwork parse_bn(std::istream& in) {
  std::vector<std::string> tok;
  if (!next_tokens(in, tok) || tok.size() != 2 || tok[0] != "bn")
    throw ParseError("expected header line 'bn <n>'");
  BooleanNetwork f(parse_int(tok[1]));
  std::vector<bool> seen(static_cast<size_t>(f.vertex_count()) + 1, false);
  while (next_tokens(in, tok)) {
    if (tok.size() < 3 || tok[0] != "fn")
      throw ParseError("expected line 'fn <i> <inputs...> <hex>'");
    int i = parse_int(tok[1]);
    if (i < 1 || i > f.vertex_count()) throw ParseError("vertex out of range in fn line");
    if (seen[static_cast<size_t>(i)]) throw ParseError("duplicate fn line for vertex " + tok[1]);
    seen[static_cast<size_t>(i)] = true;
    std::vector<int> inputs;
    for (size_t t = 2; t + 1 < tok.size(); ++t) inputs.push_back(parse_int(tok[t]));
    int d = static_cast<int>(inputs.size());
    if (d > caps::kDegCap) throw ParseError("fn line exceeds in-degree cap");
    const std::string& hex = tok.back();
    size_t bits = 1ULL << d;
    size_t digits = std::max<size_t>(1, bits / 4);
    if (hex.size() != digits)
      throw ParseError("truth table for arity " + std::to_string(d) + " needs " +
                       std::to_string(digits) + " hex digits");
    std::vector<std::uint64_t> table((bits + 63) / 64, 0);
    std::uint32_t bit_index = 0;  // filled from least significant digit
    for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
      int nib = hex_digit(*it);
      for (int b = 0; b < 4 && bit_index < bits; ++b, ++bit_index)
        if (nib & (1 << b)) table[bit_index >> 6] |= 1ULL << (bit_index & 63);
    }
    try {
      f.set_local(i, LocalFunction(std::move(inputs), std::move(table)));
    } catch (const InvalidInput& e) {
      throw ParseError(e.what());
    }
  }
  for (int i = 1; i <= f.vertex_count(); ++i)
    if (!seen[static_cast<size_t>(i)])
      throw ParseError("missing fn line for vertex " + std::to_string(i));
  return f;
}

BooleanNetwork parse_bn_string(const std::string& text) {
  std::istringstream in(text);
  return parse_bn(in);
}

BooleanNetwork load_bn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_bn(in);
}

std::string bn_to_string(const BooleanNetwork& f) {
  static const char* digits = "0123456789abcdef";
  std::ostringstream out;
  out << "bn " << f.vertex_count() << "\n";
  for (int i = 1; i <= f.vertex_count(); ++i) {
    const LocalFunction& g = f.local(i);
    out << "fn " << i;
    for (int j : g.inputs()) out << " " << j;
    size_t bits = 1ULL << g.arity();
    size_t ndigits = std::max<size_t>(1, bits / 4);
    std::string hex(ndigits, '0');
    for (size_t t = 0; t < ndigits; ++t) {
      int nib = 0;
      for (int b = 0; b < 4; ++b) {
        std::uint32_t idx = static_cast<std::uint32_t>(4 * t + static_cast<size_t>(b));
        if (idx < bits && g.bit(idx)) nib |= 1 << b;
      }
      hex[ndigits - 1 - t] = digits[nib];
    }
    out << " " << hex << "\n";
  }
  return out.str();
}

void save_bn(const BooleanNetwork& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << bn_to_string(f);
}

}  // namespace fixnet
