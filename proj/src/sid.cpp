#include "fixnet/sid.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fixnet {

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::positive;
    case '-': return Sign::negative;
    case '0': return Sign::zero;
    default: throw ParseError(std::string("bad sign character: ") + c);
  }
}

void Digraph::add_arc(int from, int to) {
  if (from < 1 || from > n || to < 1 || to > n)
    throw InvalidInput("digraph arc out of range");
  auto& row = out[static_cast<size_t>(from)];
  auto it = std::lower_bound(row.begin(), row.end(), to);
  if (it != row.end() && *it == to) throw InvalidInput("duplicate arc in digraph");
  row.insert(it, to);
}

SignedDigraph::SignedDigraph(int n) : n_(n) {
  if (n < 0 || n > caps::kConfigMaxBits)
    throw InvalidInput("vertex count out of range: " + std::to_string(n));
  ins_.resize(static_cast<size_t>(n) + 1);
  outs_.resize(static_cast<size_t>(n) + 1);
}

void SignedDigraph::check_vertex(int i) const {
  if (i < 1 || i > n_) throw InvalidInput("vertex out of range: " + std::to_string(i));
}

void SignedDigraph::add_arc(int from, int to, Sign s) {
  check_vertex(from);
  check_vertex(to);
  auto& row = ins_[static_cast<size_t>(to)];
  auto it = std::lower_bound(row.begin(), row.end(), from,
                             [](const std::pair<int, Sign>& a, int b) { return a.first < b; });
  if (it != row.end() && it->first == from)
    throw InvalidInput("duplicate arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  row.insert(it, {from, s});
  auto& orow = outs_[static_cast<size_t>(from)];
  orow.insert(std::lower_bound(orow.begin(), orow.end(), to), to);
  ++arc_count_;
}

void SignedDigraph::remove_arc(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  auto& row = ins_[static_cast<size_t>(to)];
  auto it = std::find_if(row.begin(), row.end(),
                         [&](const std::pair<int, Sign>& a) { return a.first == from; });
  if (it == row.end()) throw InvalidInput("removing absent arc");
  row.erase(it);
  auto& orow = outs_[static_cast<size_t>(from)];
  orow.erase(std::find(orow.begin(), orow.end(), to));
  --arc_count_;
}

bool SignedDigraph::has_arc(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  const auto& row = ins_[static_cast<size_t>(to)];
  return std::any_of(row.begin(), row.end(),
                     [&](const std::pair<int, Sign>& a) { return a.first == from; });
}

Sign SignedDigraph::sign(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  for (const auto& [j, s] : ins_[static_cast<size_t>(to)])
    if (j == from) return s;
  throw InvalidInput("absent arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
}

std::vector<int> SignedDigraph::in_neighbors(int i) const {
  std::vector<int> r;
  for (const auto& [j, s] : in_arcs(i)) r.push_back(j);
  return r;
}

std::vector<int> SignedDigraph::in_neighbors(int i, Sign s) const {
  std::vector<int> r;
  for (const auto& [j, sj] : in_arcs(i))
    if (sj == s) r.push_back(j);
  return r;
}

int SignedDigraph::in_degree(int i, Sign s) const {
  int c = 0;
  for (const auto& [j, sj] : in_arcs(i))
    if (sj == s) ++c;
  return c;
}

int SignedDigraph::max_in_degree() const {
  int d = 0;
  for (int i = 1; i <= n_; ++i) d = std::max(d, in_degree(i));
  return d;
}

std::vector<Arc> SignedDigraph::arcs() const {
  std::vector<Arc> r;
  r.reserve(static_cast<size_t>(arc_count_));
  for (int i = 1; i <= n_; ++i)
    for (const auto& [j, s] : in_arcs(i)) r.push_back({j, i, s});
  return r;
}

bool SignedDigraph::is_nice() const {
  for (int i = 1; i <= n_; ++i)
    for (const auto& [j, s] : in_arcs(i))
      if (s == Sign::zero) return false;
  return true;
}

bool SignedDigraph::is_full_positive() const {
  for (int i = 1; i <= n_; ++i)
    for (const auto& [j, s] : in_arcs(i))
      if (s != Sign::positive) return false;
  return true;
}

std::pair<SignedDigraph, std::vector<int>> SignedDigraph::induced(std::span<const int> keep) const {
  std::vector<int> old_ids(keep.begin(), keep.end());
  std::sort(old_ids.begin(), old_ids.end());
  old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
  std::vector<int> new_id(static_cast<size_t>(n_) + 1, 0);
  for (int t = 0; t < static_cast<int>(old_ids.size()); ++t) {
    check_vertex(old_ids[static_cast<size_t>(t)]);
    new_id[static_cast<size_t>(old_ids[static_cast<size_t>(t)])] = t + 1;
  }
  SignedDigraph sub(static_cast<int>(old_ids.size()));
  for (int i : old_ids)
    for (const auto& [j, s] : in_arcs(i))
      if (new_id[static_cast<size_t>(j)] != 0)
        sub.add_arc(new_id[static_cast<size_t>(j)], new_id[static_cast<size_t>(i)], s);
  return {std::move(sub), std::move(old_ids)};
}

std::pair<SignedDigraph, std::vector<int>> SignedDigraph::without(std::span<const int> drop) const {
  std::vector<bool> dropped(static_cast<size_t>(n_) + 1, false);
  for (int v : drop) {
    check_vertex(v);
    dropped[static_cast<size_t>(v)] = true;
  }
  std::vector<int> keep;
  for (int v = 1; v <= n_; ++v)
    if (!dropped[static_cast<size_t>(v)]) keep.push_back(v);
  return induced(keep);
}

Digraph SignedDigraph::underlying() const {
  Digraph g(n_);
  for (int i = 1; i <= n_; ++i)
    for (const auto& [j, s] : in_arcs(i)) g.add_arc(j, i);
  return g;
}

const std::string& SignedDigraph::name(int i) const {
  check_vertex(i);
  static const std::string empty;
  if (names_.empty()) return empty;
  return names_[static_cast<size_t>(i)];
}

void SignedDigraph::set_name(int i, std::string name) {
  check_vertex(i);
  if (names_.empty()) names_.resize(static_cast<size_t>(n_) + 1);
  names_[static_cast<size_t>(i)] = std::move(name);
}

SidValidity validate_sid(const SignedDigraph& d) {
  SidValidity r;
  for (int i = 1; i <= d.vertex_count(); ++i) {
    if (d.in_degree(i, Sign::zero) == 1 && d.in_degree(i) < 3) {
      r.valid = false;
      r.offenders.push_back(i);
    }
  }
  return r;
}

namespace {

// Strips comments and returns the significant tokens of the next line.
bool next_line_tokens(std::istream& in, std::vector<std::string>& tokens) {
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

}  // namespace

SignedDigraph parse_sid(std::istream& in) {
  std::vector<std::string> tok;
  if (!next_line_tokens(in, tok) || tok.size() != 2 || tok[0] != "sid")
    throw ParseError("expected header line 'sid <n>'");
  SignedDigraph d(parse_int(tok[1]));
  while (next_line_tokens(in, tok)) {
    if (tok.size() != 3 || tok[2].size() != 1)
      throw ParseError("expected arc line '<j> <i> <s>'");
    int j = parse_int(tok[0]), i = parse_int(tok[1]);
    Sign s = sign_from_char(tok[2][0]);
    try {
      d.add_arc(j, i, s);
    } catch (const InvalidInput& e) {
      throw ParseError(e.what());
    }
  }
  return d;
}

SignedDigraph parse_sid_string(const std::string& text) {
  std::istringstream in(text);
  return parse_sid(in);
}

SignedDigraph load_sid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_sid(in);
}

std::string sid_to_string(const SignedDigraph& d) {
  std::ostringstream out;
  out << "sid " << d.vertex_count() << "\n";
  for (const Arc& a : d.arcs())
    out << a.from << " " << a.to << " " << sign_char(a.sign) << "\n";
  return out.str();
}

void save_sid(const SignedDigraph& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << sid_to_string(d);
}

}  // namespace fixnet
