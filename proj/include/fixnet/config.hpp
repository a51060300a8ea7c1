#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fixnet/base.hpp"

namespace fixnet {

/// A configuration: one bit per vertex of an ordered domain 1..n.
///
/// Vertex ids are 1-based everywhere in the public interface. Values are
/// immutable in spirit; set() exists for construction code.
class Configuration {
 public:
  Configuration() : n_(0) {}
  explicit Configuration(int n) : n_(n) {
    if (n < 0 || n > caps::kConfigMaxBits)
      throw InvalidInput("configuration size out of range: " + std::to_string(n));
  }

  /// Low n bits of `value`, vertex 1 = least significant bit.
  static Configuration from_value(int n, std::uint64_t value) {
    Configuration c(n);
    c.words_[0] = (n >= 64) ? value : (value & ((n == 0) ? 0 : ((~0ULL) >> (64 - n))));
    return c;
  }

  /// One-line notation "x1 x2 ... xn", e.g. "011".
  static Configuration from_string(const std::string& bits);

  int size() const { return n_; }

  bool get(int v) const {
    check_vertex(v);
    return (words_[static_cast<unsigned>(v - 1) >> 6] >> ((v - 1) & 63)) & 1u;
  }

  void set(int v, bool b) {
    check_vertex(v);
    std::uint64_t mask = 1ULL << ((v - 1) & 63);
    if (b)
      words_[static_cast<unsigned>(v - 1) >> 6] |= mask;
    else
      words_[static_cast<unsigned>(v - 1) >> 6] &= ~mask;
  }

  void flip(int v) { set(v, !get(v)); }

  /// Componentwise xor; domains must agree.
  Configuration operator^(const Configuration& o) const {
    require_same_domain(o);
    Configuration r(n_);
    for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] ^ o.words_[w];
    return r;
  }

  /// Base vector e_v.
  static Configuration unit(int n, int v) {
    Configuration c(n);
    c.set(v, true);
    return c;
  }

  bool operator==(const Configuration& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const Configuration& o) const { return !(*this == o); }

  /// Total order used for canonical/deterministic listings: by value with
  /// vertex 1 least significant.
  std::strong_ordering operator<=>(const Configuration& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (int w = kWords - 1; w >= 0; --w)
      if (auto c = words_[w] <=> o.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Componentwise partial order x <= y.
  bool leq(const Configuration& o) const {
    require_same_domain(o);
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool all_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Restriction x_I: configuration over domain 1..|I| following the order
  /// of `domain`.
  Configuration restrict(std::span<const int> domain) const {
    Configuration r(static_cast<int>(domain.size()));
    for (int t = 0; t < static_cast<int>(domain.size()); ++t) r.set(t + 1, get(domain[t]));
    return r;
  }

  /// Extension: overwrite positions listed in `domain` with the bits of
  /// `sub` (which lives over 1..|I|).
  void assign(std::span<const int> domain, const Configuration& sub) {
    if (static_cast<int>(domain.size()) != sub.size())
      throw InvalidInput("assign: domain/value size mismatch");
    for (int t = 0; t < static_cast<int>(domain.size()); ++t) set(domain[t], sub.get(t + 1));
  }

  bool equal_on(const Configuration& o, std::span<const int> domain) const {
    for (int v : domain)
      if (get(v) != o.get(v)) return false;
    return true;
  }

  bool leq_on(const Configuration& o, std::span<const int> domain) const {
    for (int v : domain)
      if (get(v) && !o.get(v)) return false;
    return true;
  }

  /// One-line notation, vertex 1 first.
  std::string to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int v = 1; v <= n_; ++v)
      if (get(v)) s[static_cast<size_t>(v - 1)] = '1';
    return s;
  }

  /// Value as integer, vertex 1 least significant (n <= 64 only).
  std::uint64_t value() const {
    if (n_ > 64) throw InvalidInput("value(): configuration too wide");
    return words_[0];
  }

 private:
  static constexpr int kWords = caps::kConfigMaxBits / 64;

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw InvalidInput("vertex out of range: " + std::to_string(v));
  }
  void require_same_domain(const Configuration& o) const {
    if (n_ != o.n_) throw InvalidInput("configuration domain mismatch");
  }

  int n_;
  std::array<std::uint64_t, kWords> words_{};
};

inline Configuration Configuration::from_string(const std::string& bits) {
  Configuration c(static_cast<int>(bits.size()));
  for (int v = 1; v <= c.size(); ++v) {
    char ch = bits[static_cast<size_t>(v - 1)];
    if (ch != '0' && ch != '1') throw ParseError("bad configuration string: " + bits);
    c.set(v, ch == '1');
  }
  return c;
}

}  // namespace fixnet
