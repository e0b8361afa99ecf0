#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>

#include "bettiforge/errors.hpp"

namespace bettiforge {

/// Packed exponent vector for up to five variables.
///
/// Layout (most significant first): 16-bit total degree, then 12-bit
/// exponents of variables 4, 3, 2, 1.  The exponent of variable 0 is
/// implied by the degree.  Multiplication is word addition, and the
/// degrevlex order (x0 > x1 > ...) is the unsigned order of the word
/// with the low 48 bits inverted.
class Monomial {
 public:
  static constexpr int kMaxVars = 5;
  static constexpr int kExpBits = 12;
  static constexpr int kMaxExponent = (1 << kExpBits) - 1;

  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
      throw DomainError("too many variables in monomial");
    std::uint64_t bits = 0;
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > kMaxExponent) throw DomainError("exponent out of range");
      deg += static_cast<std::uint64_t>(exps[i]);
      if (i > 0) bits |= static_cast<std::uint64_t>(exps[i]) << (kExpBits * (i - 1));
    }
    if (deg > 0xFFFF) throw DomainError("monomial degree out of range");
    return Monomial(bits | (deg << 48));
  }

  static Monomial variable(int i, int power = 1) {
    if (power < 0 || power > kMaxExponent) throw DomainError("exponent out of range");
    auto p = static_cast<std::uint64_t>(power);
    if (i == 0) return Monomial(p << 48);
    return Monomial((p << 48) | (p << (kExpBits * (i - 1))));
  }

  constexpr int degree() const { return static_cast<int>(bits_ >> 48); }
  constexpr bool is_one() const { return bits_ == 0; }

  int exponent(int i) const {
    if (i > 0) return static_cast<int>((bits_ >> (kExpBits * (i - 1))) & kMaxExponent);
    int rest = 0;
    for (int k = 0; k < kMaxVars - 1; ++k) rest += static_cast<int>((bits_ >> (kExpBits * k)) & kMaxExponent);
    return degree() - rest;
  }

  constexpr Monomial operator*(Monomial o) const { return Monomial(bits_ + o.bits_); }
  /// Exact quotient; requires o.divides(*this).
  constexpr Monomial operator/(Monomial o) const { return Monomial(bits_ - o.bits_); }

  bool divides(Monomial o) const {
    if (degree() > o.degree()) return false;
    int sa = 0, sb = 0;
    for (int k = 0; k < kMaxVars - 1; ++k) {
      int ea = static_cast<int>((bits_ >> (kExpBits * k)) & kMaxExponent);
      int eb = static_cast<int>((o.bits_ >> (kExpBits * k)) & kMaxExponent);
      if (ea > eb) return false;
      sa += ea;
      sb += eb;
    }
    return degree() - sa <= o.degree() - sb;
  }

  static Monomial lcm(Monomial a, Monomial b) {
    std::uint64_t bits = 0;
    int sa = 0, sb = 0, s = 0;
    for (int k = 0; k < kMaxVars - 1; ++k) {
      int ea = static_cast<int>((a.bits_ >> (kExpBits * k)) & kMaxExponent);
      int eb = static_cast<int>((b.bits_ >> (kExpBits * k)) & kMaxExponent);
      int e = ea > eb ? ea : eb;
      sa += ea;
      sb += eb;
      s += e;
      bits |= static_cast<std::uint64_t>(e) << (kExpBits * k);
    }
    int x0a = a.degree() - sa, x0b = b.degree() - sb;
    s += x0a > x0b ? x0a : x0b;
    return Monomial(bits | (static_cast<std::uint64_t>(s) << 48));
  }

  static Monomial gcd(Monomial a, Monomial b) {
    std::uint64_t bits = 0;
    int sa = 0, sb = 0, s = 0;
    for (int k = 0; k < kMaxVars - 1; ++k) {
      int ea = static_cast<int>((a.bits_ >> (kExpBits * k)) & kMaxExponent);
      int eb = static_cast<int>((b.bits_ >> (kExpBits * k)) & kMaxExponent);
      int e = ea < eb ? ea : eb;
      sa += ea;
      sb += eb;
      s += e;
      bits |= static_cast<std::uint64_t>(e) << (kExpBits * k);
    }
    int x0a = a.degree() - sa, x0b = b.degree() - sb;
    s += x0a < x0b ? x0a : x0b;
    return Monomial(bits | (static_cast<std::uint64_t>(s) << 48));
  }

  static bool coprime(Monomial a, Monomial b) { return gcd(a, b).is_one(); }

  /// Degrevlex sort key: a > b in the monomial order iff key(a) > key(b).
  constexpr std::uint64_t order_key() const { return bits_ ^ kLowMask; }
  constexpr std::uint64_t raw() const { return bits_; }
  static constexpr Monomial from_raw(std::uint64_t bits) { return Monomial(bits); }

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    return a.order_key() <=> b.order_key();
  }

 private:
  static constexpr std::uint64_t kLowMask = (std::uint64_t{1} << 48) - 1;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

}  // namespace bettiforge

template <>
struct std::hash<bettiforge::Monomial> {
  std::size_t operator()(bettiforge::Monomial m) const noexcept {
    std::uint64_t x = m.raw() * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};
