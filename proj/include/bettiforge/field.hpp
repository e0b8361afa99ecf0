#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "bettiforge/errors.hpp"

namespace bettiforge {

/// Exact rational numbers.  mpq_class keeps every value in lowest terms
/// with a positive denominator.
struct RationalField {
  using Elem = mpq_class;
  static constexpr bool kModular = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_integer(const mpz_class& v) const { return Elem(v); }
  Elem from_int(long v) const { return Elem(v); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw DomainError("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  // acc -= a * b
  void sub_mul(Elem& acc, const Elem& a, const Elem& b) const { acc -= a * b; }

  bool operator==(const RationalField&) const { return true; }
  std::string name() const { return "Q"; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  /// Rational reconstruction is not needed here; the value is the value.
  mpq_class to_rational(const Elem& a) const { return a; }
};

/// GF(p) for a prime p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool kModular = true;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
      throw DomainError("GF(p) needs an odd prime p < 2^31, got " + std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r.get_ui());
  }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero in GF(p)");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return static_cast<Elem>(t < 0 ? t + p_ : t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  void sub_mul(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  /// Symmetric representative in (-p/2, p/2], which reparses to the same residue.
  std::string to_string(Elem a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  mpq_class to_rational(Elem a) const {
    if (a > p_ / 2) return mpq_class(-static_cast<long>(p_ - a));
    return mpq_class(static_cast<unsigned long>(a));
  }

 private:
  static bool is_prime(std::uint32_t n) {
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return n >= 2;
  }

  std::uint32_t p_;
};

}  // namespace bettiforge
