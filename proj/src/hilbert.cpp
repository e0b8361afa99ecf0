#include "bettiforge/hilbert.hpp"

#include <algorithm>

namespace bettiforge {

long long graded_dim(int a, int k, int nvars) {
  long long m = static_cast<long long>(k) + a;
  if (m < 0) return 0;
  // binom(m + n - 1, n - 1), exact in 64 bits at desk scale.
  long long num = 1;
  for (int i = 1; i < nvars; ++i) num = num * (m + i) / i;
  return num;
}

long long hilbert_function_from_resolution(const BettiData& betti, int k) {
  return hilbert_function(modules_from_betti(betti), betti.nvars, k);
}

std::string to_string(SigmaDimension s) {
  switch (s) {
    case SigmaDimension::kEmpty: return "empty";
    case SigmaDimension::kZero: return "zero";
    case SigmaDimension::kOne: return "one";
    case SigmaDimension::kTwoOrMore: return "two_or_more";
  }
  return "unknown";
}

BettiSums betti_sums(const BettiData& betti) {
  BettiSums s;
  long long e = betti.degree - 1;
  s.q2 = e * e;
  auto add = [&](const std::vector<int>& seq, int sign) {
    for (long long v : seq) {
      s.linear += sign * v;
      s.q2 += sign * v * v;
      s.q3 += sign * v * v * v;
    }
  };
  add(betti.d, 1);
  add(betti.c, -1);
  add(betti.b, 1);
  return s;
}

namespace {

bool identities_hold(const BettiData& b) {
  return b.p() + b.r() == b.q() + 3 && betti_sums(b).linear == b.degree - 1;
}

bool smooth_pattern(const BettiData& b) {
  int e = b.degree - 1;
  return b.d == std::vector<int>(6, e) && b.c == std::vector<int>(4, 2 * e) && b.b == std::vector<int>{3 * e};
}

int max_shift(const BettiData& b) {
  int m = 0;
  for (const auto* seq : {&b.d, &b.c, &b.b})
    for (int v : *seq) m = std::max(m, v);
  return b.degree - 1 + m;
}

}  // namespace

mpq_class evaluate(const HilbertPolynomial& hp, long long u) {
  if (hp.tau) return mpq_class(static_cast<long>(*hp.tau));
  if (hp.A && hp.B) return ratio(*hp.A, 2) * mpq_class(static_cast<long>(u)) - *hp.B;
  throw DomainError("no Hilbert polynomial for this classification");
}

HilbertPolynomial hilbert_data(const BettiData& betti) {
  HilbertPolynomial hp;
  if (betti.nvars != 4) throw DomainError("surface Hilbert data needs Betti data in four variables");
  if (!identities_hold(betti)) return hp;
  auto s = betti_sums(betti);
  long long d = betti.degree, e = d - 1;
  if (s.q2 == 0) {
    long long six_tau = e * e * e - s.q3;
    hp.tau = six_tau / 6;
    hp.B_integral = six_tau % 6 == 0;
    hp.sigma = smooth_pattern(betti) ? SigmaDimension::kEmpty : SigmaDimension::kZero;
  } else {
    hp.sigma = SigmaDimension::kOne;
    hp.A = s.q2;
    hp.A_even = s.q2 % 2 == 0;
    long long sq = s.q2 - e * e;
    hp.B = ratio(d * (d - 3) * (d - 3) - 4, 3) + ratio(d - 3, 2) * mpq_class(static_cast<long>(sq)) + ratio(s.q3, 6);
    hp.B->canonicalize();
    hp.B_integral = hp.B->get_den() == 1;
  }
  hp.scan_bound = max_shift(betti) + 2;
  for (int k = hp.scan_bound; k >= 0; --k) {
    if (mpq_class(static_cast<long>(hilbert_function_from_resolution(betti, k))) != evaluate(hp, k)) break;
    hp.k0 = k;
  }
  return hp;
}

HilbertPolynomial classify_and_polynomial(const BettiData& betti) {
  auto hp = hilbert_data(betti);
  if (hp.sigma == SigmaDimension::kTwoOrMore) throw NonReducedInput("input not reduced (dim Sigma >= 2)");
  return hp;
}

std::array<mpz_class, 4> dimension_coefficients(const BettiData& betti) {
  mpz_class d = betti.degree;
  const auto &ds = betti.d, &cs = betti.c, &bs = betti.b;
  mpz_class cubic = betti.p() - betti.q() + betti.r() - 3;

  mpz_class quad = d - 1;
  for (int i = 0; i < betti.p(); ++i) quad -= i < 3 ? mpz_class(ds[static_cast<std::size_t>(i)]) : mpz_class(ds[static_cast<std::size_t>(i)] - 2);
  for (int c : cs) quad += c - 2;
  for (int b : bs) quad -= b - 2;
  quad *= 3;

  auto lin_term = [](const mpz_class& v) -> mpz_class { return 3 * v * v - 12 * v + 11; };
  auto const_term = [](const mpz_class& v) -> mpz_class { return v * v * v - 6 * v * v + 11 * v - 6; };
  mpz_class lin = 3 * d * d + 6 * d + 2 - 44;
  mpz_class cst = d * d * d + 3 * d * d + 2 * d - 24;
  for (int v : ds) lin += lin_term(v), cst -= const_term(v);
  for (int v : cs) lin -= lin_term(v), cst += const_term(v);
  for (int v : bs) lin += lin_term(v), cst -= const_term(v);
  return {cubic, quad, lin, cst};
}

}  // namespace bettiforge
