#pragma once

#include <array>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "bettiforge/resolution.hpp"

namespace bettiforge {

/// dim S_{k+a} = binom(k+a+n-1, n-1), zero in negative degree.
long long graded_dim(int a, int k, int nvars = 4);

/// dim M(f)_k read off the resolution encoded by the Betti data.
long long hilbert_function_from_resolution(const BettiData& betti, int k);

enum class SigmaDimension { kEmpty, kZero, kOne, kTwoOrMore };
std::string to_string(SigmaDimension s);

/// Power sums of the resolution degrees.
struct BettiSums {
  long long linear = 0;  // sum d_i - sum c_j + sum b_k
  long long q2 = 0;      // (d-1)^2 + sum d_i^2 - sum c_j^2 + sum b_k^2
  long long q3 = 0;      // sum d_i^3 - sum c_j^3 + sum b_k^3
};
BettiSums betti_sums(const BettiData& betti);

struct HilbertPolynomial {
  SigmaDimension sigma = SigmaDimension::kTwoOrMore;
  std::optional<long long> tau;  // sigma empty or zero
  std::optional<long long> A;    // sigma one: P(u) = (A/2) u - B
  std::optional<mpq_class> B;
  bool A_even = true;
  bool B_integral = true;
  /// Smallest k from which H(k) = P(k) on the sampled range; -1 if
  /// H and P never agree up to the scan bound.
  int k0 = -1;
  int scan_bound = 0;
};

/// Classification and Hilbert polynomial from Betti data of a surface.
/// Returns sigma = kTwoOrMore (no polynomial) when the count or linear
/// identity fails.
HilbertPolynomial hilbert_data(const BettiData& betti);

/// Input fails the identities expected of a reduced surface (or the
/// Hilbert polynomial of a curve is not constant).  Carries what was
/// computed before the failure.
class NonReducedInput : public Error {
 public:
  explicit NonReducedInput(const std::string& what, std::optional<BettiData> betti = std::nullopt,
                           std::string resolution_text = {})
      : Error(what), betti_(std::move(betti)), resolution_text_(std::move(resolution_text)) {}
  const std::optional<BettiData>& betti() const noexcept { return betti_; }
  const std::string& resolution_text() const noexcept { return resolution_text_; }

 private:
  std::optional<BettiData> betti_;
  std::string resolution_text_;
};

/// As hilbert_data, but identity failure raises NonReducedInput.
HilbertPolynomial classify_and_polynomial(const BettiData& betti);

/// n / d in lowest terms.
inline mpq_class ratio(long long n, long long d) {
  mpq_class q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

/// The value of P at u, as an exact rational.
mpq_class evaluate(const HilbertPolynomial& hp, long long u);

/// Coefficients (s^3, s^2, s, 1) of 6 dim M(f)_{s+d-1} for large s,
/// evaluated term by term from the Betti data.
std::array<mpz_class, 4> dimension_coefficients(const BettiData& betti);

}  // namespace bettiforge
