#pragma once

// Principal specialization of the Weyl character: e^theta -> q^{4(rho,theta)}.
//
// f(q) = prod_{a > 0} (q^{2(mu+rho,a)} - q^{-2(mu+rho,a)}) / (q^{2(rho,a)} - q^{-2(rho,a)})
// is a Laurent polynomial with f(1) = dim V_mu and f'(1) = 0. Its second
// logarithmic derivative at q = 1 determines s(V_mu), which gives an oracle
// for the closed form that never touches weight multiplicities.

#include "llv/exact.hpp"
#include "llv/rootsystem.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace llv {

class LaurentPoly {
 public:
  using Map = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Map coeffs);
  static LaurentPoly monomial(std::int64_t exponent, const BigInt& coeff = 1);

  const Map& coefficients() const { return coeffs_; }
  BigInt coefficient(std::int64_t e) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// f(1), f'(1) and f''(1) as exact coefficient sums.
  BigInt value_at_one() const;
  BigInt first_derivative_at_one() const;
  BigInt second_derivative_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

 private:
  void prune();
  Map coeffs_;
};

/// Quotient a / b; throws InternalError unless b divides a exactly in Z[q, 1/q].
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// The d-th cyclotomic polynomial.
LaurentPoly cyclotomic(std::int64_t d);

struct QCharLimits {
  std::size_t max_rank = 12;
  std::uint64_t max_dimension = 10'000'000;
};

/// f(q) for V_mu. For type D with mu_r < 0 the reflected weight is used.
LaurentPoly principal_character(const RootSystem& rs, const Weight& mu,
                                const QCharLimits& limits = {});

/// (log f)''(1) = f''(1)/f(1), using f'(1) = 0.
Rational logf_dd_from_poly(const LaurentPoly& f);
/// (4/3) b [ (sum mu_i) b + sum (mu_i^2 - 2 i mu_i) ] for mu_r >= 0.
Rational logf_dd_closed(const Weight& mu, std::int64_t b2);
/// s(V_mu) = 6 / (b(b+1)(b+2)) * (log f)''(1), with f from principal_character.
Rational s_via_qchar(const Weight& mu, std::int64_t b2, const QCharLimits& limits = {});

/// Taylor coefficients c_0..c_order of log((q^a - q^{-a})/(q-1)) around q = 1,
/// in powers of (q-1), except c_0 which is returned as 0 (it is log(2a)).
std::vector<Rational> log_qint_taylor(std::int64_t a, std::size_t order);

}  // namespace llv
