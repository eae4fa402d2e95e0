#pragma once

// The invariant s(W), its generating series, Salamon's relation, the weight
// condition sum mu_i (last taken in absolute value) <= n, and the resulting
// bounds on b2.

#include "llv/exact.hpp"
#include "llv/repcalc.hpp"
#include "llv/rootsystem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace llv {

struct Term {
  Weight mu;
  BigInt mult;
};

/// A claimed decomposition H*(X) = sum V_mu^{mult} for dim X = 2n.
struct Decomposition {
  std::int64_t n = 0;
  std::int64_t b2 = 0;
  std::vector<Term> terms;

  /// Checks n >= 1, mult >= 1 and dominance of every mu; throws otherwise.
  void validate() const;
  /// True when (n,0,...,0) occurs with multiplicity exactly 1.
  bool has_verbitsky_component() const;
};

BigInt signed_euler(const GradedProfile& p);
/// sum_k (-1)^k k^2 dim W_k.
BigInt signed_second_moment(const GradedProfile& p);
Rational s_of_profile(const GradedProfile& p);

/// Even coefficients s_0, s_2, ... of S(W) = sum (-1)^k dim W_k exp(kt).
struct SSeries {
  std::vector<Rational> even;  // even[j] is the coefficient of t^(2j)

  Rational coefficient(std::size_t i) const;
  std::size_t order() const { return even.empty() ? 0 : 2 * (even.size() - 1); }
};

SSeries s_series(const GradedProfile& p, std::int64_t order);
/// Truncated product of two series, up to the smaller of their orders.
SSeries series_product(const SSeries& a, const SSeries& b);

/// Closed form of s(V_mu); the last coordinate is reflected first when negative.
Rational s_closed(const Weight& mu, std::int64_t b2);

/// Signed Euler characteristic and signed second moment of a decomposition,
/// from Weyl dimensions and the closed form (no orbit enumeration).
struct Moments {
  BigInt euler;
  BigInt second_moment;
  bool mixed_parity = false;
};
Moments decomposition_moments(const Decomposition& d);
Rational s_of_decomposition(const Decomposition& d);

struct SalamonVerdict {
  /// false when e(X) = 0 and only the raw moment identity was checked
  bool s_form_applicable = true;
  Rational lhs;  // s(H*) or, when inapplicable, the signed second moment
  Rational rhs;  // n/3 or, when inapplicable, (n/3) e(X) = 0
  bool pass = false;
  bool mixed_parity = false;
  std::vector<std::string> warnings;
};
SalamonVerdict salamon_check(const Decomposition& d);

struct TermVerdict {
  Weight mu;
  Rational sum;
  bool pass = false;
};
struct ConjectureVerdict {
  std::vector<TermVerdict> terms;
  bool pass = true;
};
ConjectureVerdict conjecture_check(const Decomposition& d);

/// b_0, ..., b_{4n}.
std::vector<BigInt> betti_numbers(const Decomposition& d,
                                  std::uint64_t orbit_ceiling = kDefaultOrbitCeiling);

/// n - k/2 + r/2 for odd 0 < k < 2n.
Rational odd_weight_floor(std::int64_t n, std::int64_t k, std::int64_t r);

/// Largest b2 allowed in dimension 2n; with odd cohomology in degree odd_k it is 2*odd_k + 1.
std::int64_t b2_bound(std::int64_t n, std::optional<std::int64_t> odd_k = std::nullopt);
/// floor((21 + isqrt(96n + 433))/2), kept as an independent cross-check.
std::int64_t b2_bound_isqrt(std::int64_t n);

struct BoundRow {
  std::int64_t n;
  std::int64_t even_bound;
  std::int64_t odd_bound;  // 4n - 1
  std::int64_t unconditional;
};
std::vector<BoundRow> bound_table(std::int64_t n_max);

}  // namespace llv
