#include "llv/qchar.hpp"

#include <algorithm>

namespace llv {

LaurentPoly::LaurentPoly(Map coeffs) : coeffs_(std::move(coeffs)) { prune(); }

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, const BigInt& coeff) {
  return LaurentPoly(Map{{exponent, coeff}});
}

void LaurentPoly::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

BigInt LaurentPoly::coefficient(std::int64_t e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
  return coeffs_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

BigInt LaurentPoly::first_derivative_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : coeffs_) s += c * big(e);
  return s;
}

BigInt LaurentPoly::second_derivative_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : coeffs_) s += c * big(e) * big(e - 1);
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] -= c;
  prune();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Map out;
  for (const auto& [i, x] : a.coeffs_) {
    for (const auto& [j, y] : b.coeffs_) out[i + j] += x * y;
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InternalError("division by the zero Laurent polynomial");
  if (a.is_zero()) return {};
  const std::int64_t b_top = b.max_exponent();
  const BigInt lead = b.coefficient(b_top);
  LaurentPoly rem = a;
  LaurentPoly::Map quot;
  while (!rem.is_zero() && rem.max_exponent() - b_top >= a.min_exponent() - b.min_exponent()) {
    const std::int64_t top = rem.max_exponent();
    const BigInt c = rem.coefficient(top);
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) break;
    const LaurentPoly step = LaurentPoly::monomial(top - b_top, c / lead);
    quot[top - b_top] += c / lead;
    rem -= step * b;
  }
  if (!rem.is_zero()) throw InternalError("Laurent polynomial division is not exact");
  return LaurentPoly(std::move(quot));
}

namespace {

int moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

LaurentPoly q_power_minus_one(std::int64_t e) {
  return LaurentPoly(LaurentPoly::Map{{e, BigInt(1)}, {0, BigInt(-1)}});
}

}  // namespace

LaurentPoly cyclotomic(std::int64_t d) {
  if (d < 1) throw InvalidInput("cyclotomic index must be positive");
  LaurentPoly num = LaurentPoly::monomial(0), den = LaurentPoly::monomial(0);
  for (std::int64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int m = moebius(d / e);
    if (m == 1) num = num * q_power_minus_one(e);
    if (m == -1) den = den * q_power_minus_one(e);
  }
  return divide_exact(num, den);
}

LaurentPoly principal_character(const RootSystem& rs, const Weight& mu, const QCharLimits& limits) {
  require_dominant(rs, mu);
  if (rs.rank() > limits.max_rank) {
    throw CeilingExceeded("principal character refuses rank " + std::to_string(rs.rank()) +
                          " above " + std::to_string(limits.max_rank));
  }
  const BigInt dim = weyl_dimension(rs, mu);
  if (dim > BigInt(static_cast<unsigned long>(limits.max_dimension))) {
    throw CeilingExceeded("principal character refuses dim V = " + dim.get_str() + " above " +
                          std::to_string(limits.max_dimension));
  }
  const Weight w = mu.twice(mu.size() - 1) < 0 ? reflect_last(mu) : mu;

  const auto& rho = rs.rho().coords2();
  Coords2 shifted(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) shifted[i] = w.twice(i) + rho[i];

  // Each factor is q^{C-A} [2A]_q / [2C]_q with A = 2(mu+rho,a), C = 2(rho,a).
  // [n]_q is the product of Phi_d for d | n, d > 1, so the whole quotient is a
  // product of cyclotomic polynomials with net non-negative exponents.
  std::map<std::int64_t, std::int64_t> cyclo;
  std::int64_t shift = 0;
  for (const auto& root : rs.positive_roots()) {
    const std::int64_t p4 = pairing4(shifted, root.coords2());
    const std::int64_t c4 = pairing4(rho, root.coords2());
    if (p4 % 2 != 0 || c4 % 2 != 0) {
      throw InternalError("character exponent 2(mu+rho,a) or 2(rho,a) is not an integer");
    }
    const std::int64_t a = p4 / 2, c = c4 / 2;
    if (a <= 0 || c <= 0) throw InternalError("non-positive character exponent");
    shift += c - a;
    for (std::int64_t d = 2; d <= 2 * a; ++d) {
      if ((2 * a) % d == 0) ++cyclo[d];
    }
    for (std::int64_t d = 2; d <= 2 * c; ++d) {
      if ((2 * c) % d == 0) --cyclo[d];
    }
  }

  LaurentPoly f = LaurentPoly::monomial(shift);
  for (const auto& [d, count] : cyclo) {
    if (count < 0) throw InternalError("Weyl character quotient is not a Laurent polynomial");
    if (count == 0) continue;
    const LaurentPoly phi = cyclotomic(d);
    for (std::int64_t i = 0; i < count; ++i) f = f * phi;
  }

  for (const auto& [e, c] : f.coefficients()) {
    if (c < 0) throw InternalError("principal character has a negative coefficient");
  }
  if (f.value_at_one() != dim) {
    throw InternalError("f(1) disagrees with the Weyl dimension for " + to_string(mu));
  }
  return f;
}

Rational logf_dd_from_poly(const LaurentPoly& f) {
  const BigInt at_one = f.value_at_one();
  if (at_one == 0) throw DomainError("log f is singular at q = 1 (f(1) = 0)");
  if (f.first_derivative_at_one() != 0) {
    throw InternalError("f'(1) != 0: the character is not Weyl-symmetric");
  }
  return make_rational(f.second_derivative_at_one(), at_one);
}

Rational logf_dd_closed(const Weight& mu, std::int64_t b2) {
  const RootSystem rs = build_root_system(b2);
  require_dominant(rs, mu);
  if (mu.twice(mu.size() - 1) < 0) {
    throw DomainError("closed form needs mu_r >= 0; reflect " + to_string(mu) + " first");
  }
  Rational sum = 0, quad = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Rational x = mu.coord(i);
    sum += x;
    quad += x * x - 2 * Rational(static_cast<long>(i)) * x;
  }
  const Rational b = static_cast<long>(b2);
  Rational v = Rational(4, 3) * b * (sum * b + quad);
  v.canonicalize();
  return v;
}

Rational s_via_qchar(const Weight& mu, std::int64_t b2, const QCharLimits& limits) {
  const RootSystem rs = build_root_system(b2);
  const Rational dd = logf_dd_from_poly(principal_character(rs, mu, limits));
  const Rational b = static_cast<long>(b2);
  Rational s = 6 * dd / (b * (b + 1) * (b + 2));
  s.canonicalize();
  return s;
}

std::vector<Rational> log_qint_taylor(std::int64_t a, std::size_t order) {
  if (a < 1) throw InvalidInput("q-integer exponent must be positive");
  // g(x) = ((1+x)^a - (1+x)^{-a}) / x with q = 1 + x.
  std::vector<Rational> g(order + 1);
  for (std::size_t j = 0; j <= order; ++j) {
    const unsigned long k = j + 1;
    BigInt up, down;
    mpz_bin_uiui(up.get_mpz_t(), static_cast<unsigned long>(a), k);
    mpz_bin_uiui(down.get_mpz_t(), static_cast<unsigned long>(a) + k - 1, k);
    BigInt coeff = up;
    if (k % 2 == 0) coeff -= down;
    else coeff += down;
    g[j] = Rational(coeff);
  }
  // log g = log g_0 + log(1 + u), u = g / g_0 - 1.
  std::vector<Rational> u(order + 1);
  for (std::size_t j = 1; j <= order; ++j) u[j] = g[j] / g[0];
  std::vector<Rational> out(order + 1), power = u;
  for (std::size_t m = 1; m <= order; ++m) {
    const Rational w = Rational(m % 2 == 1 ? 1 : -1, static_cast<unsigned long>(m));
    for (std::size_t j = 0; j <= order; ++j) out[j] += w * power[j];
    std::vector<Rational> next(order + 1);
    for (std::size_t i = 1; i <= order; ++i) {
      for (std::size_t j = 1; i + j <= order; ++j) next[i + j] += power[i] * u[j];
    }
    power = std::move(next);
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

}  // namespace llv
