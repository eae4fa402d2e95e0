#include "llv/llvcalc.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>

namespace llv {

void Decomposition::validate() const {
  if (n < 1) throw InvalidInput("n must be at least 1, got " + std::to_string(n));
  const RootSystem rs = build_root_system(b2);
  for (const auto& t : terms) {
    require_dominant(rs, t.mu);
    if (t.mult < 1) {
      throw InvalidInput("multiplicity of V" + to_string(t.mu) + " must be positive");
    }
  }
}

bool Decomposition::has_verbitsky_component() const {
  const Weight verbitsky = Weight::leading(static_cast<std::size_t>(b2 / 2 + 1), n);
  BigInt mult = 0;
  for (const auto& t : terms) {
    if (t.mu == verbitsky) mult += t.mult;
  }
  return mult == 1;
}

BigInt signed_euler(const GradedProfile& p) {
  BigInt e = 0;
  for (const auto& [k, d] : p.dims()) {
    if (k % 2 == 0) e += d;
    else e -= d;
  }
  return e;
}

BigInt signed_second_moment(const GradedProfile& p) {
  BigInt m = 0;
  for (const auto& [k, d] : p.dims()) {
    BigInt term = d * big(k) * big(k);
    if (k % 2 == 0) m += term;
    else m -= term;
  }
  return m;
}

Rational s_of_profile(const GradedProfile& p) {
  const BigInt e = signed_euler(p);
  if (e == 0) {
    throw UndefinedInvariant("s(W) is undefined: sum_k (-1)^k dim W_k vanishes");
  }
  return make_rational(signed_second_moment(p), e);
}

Rational SSeries::coefficient(std::size_t i) const {
  if (i % 2 == 1 || i / 2 >= even.size()) return Rational(0);
  return even[i / 2];
}

SSeries s_series(const GradedProfile& p, std::int64_t order) {
  if (order < 0 || order % 2 != 0) {
    throw InvalidInput("series order must be a non-negative even integer, got " +
                       std::to_string(order));
  }
  SSeries out;
  BigInt factorial = 1;
  for (std::int64_t i = 0; i <= order; ++i) {
    if (i > 0) factorial *= static_cast<unsigned long>(i);
    BigInt acc = 0;
    for (const auto& [k, d] : p.dims()) {
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), big(k).get_mpz_t(), static_cast<unsigned long>(i));
      if (k % 2 == 0) acc += power * d;
      else acc -= power * d;
    }
    if (i % 2 == 1) {
      if (acc != 0) {
        throw DomainError("odd coefficient of S(W) is nonzero; the profile is not symmetric");
      }
      continue;
    }
    out.even.push_back(make_rational(acc, factorial));
  }
  return out;
}

SSeries series_product(const SSeries& a, const SSeries& b) {
  const std::size_t len = std::min(a.even.size(), b.even.size());
  SSeries out;
  out.even.assign(len, Rational(0));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) out.even[i + j] += a.even[i] * b.even[j];
  }
  return out;
}

Rational s_closed(const Weight& mu, std::int64_t b2) {
  const RootSystem rs = build_root_system(b2);
  require_dominant(rs, mu);
  const Weight w = mu.twice(mu.size() - 1) < 0 ? reflect_last(mu) : mu;
  Rational coord_sum = 0, shifted = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Rational x = w.coord(i);
    const Rational idx = static_cast<long>(i);
    coord_sum += x;
    shifted += (x - idx) * (x - idx) - idx * idx;
  }
  const Rational b = static_cast<long>(b2);
  Rational s = 8 * (coord_sum * b + shifted) / ((b + 1) * (b + 2));
  s.canonicalize();
  return s;
}

Moments decomposition_moments(const Decomposition& d) {
  d.validate();
  const RootSystem rs = build_root_system(d.b2);
  const auto count = static_cast<std::int64_t>(d.terms.size());
  std::vector<BigInt> euler(d.terms.size()), moment(d.terms.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) try {
    const auto& t = d.terms[static_cast<std::size_t>(i)];
    const BigInt dim = weyl_dimension(rs, t.mu);
    const BigInt sign = t.mu.parity() == Parity::Even ? 1 : -1;
    const Rational m = s_closed(t.mu, d.b2) * Rational(dim);
    if (m.get_den() != 1) throw InternalError("k^2-moment of an irreducible is not an integer");
    euler[static_cast<std::size_t>(i)] = t.mult * sign * dim;
    moment[static_cast<std::size_t>(i)] = t.mult * sign * m.get_num();
  } catch (...) {
#pragma omp critical(llv_moments_failure)
    if (!failure) failure = std::current_exception();
  }
  if (failure) std::rethrow_exception(failure);

  Moments out;
  bool seen_even = false, seen_odd = false;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    out.euler += euler[i];
    out.second_moment += moment[i];
    (d.terms[i].mu.parity() == Parity::Even ? seen_even : seen_odd) = true;
  }
  out.mixed_parity = seen_even && seen_odd;
  return out;
}

Rational s_of_decomposition(const Decomposition& d) {
  const Moments m = decomposition_moments(d);
  if (m.euler == 0) {
    throw UndefinedInvariant("s(H*) is undefined: the signed Euler characteristic vanishes");
  }
  const Rational s = make_rational(m.second_moment, m.euler);
  if (!m.mixed_parity && !d.terms.empty()) {
    Rational lo = s_closed(d.terms.front().mu, d.b2), hi = lo;
    for (const auto& t : d.terms) {
      const Rational v = s_closed(t.mu, d.b2);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (s < lo || s > hi) throw InternalError("s of a direct sum escaped its min/max sandwich");
  }
  return s;
}

SalamonVerdict salamon_check(const Decomposition& d) {
  const Moments m = decomposition_moments(d);
  SalamonVerdict v;
  v.mixed_parity = m.mixed_parity;
  if (m.mixed_parity) {
    v.warnings.emplace_back(
        "decomposition mixes even and odd modules; s is taken over the full signed sum");
  }
  if (!d.has_verbitsky_component()) {
    v.warnings.emplace_back("Verbitsky component V(" + std::to_string(d.n) +
                            ") does not occur with multiplicity 1");
  }
  const Rational third = make_rational(d.n, 3);
  if (m.euler != 0) {
    v.lhs = make_rational(m.second_moment, m.euler);
    v.rhs = third;
  } else {
    v.s_form_applicable = false;
    v.warnings.emplace_back("Salamon relation in s-form inapplicable (e(X)=0)");
    v.lhs = Rational(m.second_moment);
    v.rhs = third * Rational(m.euler);
  }
  v.pass = v.lhs == v.rhs;
  return v;
}

ConjectureVerdict conjecture_check(const Decomposition& d) {
  ConjectureVerdict out;
  const Rational n = static_cast<long>(d.n);
  for (const auto& t : d.terms) {
    TermVerdict tv{t.mu, absolute_coordinate_sum(t.mu), false};
    tv.pass = tv.sum <= n;
    out.pass = out.pass && tv.pass;
    out.terms.push_back(std::move(tv));
  }
  return out;
}

namespace {

bool is_leading(const Weight& mu) {
  const auto& c = mu.coords2();
  return c[0] % 2 == 0 && std::all_of(c.begin() + 1, c.end(), [](auto x) { return x == 0; });
}

GradedProfile term_profile(const RootSystem& rs, const Weight& mu, std::uint64_t ceiling) {
  if (is_leading(mu)) return verbitsky_profile(mu.twice(0) / 2, rs.b2());
  BigInt projected = 0;
  for (const auto& lambda : dominant_weights_below(rs, mu)) projected += orbit_size(rs, lambda);
  try {
    if (projected > BigInt(static_cast<unsigned long>(ceiling))) {
      throw CeilingExceeded("V" + to_string(mu) + " needs " + projected.get_str() +
                            " orbit weights");
    }
    return graded_profile(rs, freudenthal(rs, mu), ceiling);
  } catch (const CeilingExceeded& e) {
    throw CeilingExceeded(std::string(e.what()) +
                          "; profile ceiling exceeded, use harmonic-only decomposition "
                          "(terms of the form (m)) or raise --orbit-ceiling");
  }
}

}  // namespace

std::vector<BigInt> betti_numbers(const Decomposition& d, std::uint64_t orbit_ceiling) {
  d.validate();
  const RootSystem rs = build_root_system(d.b2);
  std::vector<BigInt> betti(static_cast<std::size_t>(4 * d.n + 1), BigInt(0));
  for (const auto& t : d.terms) {
    const GradedProfile p = term_profile(rs, t.mu, orbit_ceiling);
    for (const auto& [k, dim] : p.dims()) {
      if (std::abs(k) > 2 * d.n) {
        throw DomainError("V" + to_string(t.mu) + " has h-eigenvalue " + std::to_string(k) +
                          " outside the cohomological range of dimension " +
                          std::to_string(2 * d.n));
      }
      betti[static_cast<std::size_t>(2 * d.n + k)] += t.mult * dim;
    }
  }
  return betti;
}

Rational odd_weight_floor(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (k % 2 == 0 || k <= 0 || k >= 2 * n) {
    throw DomainError("k must be odd with 0 < k < 2n, got k = " + std::to_string(k));
  }
  return Rational(static_cast<long>(n)) - make_rational(k, 2) + make_rational(r, 2);
}

namespace {

// b^2 - 21 b + 2 - 24 n
BigInt bound_quadratic(const BigInt& b, std::int64_t n) { return b * b - 21 * b + 2 - 24 * big(n); }

}  // namespace

std::int64_t b2_bound_isqrt(std::int64_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  BigInt root;
  const BigInt disc = 96 * big(n) + 433;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  return BigInt((21 + root) / 2).get_si();
}

std::int64_t b2_bound(std::int64_t n, std::optional<std::int64_t> odd_k) {
  if (n < 1) throw DomainError("n must be at least 1, got " + std::to_string(n));
  if (odd_k) {
    const std::int64_t k = *odd_k;
    if (k % 2 == 0 || k <= 0 || k >= 2 * n) {
      throw DomainError("odd degree k must be odd with 0 < k < 2n, got " + std::to_string(k));
    }
    return 2 * k + 1;
  }
  // The quadratic is increasing past its vertex at 21/2; bisect on its sign.
  BigInt lo = 11, hi = 24 * big(n) + 22;
  if (bound_quadratic(lo, n) > 0 || bound_quadratic(hi, n) <= 0) {
    throw InternalError("bound bracket does not straddle the root");
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (bound_quadratic(mid, n) <= 0) lo = mid;
    else hi = mid;
  }
  const std::int64_t b = lo.get_si();
  if (b != b2_bound_isqrt(n)) throw InternalError("integer and isqrt bounds disagree");
  return b;
}

std::vector<BoundRow> bound_table(std::int64_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::vector<BoundRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t even = b2_bound(n);
    const std::int64_t odd = 4 * n - 1;
    rows.push_back({n, even, odd, std::max(even, odd)});
  }
  return rows;
}

}  // namespace llv
