#include "llv/rootsystem.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace llv {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
const char* to_string(Series s) { return s == Series::B ? "B" : "D"; }

Weight::Weight(Coords2 coords2) : coords2_(std::move(coords2)) {
  if (coords2_.empty()) return;
  const bool odd = (coords2_.front() & 1) != 0;
  for (auto c : coords2_) {
    if (((c & 1) != 0) != odd) {
      throw InvalidInput(
          "weight " + to_string(*this) +
          " mixes integer and half-integer coordinates; a weight must be even (all "
          "integers) or odd (all half-integers)");
    }
  }
}

Weight Weight::from_rationals(std::span<const Rational> coords) {
  Coords2 c2;
  c2.reserve(coords.size());
  for (const auto& q : coords) {
    Rational doubled = q * 2;
    if (doubled.get_den() != 1 || !fits_int64(doubled.get_num())) {
      throw InvalidInput("weight coordinate " + to_string(q) + " is not in (1/2)Z");
    }
    c2.push_back(doubled.get_num().get_si());
  }
  return Weight(std::move(c2));
}

Weight Weight::from_rationals(std::initializer_list<Rational> coords) {
  return from_rationals(std::span<const Rational>(coords.begin(), coords.size()));
}

Weight Weight::zero(std::size_t rank) { return Weight(Coords2(rank, 0)); }

Weight Weight::leading(std::size_t rank, std::int64_t m) {
  Coords2 c(rank, 0);
  if (rank > 0) c[0] = 2 * m;
  return Weight(std::move(c));
}

Parity Weight::parity() const {
  return !coords2_.empty() && (coords2_.front() & 1) ? Parity::Odd : Parity::Even;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << to_string(make_rational(w.coords2()[i], 2));
  }
  os << ')';
  return os.str();
}

BigInt RootSystem::weyl_group_order() const {
  BigInt order = 1;
  for (std::size_t i = 2; i <= rank_; ++i) order *= static_cast<unsigned long>(i);
  const std::size_t flips = series_ == Series::B ? rank_ : rank_ - 1;
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, flips);
  return order * two_pow;
}

RootSystem build_root_system(std::int64_t b2) {
  if (b2 <= 0) throw InvalidInput("b2 must be positive, got " + std::to_string(b2));
  if (b2 == 2) {
    throw UnsupportedRank("b2 = 2 gives so(4) = D2, which is not simple; unsupported rank");
  }
  RootSystem rs;
  rs.b2_ = b2;
  rs.series_ = b2 % 2 == 0 ? Series::D : Series::B;
  const std::size_t r = static_cast<std::size_t>(b2 / 2);
  rs.rank_ = r + 1;
  const std::size_t n = rs.rank_;

  auto unit = [n](std::size_t i, std::int64_t sign) {
    Coords2 c(n, 0);
    c[i] = 2 * sign;
    return c;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Coords2 minus = unit(i, 1), plus = unit(i, 1);
      minus[j] = -2;
      plus[j] = 2;
      rs.positive_roots_.emplace_back(std::move(minus));
      rs.positive_roots_.emplace_back(std::move(plus));
    }
    if (rs.series_ == Series::B) rs.positive_roots_.emplace_back(unit(i, 1));
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    Coords2 c = unit(i, 1);
    c[i + 1] = -2;
    rs.simple_roots_.emplace_back(std::move(c));
  }
  if (rs.series_ == Series::B) {
    rs.simple_roots_.emplace_back(unit(n - 1, 1));
  } else {
    Coords2 c = unit(n - 2, 1);
    c[n - 1] = 2;
    rs.simple_roots_.emplace_back(std::move(c));
  }

  // rho = half the sum of positive roots; doubled coordinates are the plain sum halved.
  Coords2 sum(n, 0);
  for (const auto& a : rs.positive_roots_) {
    for (std::size_t i = 0; i < n; ++i) sum[i] += a.twice(i);
  }
  Coords2 rho2(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sum[i] % 2 != 0) throw InternalError("half-sum of positive roots is not a weight");
    rho2[i] = sum[i] / 2;
  }
  rs.rho_ = Weight(std::move(rho2));

  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = static_cast<std::int64_t>(r - i);
    const std::int64_t expected = rs.series_ == Series::D ? 2 * ri : 2 * ri + 1;
    if (rs.rho_.twice(i) != expected) throw InternalError("rho disagrees with its explicit form");
  }
  return rs;
}

std::int64_t pairing4(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational pairing(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("pairing of weights with lengths " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  return make_rational(pairing4(a.coords2(), b.coords2()), 4);
}

void require_rank(const RootSystem& rs, const Weight& mu) {
  if (mu.size() != rs.rank()) {
    throw InvalidInput("weight " + to_string(mu) + " has " + std::to_string(mu.size()) +
                       " coordinates but so(" + std::to_string(rs.b2() + 2) + ") has rank " +
                       std::to_string(rs.rank()));
  }
}

bool is_dominant(const RootSystem& rs, const Weight& mu) {
  require_rank(rs, mu);
  const auto& c = mu.coords2();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (c[i] < c[i + 1]) return false;
  }
  if (rs.series() == Series::B || n == 1) {
    if (n >= 2 && c[n - 2] < c[n - 1]) return false;
    return c[n - 1] >= 0;
  }
  return c[n - 2] >= std::abs(c[n - 1]);
}

void require_dominant(const RootSystem& rs, const Weight& mu) {
  if (!is_dominant(rs, mu)) {
    throw DomainError("weight " + to_string(mu) + " is not dominant for so(" +
                      std::to_string(rs.b2() + 2) + ")");
  }
}

Parity weight_parity(const Weight& mu) { return mu.parity(); }

BigInt weyl_dimension(const RootSystem& rs, const Weight& mu) {
  require_dominant(rs, mu);
  const auto& m = mu.coords2();
  const auto& rho = rs.rho().coords2();
  Coords2 shifted(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) shifted[i] = m[i] + rho[i];
  BigInt num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= big(pairing4(shifted, a.coords2()));
    den *= big(pairing4(rho, a.coords2()));
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw InternalError("Weyl dimension product is not an integer for " + to_string(mu));
  }
  BigInt dim = num / den;
  if (dim <= 0) throw InternalError("non-positive Weyl dimension for " + to_string(mu));
  return dim;
}

Coords2 dominant_conjugate_coords(Series series, Coords2 theta) {
  std::size_t negatives = 0;
  for (auto& c : theta) {
    if (c < 0) {
      ++negatives;
      c = -c;
    }
  }
  std::sort(theta.begin(), theta.end(), std::greater<>());
  // Type D flips signs in pairs: an odd flip count survives on the smallest entry
  // (and disappears when that entry is zero).
  if (series == Series::D && negatives % 2 == 1 && !theta.empty()) theta.back() = -theta.back();
  return theta;
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& theta) {
  require_rank(rs, theta);
  return Weight(dominant_conjugate_coords(rs.series(), theta.coords2()));
}

namespace {

bool has_zero(const Coords2& c) {
  return std::any_of(c.begin(), c.end(), [](auto x) { return x == 0; });
}

}  // namespace

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const auto& lc = lambda.coords2();
  const bool zero_present = has_zero(lc);
  const std::size_t base_negatives = std::count_if(lc.begin(), lc.end(), [](auto x) { return x < 0; });
  const bool restrict_signs = rs.series() == Series::D && !zero_present;

  Coords2 abs_sorted(lc.size());
  std::transform(lc.begin(), lc.end(), abs_sorted.begin(), [](auto x) { return std::abs(x); });
  std::sort(abs_sorted.begin(), abs_sorted.end());

  std::vector<Weight> orbit;
  std::vector<std::size_t> nonzero;
  do {
    nonzero.clear();
    for (std::size_t i = 0; i < abs_sorted.size(); ++i) {
      if (abs_sorted[i] != 0) nonzero.push_back(i);
    }
    const std::uint64_t patterns = std::uint64_t{1} << nonzero.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      const auto flips = static_cast<std::size_t>(std::popcount(mask));
      if (restrict_signs && flips % 2 != base_negatives % 2) continue;
      Coords2 c = abs_sorted;
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (mask >> b & 1) c[nonzero[b]] = -c[nonzero[b]];
      }
      orbit.emplace_back(std::move(c));
    }
  } while (std::next_permutation(abs_sorted.begin(), abs_sorted.end()));
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

BigInt orbit_size(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const auto& c = lambda.coords2();
  BigInt count;
  mpz_fac_ui(count.get_mpz_t(), c.size());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    while (j < c.size() && std::abs(c[j]) == std::abs(c[i])) ++j;
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    count /= f;
    if (c[i] != 0) nonzero += j - i;
    i = j;
  }
  std::size_t flips = nonzero;
  if (rs.series() == Series::D && nonzero == c.size()) --flips;
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, flips);
  return count * two_pow;
}

Rational absolute_coordinate_sum(const Weight& mu) {
  std::int64_t acc = 0;
  for (auto c : mu.coords2()) acc += std::abs(c);
  return make_rational(acc, 2);
}

Weight reflect_last(const Weight& mu) {
  Coords2 c = mu.coords2();
  if (!c.empty()) c.back() = -c.back();
  return Weight(std::move(c));
}

std::vector<Weight> dominant_weights_up_to_sum(const RootSystem& rs, const Rational& sum_max) {
  std::vector<Weight> out;
  if (sum_max < 0) return out;
  Rational doubled = sum_max * 2;
  const BigInt limit_big = doubled.get_num() / doubled.get_den();
  const std::int64_t limit = limit_big.get_si();
  const std::size_t n = rs.rank();

  Coords2 cur(n);
  // Non-increasing, non-negative doubled coordinates of a fixed parity.
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec =
      [&](std::size_t i, std::int64_t cap, std::int64_t budget) {
        if (i == n) {
          out.emplace_back(cur);
          if (rs.series() == Series::D && cur.back() != 0) {
            Coords2 neg = cur;
            neg.back() = -neg.back();
            out.emplace_back(std::move(neg));
          }
          return;
        }
        const std::int64_t remaining = static_cast<std::int64_t>(n - i - 1);
        const std::int64_t lowest = cap & 1;
        for (std::int64_t v = lowest; v <= cap; v += 2) {
          // later coordinates are at least `lowest` each
          if (v + remaining * lowest > budget) break;
          cur[i] = v;
          rec(i + 1, v, budget - v);
        }
      };
  for (std::int64_t parity = 0; parity <= 1; ++parity) {
    const std::int64_t top = limit % 2 == parity ? limit : limit - 1;
    if (top < 0) continue;
    // the first coordinate fixes the parity class; cap carries it down.
    for (std::int64_t v0 = parity; v0 <= top; v0 += 2) {
      const std::int64_t rest = static_cast<std::int64_t>(n - 1) * parity;
      if (v0 + rest > limit) break;
      cur[0] = v0;
      rec(1, v0, limit - v0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace llv
