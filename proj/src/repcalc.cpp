#include "llv/repcalc.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace llv {

BigInt WeightSystem::total_dimension(const RootSystem& rs) const {
  BigInt total = 0;
  for (const auto& [lambda, mult] : entries) total += mult * orbit_size(rs, lambda);
  return total;
}

GradedProfile::GradedProfile(Map dims, Parity parity) : parity_(parity) {
  const std::int64_t want = parity == Parity::Odd ? 1 : 0;
  for (auto& [k, d] : dims) {
    if (d < 0) throw InvalidInput("negative graded dimension at k = " + std::to_string(k));
    if (d == 0) continue;
    if (std::abs(k) % 2 != want) {
      throw InvalidInput("degree " + std::to_string(k) + " does not match " +
                         to_string(parity) + " profile parity");
    }
    dims_.emplace(k, std::move(d));
  }
}

BigInt GradedProfile::at(std::int64_t k) const {
  auto it = dims_.find(k);
  return it == dims_.end() ? BigInt(0) : it->second;
}

BigInt GradedProfile::total() const {
  BigInt t = 0;
  for (const auto& [k, d] : dims_) t += d;
  return t;
}

bool GradedProfile::is_symmetric() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [this](const auto& kv) { return at(-kv.first) == kv.second; });
}

GradedProfile unit_profile() { return GradedProfile({{0, BigInt(1)}}, Parity::Even); }

GradedProfile scale(const GradedProfile& a, const BigInt& factor) {
  GradedProfile::Map m;
  for (const auto& [k, d] : a.dims()) m[k] = d * factor;
  return GradedProfile(std::move(m), a.parity());
}

namespace {

struct DepthInfo {
  bool in_lattice = false;
  std::int64_t depth = 0;  // sum of simple-root coefficients of mu - lambda
};

// Writes mu - lambda in the simple-root basis; in_lattice is false unless every
// coefficient is a non-negative integer.
DepthInfo simple_root_depth(const RootSystem& rs, const Coords2& mu, const Coords2& lambda) {
  const std::size_t n = mu.size();
  std::vector<std::int64_t> partial(n);  // doubled partial sums of mu - lambda
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d2 = mu[i] - lambda[i];
    if (d2 % 2 != 0) return {};
    acc += d2;
    partial[i] = acc;
  }
  DepthInfo info;
  info.in_lattice = true;
  auto take = [&](std::int64_t doubled_coeff) {
    if (doubled_coeff < 0 || doubled_coeff % 2 != 0) info.in_lattice = false;
    info.depth += doubled_coeff / 2;
  };
  if (rs.series() == Series::B) {
    for (std::size_t j = 0; j < n; ++j) take(partial[j]);
  } else {
    for (std::size_t j = 0; j + 2 < n; ++j) take(partial[j]);
    const std::int64_t last_d2 = mu[n - 1] - lambda[n - 1];
    // c_{r-1} = (S_{r-1} - d_r)/2, c_r = S_r/2, all in undoubled units.
    const std::int64_t c_minus2 = partial[n - 2] - last_d2;  // 2*(S_{r-1} - d_r)
    const std::int64_t c_plus2 = partial[n - 1];             // 2*S_r
    if (c_minus2 % 4 != 0 || c_plus2 % 4 != 0) info.in_lattice = false;
    take(c_minus2 / 2);
    take(c_plus2 / 2);
  }
  return info;
}

}  // namespace

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& mu) {
  require_dominant(rs, mu);
  const auto& m = mu.coords2();
  const std::size_t n = m.size();
  const std::int64_t low = m[0] & 1;

  std::vector<std::pair<std::int64_t, Weight>> found;
  Coords2 cur(n);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec =
      [&](std::size_t i, std::int64_t cap, std::int64_t partial) {
        if (i == n) {
          auto info = simple_root_depth(rs, m, cur);
          if (info.in_lattice) found.emplace_back(info.depth, Weight(cur));
          return;
        }
        const bool last_d = rs.series() == Series::D && i == n - 1;
        const std::int64_t lo = last_d ? -cap : low;
        for (std::int64_t v = cap; v >= lo; v -= 2) {
          const std::int64_t next = partial + m[i] - v;
          // partial sums are simple-root coefficients except for the last two in type D
          const bool checked = rs.series() == Series::B || i + 2 < n;
          if (checked && next < 0) continue;
          cur[i] = v;
          rec(i + 1, v, next);
        }
      };
  // lambda_0 <= mu_0 because the first partial sum is a coefficient.
  rec(0, m[0], 0);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [d, w] : found) out.push_back(std::move(w));
  return out;
}

WeightSystem freudenthal(const RootSystem& rs, const Weight& mu) {
  const auto below = dominant_weights_below(rs, mu);
  const auto& rho = rs.rho().coords2();
  const std::size_t n = rs.rank();

  auto norm4_shifted = [&](const Coords2& c) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += (c[i] + rho[i]) * (c[i] + rho[i]);
    return acc;
  };

  WeightSystem ws;
  ws.highest = mu;
  ws.entries.emplace(mu, BigInt(1));
  const std::int64_t top = norm4_shifted(mu.coords2());

  Coords2 nu(n);
  for (std::size_t idx = 1; idx < below.size(); ++idx) {
    const Coords2& lambda = below[idx].coords2();
    BigInt rhs = 0;
    for (const auto& root : rs.positive_roots()) {
      const auto& a = root.coords2();
      nu = lambda;
      for (;;) {
        for (std::size_t i = 0; i < n; ++i) nu[i] += a[i];
        auto it = ws.entries.find(Weight(dominant_conjugate_coords(rs.series(), nu)));
        if (it == ws.entries.end()) break;  // root strings are unbroken
        rhs += it->second * big(pairing4(nu, a));
      }
    }
    rhs *= 2;
    const std::int64_t gap = top - norm4_shifted(lambda);
    if (gap <= 0) {
      throw InternalError("Freudenthal denominator vanishes at " + to_string(below[idx]));
    }
    if (!mpz_divisible_p(rhs.get_mpz_t(), big(gap).get_mpz_t())) {
      throw InternalError("Freudenthal multiplicity is not an integer at " + to_string(below[idx]));
    }
    BigInt mult = rhs / big(gap);
    if (mult <= 0) {
      throw InternalError("non-positive multiplicity at " + to_string(below[idx]));
    }
    ws.entries.emplace(below[idx], std::move(mult));
  }

  const BigInt total = ws.total_dimension(rs);
  if (total != weyl_dimension(rs, mu)) {
    throw InternalError("Freudenthal total " + total.get_str() + " disagrees with Weyl dimension for " +
                        to_string(mu));
  }
  return ws;
}

BigInt projected_orbit_count(const RootSystem& rs, const WeightSystem& ws) {
  BigInt count = 0;
  for (const auto& [lambda, mult] : ws.entries) count += orbit_size(rs, lambda);
  return count;
}

namespace {

void check_ceiling(const RootSystem& rs, const WeightSystem& ws, std::uint64_t ceiling) {
  const BigInt projected = projected_orbit_count(rs, ws);
  if (projected > BigInt(static_cast<unsigned long>(ceiling))) {
    throw CeilingExceeded("graded profile of V" + to_string(ws.highest) + " needs " +
                          projected.get_str() + " orbit weights, above the ceiling of " +
                          std::to_string(ceiling));
  }
}

void accumulate_orbit(const RootSystem& rs, const Weight& lambda, const BigInt& mult,
                      GradedProfile::Map& dims) {
  for (const auto& theta : weyl_orbit(rs, lambda)) dims[theta.twice(0)] += mult;
}

}  // namespace

GradedProfile graded_profile_serial(const RootSystem& rs, const WeightSystem& ws,
                                    std::uint64_t orbit_ceiling) {
  check_ceiling(rs, ws, orbit_ceiling);
  GradedProfile::Map dims;
  for (const auto& [lambda, mult] : ws.entries) accumulate_orbit(rs, lambda, mult, dims);
  return GradedProfile(std::move(dims), ws.highest.parity());
}

GradedProfile graded_profile(const RootSystem& rs, const WeightSystem& ws,
                             std::uint64_t orbit_ceiling) {
  check_ceiling(rs, ws, orbit_ceiling);
  const std::vector<std::pair<Weight, BigInt>> items(ws.entries.begin(), ws.entries.end());
  const auto count = static_cast<std::int64_t>(items.size());
  GradedProfile::Map dims;

#pragma omp parallel
  {
    GradedProfile::Map local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      accumulate_orbit(rs, items[i].first, items[i].second, local);
    }
#pragma omp critical(llv_graded_profile_merge)
    for (auto& [k, d] : local) dims[k] += d;
  }
  return GradedProfile(std::move(dims), ws.highest.parity());
}

GradedProfile profile_sum(const GradedProfile& a, const GradedProfile& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.parity() != b.parity()) {
    throw DomainError("cannot add an even profile to an odd profile");
  }
  GradedProfile::Map m = a.dims();
  for (const auto& [k, d] : b.dims()) m[k] += d;
  return GradedProfile(std::move(m), a.parity());
}

namespace {

GradedProfile::Map convolve(const GradedProfile::Map& a, const GradedProfile::Map& b) {
  GradedProfile::Map out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out[i + j] += x * y;
  }
  return out;
}

Parity combine(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }

}  // namespace

GradedProfile profile_tensor(const GradedProfile& a, const GradedProfile& b) {
  return GradedProfile(convolve(a.dims(), b.dims()), combine(a.parity(), b.parity()));
}

GradedProfile profile_sym_power(const GradedProfile& a, std::int64_t m) {
  if (m < 0) throw InvalidInput("symmetric power exponent must be non-negative");
  std::vector<GradedProfile::Map> h;
  h.reserve(static_cast<std::size_t>(m) + 1);
  h.push_back({{0, BigInt(1)}});
  for (std::int64_t step = 1; step <= m; ++step) {
    GradedProfile::Map acc;
    for (std::int64_t j = 1; j <= step; ++j) {
      GradedProfile::Map dilated;
      for (const auto& [k, d] : a.dims()) dilated[k * j] = d;
      for (const auto& [k, d] : convolve(dilated, h[static_cast<std::size_t>(step - j)])) acc[k] += d;
    }
    const BigInt divisor = big(step);
    for (auto& [k, d] : acc) {
      if (!mpz_divisible_p(d.get_mpz_t(), divisor.get_mpz_t())) {
        throw InternalError("Newton recurrence produced a non-integral dimension");
      }
      d /= divisor;
    }
    h.push_back(std::move(acc));
  }
  const Parity p = a.parity() == Parity::Odd && m % 2 == 1 ? Parity::Odd : Parity::Even;
  return GradedProfile(std::move(h.back()), p);
}

GradedProfile standard_profile(std::int64_t b2) {
  if (b2 <= 0) throw InvalidInput("b2 must be positive, got " + std::to_string(b2));
  return GradedProfile({{-2, BigInt(1)}, {0, big(b2)}, {2, BigInt(1)}}, Parity::Even);
}

GradedProfile verbitsky_profile(std::int64_t m, std::int64_t b2) {
  if (m < 0) throw InvalidInput("Verbitsky degree must be non-negative");
  const RootSystem rs = build_root_system(b2);
  const GradedProfile v = standard_profile(b2);
  GradedProfile::Map dims = profile_sym_power(v, m).dims();
  if (m >= 2) {
    const GradedProfile lower = profile_sym_power(v, m - 2);
    for (const auto& [k, d] : lower.dims()) {
      dims[k] -= d;
      if (dims[k] < 0) {
        throw InternalError("harmonic decomposition gave a negative dimension at k = " +
                            std::to_string(k));
      }
    }
  }
  GradedProfile out(std::move(dims), Parity::Even);
  if (out.total() != weyl_dimension(rs, Weight::leading(rs.rank(), m))) {
    throw InternalError("harmonic profile total disagrees with the Weyl dimension");
  }
  return out;
}

}  // namespace llv
