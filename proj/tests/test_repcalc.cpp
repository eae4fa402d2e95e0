#include "llv/repcalc.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace llv;

namespace {

Weight W(std::initializer_list<Rational> c) { return Weight::from_rationals(c); }
Rational Q(long p, long q = 1) { return make_rational(p, q); }

GradedProfile P(std::initializer_list<std::pair<const std::int64_t, BigInt>> m, Parity p = Parity::Even) {
  return GradedProfile(GradedProfile::Map(m), p);
}

// Expands a dominant weight system into all weights with multiplicity.
std::map<Coords2, BigInt> expand(const RootSystem& rs, const WeightSystem& ws) {
  std::map<Coords2, BigInt> out;
  for (const auto& [lambda, mult] : ws.entries) {
    for (const auto& c : oracle::orbit_by_reflections(rs, lambda.coords2())) out[c] += mult;
  }
  return out;
}

GradedProfile from_buckets(const std::map<std::int64_t, BigInt>& m, Parity p) {
  return GradedProfile(GradedProfile::Map(m.begin(), m.end()), p);
}

}  // namespace

TEST_CASE("dominant_weights_below") {
  const auto b2 = build_root_system(3);
  CHECK(dominant_weights_below(b2, W({Q(1), Q(0)})) == std::vector<Weight>{W({Q(1), Q(0)}), Weight::zero(2)});
  CHECK(dominant_weights_below(b2, W({Q(1, 2), Q(1, 2)})) == std::vector<Weight>{W({Q(1, 2), Q(1, 2)})});
  for (std::int64_t b : {3, 4, 9, 22}) {
    const auto rs = build_root_system(b);
    CHECK(dominant_weights_below(rs, Weight::zero(rs.rank())) == std::vector<Weight>{Weight::zero(rs.rank())});
  }
  CHECK_THROWS_AS(dominant_weights_below(b2, W({Q(0), Q(1)})), DomainError);
}

TEST_CASE("dominant_weights_below agrees with exhaustive simple-root subtraction") {
  for (std::int64_t b : {1, 3, 4, 5, 6, 7, 8}) {
    const auto rs = build_root_system(b);
    for (const auto& mu : dominant_weights_up_to_sum(rs, Q(3))) {
      CAPTURE(b);
      CAPTURE(to_string(mu));
      std::set<Coords2> got;
      for (const auto& w : dominant_weights_below(rs, mu)) got.insert(w.coords2());
      CHECK(got == oracle::dominant_by_subtraction(rs, mu.coords2()));
    }
  }
}

TEST_CASE("freudenthal on small B2 modules") {
  const auto b2 = build_root_system(3);
  const auto adj = freudenthal(b2, W({Q(1), Q(1)}));
  CHECK(adj.entries.size() == 3);
  CHECK(adj.entries.at(W({Q(1), Q(1)})) == 1);
  CHECK(adj.entries.at(W({Q(1), Q(0)})) == 1);
  CHECK(adj.entries.at(Weight::zero(2)) == 2);
  CHECK(adj.total_dimension(b2) == 10);

  const auto std5 = freudenthal(b2, W({Q(1), Q(0)}));
  CHECK(std5.entries.size() == 2);
  CHECK(std5.entries.at(Weight::zero(2)) == 1);
  CHECK(std5.total_dimension(b2) == 5);

  for (std::int64_t b : {3, 4, 22, 23}) {
    const auto rs = build_root_system(b);
    const auto triv = freudenthal(rs, Weight::zero(rs.rank()));
    CHECK(triv.entries.size() == 1);
    CHECK(triv.entries.begin()->second == 1);
  }
  CHECK_THROWS_AS(freudenthal(b2, W({Q(0), Q(1)})), DomainError);
}

TEST_CASE("freudenthal matches hand-built weight multisets") {
  for (std::int64_t b : {3, 4, 5, 6, 7, 8, 9}) {
    const auto rs = build_root_system(b);
    CAPTURE(b);
    // adjoint: highest root is eps_0 + eps_1
    Coords2 hr(rs.rank(), 0);
    hr[0] = hr[1] = 2;
    CHECK(expand(rs, freudenthal(rs, Weight(hr))) == oracle::to_multiset(oracle::adjoint_weights(rs)));
    // spin
    Coords2 spin(rs.rank(), 1);
    CHECK(expand(rs, freudenthal(rs, Weight(spin))) == oracle::to_multiset(oracle::spin_weights(rs)));
    if (rs.series() == Series::D) {
      spin.back() = -1;
      CHECK(expand(rs, freudenthal(rs, Weight(spin))) == oracle::to_multiset(oracle::spin_weights(rs, -1)));
    }
    for (std::int64_t m = 0; m <= 3; ++m) {
      CHECK(expand(rs, freudenthal(rs, Weight::leading(rs.rank(), m))) ==
            oracle::leading_weight_multiset(rs, m));
    }
  }
}

TEST_CASE("freudenthal total equals Weyl dimension on the grid") {
  for (std::int64_t b = 3; b <= 9; ++b) {
    const auto rs = build_root_system(b);
    for (const auto& mu : dominant_weights_up_to_sum(rs, Q(4))) {
      const auto ws = freudenthal(rs, mu);
      CHECK(ws.total_dimension(rs) == weyl_dimension(rs, mu));
      CHECK(ws.entries.at(mu) == 1);
    }
  }
}

TEST_CASE("graded_profile") {
  const auto b2 = build_root_system(3);
  CHECK(graded_profile(b2, freudenthal(b2, W({Q(1), Q(1)}))) == P({{-2, 3}, {0, 4}, {2, 3}}));
  CHECK(graded_profile(b2, freudenthal(b2, W({Q(1, 2), Q(1, 2)}))) ==
        P({{-1, 2}, {1, 2}}, Parity::Odd));
  for (std::int64_t b : {3, 4, 9, 10}) {
    const auto rs = build_root_system(b);
    CHECK(graded_profile(rs, freudenthal(rs, Weight::leading(rs.rank(), 1))) ==
          P({{-2, 1}, {0, big(b)}, {2, 1}}));
  }
}

TEST_CASE("graded_profile is symmetric, parity-consistent and matches orbit buckets") {
  for (std::int64_t b = 3; b <= 7; ++b) {
    const auto rs = build_root_system(b);
    for (const auto& mu : dominant_weights_up_to_sum(rs, Q(3))) {
      CAPTURE(b);
      CAPTURE(to_string(mu));
      const auto ws = freudenthal(rs, mu);
      const auto p = graded_profile(rs, ws);
      CHECK(p.is_symmetric());
      CHECK(p.parity() == mu.parity());
      CHECK(p.total() == weyl_dimension(rs, mu));
      CHECK(p == from_buckets(oracle::bucket_by_degree(expand(rs, ws)), mu.parity()));
      CHECK(p == graded_profile_serial(rs, ws));
    }
  }
}

TEST_CASE("graded_profile refuses to exceed the orbit ceiling") {
  const auto rs = build_root_system(22);
  const auto ws = freudenthal(rs, Weight::leading(rs.rank(), 2));
  CHECK(projected_orbit_count(rs, ws) > 24);
  CHECK_THROWS_AS(graded_profile(rs, ws, 10), CeilingExceeded);
  CHECK_THROWS_AS(graded_profile_serial(rs, ws, 10), CeilingExceeded);
  CHECK(graded_profile(rs, ws).total() == weyl_dimension(rs, Weight::leading(rs.rank(), 2)));
}

TEST_CASE("profile_sum") {
  CHECK(profile_sum(unit_profile(), unit_profile()) == P({{0, 2}}));
  CHECK(profile_sum(standard_profile(22), unit_profile()) == P({{-2, 1}, {0, 23}, {2, 1}}));
  const auto a = P({{-4, 3}, {0, 7}, {4, 3}});
  CHECK(profile_sum(a, a) == scale(a, 2));
  CHECK_THROWS_AS(profile_sum(a, P({{-1, 1}, {1, 1}}, Parity::Odd)), DomainError);
}

TEST_CASE("profile_tensor") {
  const auto v = standard_profile(3);
  CHECK(profile_tensor(v, v) == P({{-4, 1}, {-2, 6}, {0, 11}, {2, 6}, {4, 1}}));
  CHECK(profile_tensor(v, unit_profile()) == v);
  const auto odd = P({{-1, 2}, {1, 2}}, Parity::Odd);
  const auto oo = profile_tensor(odd, odd);
  CHECK(oo.parity() == Parity::Even);
  CHECK(oo.is_symmetric());
  CHECK(profile_tensor(odd, v).parity() == Parity::Odd);
}

TEST_CASE("profile_tensor matches the tensor product character on B2") {
  const auto rs = build_root_system(3);
  std::vector<Weight> irreps;
  for (const auto& mu : dominant_weights_up_to_sum(rs, Q(3))) {
    if (weyl_dimension(rs, mu) <= 35) irreps.push_back(mu);
  }
  for (const auto& a : irreps) {
    for (const auto& b : irreps) {
      if (weyl_dimension(rs, a) * weyl_dimension(rs, b) > 100) continue;
      const auto wa = freudenthal(rs, a), wb = freudenthal(rs, b);
      const auto brute = oracle::tensor_weights(expand(rs, wa), expand(rs, wb));
      const Parity p = a.parity() == b.parity() ? Parity::Even : Parity::Odd;
      CHECK(profile_tensor(graded_profile(rs, wa), graded_profile(rs, wb)) ==
            from_buckets(oracle::bucket_by_degree(brute), p));
    }
  }
}

TEST_CASE("profile_sym_power") {
  const auto v = P({{-2, 1}, {0, 1}, {2, 1}});
  CHECK(profile_sym_power(v, 2) == P({{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}));
  CHECK(profile_sym_power(v, 0) == unit_profile());
  CHECK(profile_sym_power(v, 1) == v);
  CHECK_THROWS_AS(profile_sym_power(v, -1), InvalidInput);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    GradedProfile::Map m;
    const std::int64_t parity = static_cast<std::int64_t>(rng() % 2);
    for (std::int64_t k = parity; k <= 5; k += 2) {
      const long d = static_cast<long>(rng() % 4);
      m[k] += d;
      m[-k] = m[k];
    }
    const GradedProfile a(m, parity ? Parity::Odd : Parity::Even);
    for (std::int64_t power = 0; power <= 4; ++power) {
      BigInt expect;
      const BigInt top = a.total() + power - 1;
      if (a.total() == 0) {
        expect = power == 0 ? 1 : 0;
      } else {
        mpz_bin_ui(expect.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(power));
      }
      CHECK(profile_sym_power(a, power).total() == expect);
    }
  }
}

TEST_CASE("verbitsky_profile") {
  CHECK(verbitsky_profile(1, 22) == P({{-2, 1}, {0, 22}, {2, 1}}));
  const auto v2 = verbitsky_profile(2, 23);
  CHECK(v2 == P({{-4, 1}, {-2, 23}, {0, 276}, {2, 23}, {4, 1}}));
  CHECK(v2.total() == 324);
  CHECK(verbitsky_profile(0, 5) == unit_profile());
  CHECK_THROWS_AS(verbitsky_profile(-1, 5), InvalidInput);
}

TEST_CASE("verbitsky_profile agrees with the orbit route for small b2") {
  for (std::int64_t b = 3; b <= 9; ++b) {
    const auto rs = build_root_system(b);
    for (std::int64_t m = 0; m <= 5; ++m) {
      CHECK(verbitsky_profile(m, b) ==
            graded_profile(rs, freudenthal(rs, Weight::leading(rs.rank(), m))));
    }
  }
}

TEST_CASE("GradedProfile validates parity and sign") {
  CHECK_THROWS_AS(P({{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(P({{0, 1}}, Parity::Odd), InvalidInput);
  CHECK_THROWS_AS(P({{0, -1}}), InvalidInput);
  CHECK(P({{0, 0}}).empty());
}
