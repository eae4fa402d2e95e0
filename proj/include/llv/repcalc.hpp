#pragma once

// Weight systems of irreducible so(b2+2)-modules and their h-graded profiles.
//
// The grading operator h = eps_0^vee acts on a weight space V(theta) by 2*theta_0,
// which is exactly the first doubled coordinate. A GradedProfile records
// k -> dim W_k and supports the algebra of direct sums, tensor products and
// symmetric powers.

#include "llv/exact.hpp"
#include "llv/rootsystem.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace llv {

/// Dominant weights of V_highest with their multiplicities.
struct WeightSystem {
  Weight highest;
  std::map<Weight, BigInt> entries;

  /// sum over entries of mult * |orbit|.
  BigInt total_dimension(const RootSystem& rs) const;
};

class GradedProfile {
 public:
  using Map = std::map<std::int64_t, BigInt>;

  GradedProfile() = default;
  /// Zero entries are dropped. Keys must all share the declared parity.
  GradedProfile(Map dims, Parity parity);

  const Map& dims() const { return dims_; }
  Parity parity() const { return parity_; }
  BigInt at(std::int64_t k) const;
  BigInt total() const;
  bool empty() const { return dims_.empty(); }
  bool is_symmetric() const;

  bool operator==(const GradedProfile&) const = default;

 private:
  Map dims_;
  Parity parity_ = Parity::Even;
};

/// The trivial one-dimensional profile {0 -> 1}.
GradedProfile unit_profile();
GradedProfile scale(const GradedProfile& a, const BigInt& factor);

/// Every dominant lambda with mu - lambda a non-negative integer combination of
/// simple roots, ordered by depth (mu first).
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& mu);

/// Multiplicities of the dominant weights of V_mu by the Freudenthal recursion.
WeightSystem freudenthal(const RootSystem& rs, const Weight& mu);

/// Default cap on the number of orbit weights graded_profile will enumerate.
inline constexpr std::uint64_t kDefaultOrbitCeiling = 10'000'000;

/// Total number of weights (with multiplicity-free orbit counting) that
/// graded_profile would visit.
BigInt projected_orbit_count(const RootSystem& rs, const WeightSystem& ws);

/// h-graded profile by enumerating every Weyl orbit. Parallel over dominant weights.
GradedProfile graded_profile(const RootSystem& rs, const WeightSystem& ws,
                             std::uint64_t orbit_ceiling = kDefaultOrbitCeiling);
/// Single-threaded reference implementation of graded_profile.
GradedProfile graded_profile_serial(const RootSystem& rs, const WeightSystem& ws,
                                    std::uint64_t orbit_ceiling = kDefaultOrbitCeiling);

GradedProfile profile_sum(const GradedProfile& a, const GradedProfile& b);
GradedProfile profile_tensor(const GradedProfile& a, const GradedProfile& b);
/// Graded dimensions of Sym^m, via m Sym^m = sum_{j=1..m} p_j Sym^{m-j} where
/// p_j is the profile with its grading dilated by j.
GradedProfile profile_sym_power(const GradedProfile& a, std::int64_t m);

/// Profile of the standard module so(b2+2) acts on: {-2 -> 1, 0 -> b2, 2 -> 1}.
GradedProfile standard_profile(std::int64_t b2);
/// Profile of V_(m) from Sym^m V = V_(m) + Sym^{m-2} V; no orbit enumeration.
GradedProfile verbitsky_profile(std::int64_t m, std::int64_t b2);

}  // namespace llv
