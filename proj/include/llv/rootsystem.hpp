#pragma once

// Root and weight combinatorics of so(b2+2, C) in the epsilon basis.
//
// so(b2+2) has rank r+1 with r = floor(b2/2). For b2 = 2r it is of type
// D_{r+1}; for b2 = 2r+1 it is of type B_{r+1}. Weights are written
// mu = sum mu_i eps_i, i = 0..r, and every coordinate is an integer or a
// half-integer. Coordinates are stored doubled so all kernels stay integral.

#include "llv/exact.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace llv {

using Coords2 = std::vector<std::int64_t>;

enum class Parity { Even, Odd };
enum class Series { B, D };

const char* to_string(Parity p);
const char* to_string(Series s);

/// A weight with doubled coordinates 2*mu_0, ..., 2*mu_r.
///
/// All doubled coordinates share one parity: all even (integral weight) or
/// all odd (half-integral, spin-type weight). Mixed parity throws InvalidInput.
class Weight {
 public:
  Weight() = default;
  explicit Weight(Coords2 coords2);

  /// Builds a weight from exact coordinates; each must lie in (1/2)Z.
  static Weight from_rationals(std::span<const Rational> coords);
  static Weight from_rationals(std::initializer_list<Rational> coords);
  static Weight zero(std::size_t rank);
  /// m*eps_0 padded to the given rank, written (m) in the usual shorthand.
  static Weight leading(std::size_t rank, std::int64_t m);

  std::size_t size() const { return coords2_.size(); }
  const Coords2& coords2() const { return coords2_; }
  std::int64_t twice(std::size_t i) const { return coords2_[i]; }
  Rational coord(std::size_t i) const { return make_rational(coords2_[i], 2); }
  Parity parity() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  Coords2 coords2_;
};

std::string to_string(const Weight& w);

/// Positive roots and Weyl vector of so(b2+2).
class RootSystem {
 public:
  std::int64_t b2() const { return b2_; }
  Series series() const { return series_; }
  /// Rank r+1 of the Lie algebra.
  std::size_t rank() const { return rank_; }
  /// r = floor(b2/2), the largest coordinate index.
  std::size_t r() const { return rank_ - 1; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const Weight& rho() const { return rho_; }
  /// Order of the Weyl group: 2^r (r+1)! for D, 2^(r+1) (r+1)! for B.
  BigInt weyl_group_order() const;

 private:
  friend RootSystem build_root_system(std::int64_t b2);

  std::int64_t b2_ = 0;
  Series series_ = Series::B;
  std::size_t rank_ = 0;
  std::vector<Weight> positive_roots_;
  std::vector<Weight> simple_roots_;
  Weight rho_;
};

/// Root data for so(b2+2). b2 <= 0 is invalid input; b2 = 2 is unsupported.
RootSystem build_root_system(std::int64_t b2);

/// The Euclidean form sum a_i b_i on epsilon coordinates.
Rational pairing(const Weight& a, const Weight& b);
/// Four times the pairing: sum of products of doubled coordinates.
std::int64_t pairing4(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

bool is_dominant(const RootSystem& rs, const Weight& mu);
Parity weight_parity(const Weight& mu);

/// dim V_mu as the product over positive roots of (mu+rho, a)/(rho, a).
BigInt weyl_dimension(const RootSystem& rs, const Weight& mu);

/// Dominant representative of the Weyl orbit of theta.
Weight dominant_conjugate(const RootSystem& rs, const Weight& theta);
/// Same as dominant_conjugate on raw doubled coordinates, no validation.
Coords2 dominant_conjugate_coords(Series series, Coords2 theta);

/// Every distinct element of the Weyl orbit of a dominant weight, sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);
/// |W . lambda| for dominant lambda, without enumerating the orbit.
BigInt orbit_size(const RootSystem& rs, const Weight& lambda);

/// mu_0 + ... + mu_{r-1} + |mu_r|.
Rational absolute_coordinate_sum(const Weight& mu);

/// mu with its last coordinate negated.
Weight reflect_last(const Weight& mu);

/// Every dominant weight (both parities) whose absolute coordinate sum is at
/// most sum_max; for type D the sign variants of the last coordinate are included.
std::vector<Weight> dominant_weights_up_to_sum(const RootSystem& rs, const Rational& sum_max);

/// Throws InvalidInput when mu has the wrong length for rs.
void require_rank(const RootSystem& rs, const Weight& mu);
/// Throws DomainError when mu is not dominant for rs.
void require_dominant(const RootSystem& rs, const Weight& mu);

}  // namespace llv
