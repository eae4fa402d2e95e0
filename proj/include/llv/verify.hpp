#pragma once

// Grid verification of s(V_mu) by three independent routes: the Freudenthal
// graded profile, the principal specialization of the Weyl character, and the
// closed form. Dimensions are cross-checked the same way.

#include "llv/exact.hpp"
#include "llv/qchar.hpp"
#include "llv/repcalc.hpp"
#include "llv/rootsystem.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace llv {

struct VerifyGrid {
  std::int64_t b2_min = 3;
  std::int64_t b2_max = 9;
  Rational sum_max = 4;
  std::uint64_t orbit_ceiling = kDefaultOrbitCeiling;
  QCharLimits qchar_limits{};
};

struct VerifyEntry {
  std::int64_t b2 = 0;
  Weight mu;
  bool skipped = false;
  std::string notice;  // reason for a skip
  Rational s_profile, s_qchar, s_closed;
  BigInt dim_freudenthal, dim_weyl, dim_f1;
  bool symmetric_f = false;  // f'(1) = 0

  bool agree() const;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;

  std::size_t checked() const;
  std::size_t skipped() const;
  std::size_t mismatches() const;
  bool pass() const { return mismatches() == 0; }
};

/// Every grid point as a (b2, mu) pair, in report order.
std::vector<std::pair<std::int64_t, Weight>> verify_points(const VerifyGrid& grid);

VerifyEntry verify_weight(std::int64_t b2, const Weight& mu, const VerifyGrid& grid);

/// OpenMP over grid points; entries come back in verify_points order.
VerifyReport verify_grid(const VerifyGrid& grid);
VerifyReport verify_grid_serial(const VerifyGrid& grid);

}  // namespace llv
