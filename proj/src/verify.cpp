#include "llv/verify.hpp"

#include "llv/llvcalc.hpp"

#include <algorithm>
#include <exception>

namespace llv {

bool VerifyEntry::agree() const {
  if (skipped) return true;
  return s_profile == s_qchar && s_qchar == s_closed && dim_freudenthal == dim_weyl &&
         dim_weyl == dim_f1 && symmetric_f;
}

std::size_t VerifyReport::checked() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.skipped; }));
}

std::size_t VerifyReport::skipped() const { return entries.size() - checked(); }

std::size_t VerifyReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.agree(); }));
}

std::vector<std::pair<std::int64_t, Weight>> verify_points(const VerifyGrid& grid) {
  std::vector<std::pair<std::int64_t, Weight>> points;
  for (std::int64_t b2 = grid.b2_min; b2 <= grid.b2_max; ++b2) {
    const RootSystem rs = build_root_system(b2);
    for (auto& mu : dominant_weights_up_to_sum(rs, grid.sum_max)) points.emplace_back(b2, std::move(mu));
  }
  return points;
}

VerifyEntry verify_weight(std::int64_t b2, const Weight& mu, const VerifyGrid& grid) {
  const RootSystem rs = build_root_system(b2);
  VerifyEntry e;
  e.b2 = b2;
  e.mu = mu;
  try {
    const WeightSystem ws = freudenthal(rs, mu);
    const GradedProfile profile = graded_profile_serial(rs, ws, grid.orbit_ceiling);
    const LaurentPoly f = principal_character(rs, mu, grid.qchar_limits);
    e.s_profile = s_of_profile(profile);
    e.s_qchar = s_via_qchar(mu, b2, grid.qchar_limits);
    e.s_closed = llv::s_closed(mu, b2);
    e.dim_freudenthal = ws.total_dimension(rs);
    e.dim_weyl = weyl_dimension(rs, mu);
    e.dim_f1 = f.value_at_one();
    e.symmetric_f = f.first_derivative_at_one() == 0;
  } catch (const CeilingExceeded& ex) {
    e.skipped = true;
    e.notice = ex.what();
  }
  return e;
}

VerifyReport verify_grid_serial(const VerifyGrid& grid) {
  VerifyReport report;
  for (const auto& [b2, mu] : verify_points(grid)) report.entries.push_back(verify_weight(b2, mu, grid));
  return report;
}

VerifyReport verify_grid(const VerifyGrid& grid) {
  const auto points = verify_points(grid);
  VerifyReport report;
  report.entries.resize(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) try {
    const auto idx = static_cast<std::size_t>(i);
    report.entries[idx] = verify_weight(points[idx].first, points[idx].second, grid);
  } catch (...) {
#pragma omp critical(llv_verify_failure)
    if (!failure) failure = std::current_exception();
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace llv
