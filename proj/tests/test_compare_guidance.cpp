#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "corbit/angles.hpp"
#include "corbit/compare_guidance.hpp"

using namespace corbit;

namespace {

// quadratic-scan reference for the settle definition: the earliest end time
// of a window in which s advances a full turn with |gamma - 1| < 0.05
// throughout
double settle_reference(const std::vector<double>& gamma, const std::vector<double>& s_wrapped,
                        double dt) {
  const std::size_t n = gamma.size();
  std::vector<double> su(n);
  su[0] = s_wrapped[0];
  for (std::size_t k = 1; k < n; ++k) {
    su[k] = su[k - 1] + normalize_angle(s_wrapped[k] - s_wrapped[k - 1]);
  }
  double best = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    bool clean = true;
    for (std::size_t j = k; j < n && clean; ++j) {
      if (std::abs(gamma[j] - 1.0) >= 0.05) {
        clean = false;
        break;
      }
      if (su[j] >= su[k] + kTwoPi<double>) {
        const double t = static_cast<double>(j) * dt;
        if (best < 0.0 || t < best) best = t;
        break;
      }
    }
    if (best >= 0.0 && clean) break;
  }
  return best;
}

}  // namespace

TEST_SUITE("compare_guidance") {
  TEST_CASE("settle detector matches the quadratic reference") {
    const GuidanceComparison cmp = run_guidance_comparison(0.02, 120.0);
    CHECK(cmp.settle_time_weighted ==
          doctest::Approx(settle_reference(cmp.gamma_weighted, cmp.s_weighted, cmp.dt))
              .epsilon(1e-12));
    CHECK(settle_reference(cmp.gamma_constant, cmp.s_constant, cmp.dt) == -1.0);
    CHECK(cmp.settle_time_constant == -1.0);
  }

  TEST_CASE("comparison run and report") {
    const GuidanceComparison cmp = run_guidance_comparison(0.02, 160.0);

    CHECK(cmp.kappa_min == doctest::Approx(0.16).epsilon(1e-12));
    // the weighted law settles at the strict definition; the constant law
    // sits in a wider limit cycle and is measured from its steady state
    CHECK(cmp.settle_time_weighted >= 0.0);
    CHECK(cmp.constant_used_steady_fallback);
    CHECK(cmp.steady_start_constant >= 0.0);
    CHECK(cmp.high_curv_err_weighted < cmp.high_curv_err_constant);
    CHECK(cmp.weighted_strictly_better);

    // agents placed on-orbit at s = pi/2 command identical offsets
    CHECK(std::abs(cmp.psi_o_probe_constant - cmp.psi_o_probe_weighted) <= 1e-12);

    const auto dir = std::filesystem::temp_directory_path() / "corbit_test_compare";
    write_comparison(cmp, dir);
    for (const char* name : {"comparison.csv", "comparison_summary.txt", "gamma_comparison.svg"}) {
      std::ifstream in(dir / name);
      CHECK(in.good());
    }
    std::ifstream summary(dir / "comparison_summary.txt");
    std::string text{std::istreambuf_iterator<char>(summary), std::istreambuf_iterator<char>()};
    CHECK(text.find("kappa_min: 0.16") != std::string::npos);
    CHECK(text.find("weighted_strictly_better: 1") != std::string::npos);
  }
}
