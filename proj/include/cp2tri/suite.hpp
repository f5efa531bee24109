#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cp2 {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  double tol = 1e-9;
  double exact_tol = 1e-12;  // vertex values and the mu~ = mu o g identity
  std::size_t samples = 20;
};

struct ClaimRow {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> checks;  // failing ones start with "FAIL "
  double seconds = 0.0;
};

inline constexpr int kClaimCount = 15;

ClaimRow run_claim(int id, const SuiteOptions& opt);
// All claims in order, or only the listed ids.
std::vector<ClaimRow> run_suite(const SuiteOptions& opt, const std::vector<int>& only = {});

}  // namespace cp2
