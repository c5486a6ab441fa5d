#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwzeta/fq.hpp"

namespace gwzeta {

using CheckResults = std::vector<std::pair<std::string, bool>>;

// Property suites behind `check <suite>`; each entry is (name, passed).
// All randomness is seeded, so runs are reproducible.
CheckResults run_rings_suite(const std::vector<long>& qs);
CheckResults run_newton_suite(const std::vector<long>& qs, int order);
CheckResults run_motivic_suite(const std::vector<long>& qs, int order);
CheckResults run_signs_suite(const std::vector<long>& qs, int order);
CheckResults run_all_suites(const std::vector<long>& qs, int order);

}  // namespace gwzeta
