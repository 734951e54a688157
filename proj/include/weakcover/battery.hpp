#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "weakcover/exact.hpp"

namespace weakcover {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool observational = false;  ///< reported, never gates
    std::string detail;
};

struct RandomInstance {
    int n = 0;
    double p = 0;
    std::uint64_t seed = 0;
};

/// count instances cycling n over [n_min, n_max] and p over `ps`; seeds are
/// seed_base, seed_base + 1, ...
std::vector<RandomInstance> instance_plan(int count, int n_min, int n_max, const std::vector<double>& ps,
                                          std::uint64_t seed_base);

inline constexpr int kCriterionCount = 12;

/// One criterion by number. Criterion 12 reads the sigma values gathered by
/// criterion 8 and reruns it when `histogram` is still empty.
CriterionResult run_criterion(int id, std::size_t exact_limit, std::map<std::size_t, std::size_t>& histogram);
CriterionResult run_criterion(int id, std::size_t exact_limit = kDefaultExactLimit);

/// The fixed acceptance battery, one result per criterion (1..12). `log`
/// receives a line as each criterion finishes.
std::vector<CriterionResult> run_battery(std::size_t exact_limit = kDefaultExactLimit, std::ostream* log = nullptr);

/// "PASS"/"FAIL"/"INFO" line for one result.
std::string format_result(const CriterionResult& r);

}  // namespace weakcover
