#pragma once

// The twelve-criterion acceptance battery, shared by the CLI and ctest.

#include <cstdint>
#include <string>
#include <vector>

#include "stacktri/core.hpp"

namespace stacktri {

struct SuiteOptions {
    int max_dim = 5;  ///< caps every dimension range in the battery
    std::uint64_t seed = 0;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// A closed normal pseudomanifold produced while running the battery.
struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
    bool stacked = false;  ///< built as a stacked sphere
};

inline constexpr int criterion_count = 12;

/// Every complex the battery constructs, in a fixed order.
std::vector<CorpusEntry> suite_corpus(const SuiteOptions& options);

/// Throws std::out_of_range for ids outside 1..criterion_count.
CheckResult run_criterion(int id, const SuiteOptions& options);
std::vector<CheckResult> run_suite(const SuiteOptions& options);

}  // namespace stacktri
