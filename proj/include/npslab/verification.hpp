#pragma once

#include "npslab/nps.hpp"
#include "npslab/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nps {

enum class VerifyLevel { fast, full };

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool passed() const;
    /// nullptr when everything passed.
    const SuiteResult* first_failure() const;
};

/// Replaceable pieces so a faulty implementation can be fed through the
/// suites.  Empty members mean the library implementation.
struct VerifyHooks {
    std::function<Rational(const Partition&)> chicago;
    SortFunction sorter;
};

/// fast: shapes up to size 6, identity grids up to 15.
/// full: shapes up to size 8 (bijection up to 7), grids to 30 and 50.
VerifyReport run_verification(VerifyLevel level, const VerifyHooks& hooks = {}, int jobs = 1);

}  // namespace nps
