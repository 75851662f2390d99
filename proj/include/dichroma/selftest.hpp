#pragma once

#include <string>

namespace dichroma {

enum class SelftestLevel { Quick, Full };

struct SelftestResult {
    std::string report;  // one line per criterion plus an overall line
    bool all_pass = false;
};

/// Runs the whole verification suite twice with fixed seeds: criteria 1-8
/// check the library against its oracles and budgets, criterion 9 checks that
/// the two runs produced byte-identical reports. Quick level scales the
/// instance counts down; full level runs the exhaustive sweeps.
SelftestResult run_selftest(SelftestLevel level);

}  // namespace dichroma
