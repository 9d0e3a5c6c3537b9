#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spdom/exact.hpp"
#include "spdom/graph.hpp"

namespace spdom {

/// Randomized cross-checks of the solver and the reductions against the
/// exhaustive oracles.
struct HarnessOptions {
    std::uint64_t seed = 7;
    std::int32_t trials = 100;
    Vertex n_max = 12;
    OracleBudget budget{kOracleVertexLimit};
    /// Test fixture: corrupt the pairing of every solver output before it
    /// is verified, so the block-optimality property must fail.
    bool inject_pairing_fault = false;
    /// Restrict to these property names; empty runs all.
    std::vector<std::string> only;
};

struct PropertyReport {
    std::string name;
    std::int32_t trials = 0;
    std::int32_t failures = 0;
    std::int32_t skipped = 0;  // trials that hit an oracle budget cap
    std::int32_t detours = 0;  // degree-split trials whose oracle solution was not liftable
    std::string counterexample;  // first failure, empty if none

    bool ok() const noexcept { return failures == 0; }
};

struct HarnessReport {
    std::vector<PropertyReport> properties;
    std::vector<std::string> warnings;

    bool ok() const noexcept;
};

/// Names accepted by HarnessOptions::only, in run order.
std::vector<std::string> harness_properties();

/// Throws PreconditionError for n_max < 2, negative trials, or an unknown
/// property name.
HarnessReport run_harness(const HarnessOptions& opt);

/// Human: `PASS name trials=.. skipped=..` lines plus counterexamples.
/// Lines: `name pass|fail trials failures skipped`, one record per line.
std::string format_report(const HarnessReport& r, bool machine);

/// Re-partitions the pairs of `s` so that verification fails.
SemipairedSolution corrupt_pairing(const Graph& g, const SemipairedSolution& s);

}  // namespace spdom
