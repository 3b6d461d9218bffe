#pragma once

#include "augres/braid.hpp"
#include "augres/disks.hpp"

#include <string>
#include <vector>

namespace augres {

// One reproduction fixture: a worked computation from the source material,
// re-derived by the engines and compared entry by entry. `erratum` marks
// fixtures where the published text contains a machine-refuted detail; the
// verdict then carries both the correction and the refutation. A fixture
// passes when the re-derived mathematics is verified; it fails when the
// published claim itself is false (not merely mistranscribed).
struct FixtureResult {
    std::string id;
    std::string title;
    bool passed = false;
    bool erratum = false;
    std::string verdict;               // one line, used by verify-paper
    std::vector<std::string> details;  // supporting data
};

// The worked instances.
BraidSpec sec22_braid();          // torus(4,3)
GeneratorId sec22_resolved();     // b[1,1]
BraidSpec sec31_braid();          // 3 strands, rows (., s2)(s1, s2)(s1, .)
GeneratorId sec31_resolved();     // b[2,1]

// Known ids: "2.2", "3.1-psi", "3.1-bilin", "unknot", "cor33", "3.1-dims".
std::vector<std::string> fixture_ids();

// Throws std::invalid_argument for unknown ids.
FixtureResult run_fixture(const std::string& id,
                          DiskEngine engine = DiskEngine::Walk,
                          const WalkLimits& lim = WalkLimits{});

std::vector<FixtureResult> run_fixtures(const std::vector<std::string>& ids,
                                        DiskEngine engine = DiskEngine::Walk,
                                        const WalkLimits& lim = WalkLimits{});

}  // namespace augres
