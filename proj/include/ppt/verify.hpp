#pragma once

#include <string>
#include <vector>

#include "ppt/corpus.hpp"
#include "ppt/graph.hpp"

namespace ppt {

struct Counterexample {
    std::string graph6;
    std::string observed;
    std::string expected;
};

struct VerificationResult {
    std::string theorem_id;
    std::string corpus;
    std::size_t checked = 0;
    bool passed = true;  // passed iff counterexamples is empty
    std::vector<Counterexample> counterexamples;
    std::string summary;  // extra observations, e.g. the max sum seen in a scan

    // theorem_id<TAB>corpus<TAB>checked<TAB>pass|fail<TAB>g6,g6,... ("-" when none)
    std::string to_tsv() const;
};

struct VerifyOptions {
    // corpus-driven checks; <= 0 means "use the tag's default"
    int n_max = 0;
    int k_min = 0;
    int k_max = 0;
    // parameterized families (ng-family, subdiv gadgets)
    int range_lo = 0;
    int range_hi = 0;
    int workers = 1;
};

// Known theorem tags, in dispatch order.
const std::vector<std::string>& theorem_tags();

// Runs the verifier for one tag. Throws std::invalid_argument for an
// unknown tag or an unsupported corpus scale.
VerificationResult verify_theorem(const std::string& tag, const VerifyOptions& opts = {});

}  // namespace ppt
