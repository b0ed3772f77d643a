#pragma once

#include <string>
#include <vector>

#include "qam/bounds.hpp"
#include "qam/generator.hpp"

namespace qam {

struct CorpusPair {
    Generator f;
    Generator g;
    Interval U;
};

struct SuiteResult {
    std::string name;
    bool ok = true;
    int checks = 0;
    std::string detail;  // first failure, empty when ok
};

// The built-in verification corpus:
//   exp(s) on (0,1) for s in {-20,-15,-5,-1,0,1,5,15,20}
//   power(s) on [1,2] for s in {-1,0,1,2,3}
//   three expression generators on [1,2]
// Selector: "exp", "power" (the [1,2] group), "default"/"all" (both).
std::vector<Generator> corpus_generators(const std::string& selector);

// All unordered pairs within each same-domain group; 64 for "all".
std::vector<CorpusPair> corpus_pairs(const std::string& selector);

// Property suites over the corpus, used by the verify command and the
// acceptance run. All randomness is seeded, so results are reproducible.
SuiteResult sandwich_suite(const std::string& selector,
                           const OptimizerConfig& cfg = {});
SuiteResult comparison_suite(int trials = 1000, unsigned seed = 20240901);
SuiteResult affine_invariance_suite(int trials = 1000, unsigned seed = 20240902);
SuiteResult partition_suite(int functions = 100, unsigned seed = 20240903);
SuiteResult conjugation_suite(int trials = 200, unsigned seed = 20240904);

std::vector<SuiteResult> run_all_suites(const std::string& selector,
                                        const OptimizerConfig& cfg = {});

}  // namespace qam
