#pragma once

// Named verification suites driven by `seqlab verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace seqlab::verify {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool passed() const;
};

struct SuiteOptions {
    unsigned n_lo = 0, n_hi = 0;   // index range; 0/0 selects the suite default
    unsigned max = 0;              // lemma3 bound on k, l
    std::size_t horizon = 0;       // 0 selects the suite default
    int delta = 0;                 // 0 selects every delta the suite covers
    std::uint64_t seed = 20230401;
    std::size_t samples = 10000;
};

/// fib-properties, lemma3, lemma4, prop1, derived, returns, obs1, balanced,
/// theorem5, golden-sign, all
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace seqlab::verify
