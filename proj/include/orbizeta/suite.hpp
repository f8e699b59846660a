#ifndef ORBIZETA_SUITE_HPP
#define ORBIZETA_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbizeta/report.hpp"

namespace orbizeta {

struct SuiteOptions {
    std::vector<std::uint64_t> qs;     // empty: the selector's default list
    int rmax = 3;
    unsigned nmax = 8;
    std::vector<std::string> models;   // kleinian/threefold filter; empty: all
    std::vector<std::string> surfaces; // symprod/weil filter; empty: defaults
    CountOptions count;
    bool perturb = false;  // corrupt one comparison (tests the exit status)
};

/// Default q lists: kleinian {5,7,11,13}, threefold {4,7,11,13,31},
/// symprod {2,3,4,5,7}, weil {2,3,4,5}.
std::vector<std::uint64_t> default_qs(const std::string& selector);

/// Runs kleinian, threefold, symprod, weil or all.  q values sharing a
/// factor with a model's group order are skipped.  A count that runs out
/// of budget marks only its own report.  Results are sorted by model, then
/// q, then r.  Throws std::invalid_argument on a bad selector, q, model or
/// surface name.
std::vector<VerificationReport> run_suite(const std::string& selector, const SuiteOptions& options);

/// Parses "5,7,11" into a q list; each entry must be a prime power.
std::vector<std::uint64_t> parse_q_list(const std::string& text);

}  // namespace orbizeta

#endif
