#pragma once

// Verification sweeps shared by the command line and the acceptance run.
//
// A suite is a list of independent cases.  Cases fan out over worker threads
// and the results come back in enumeration order, so output is identical for
// any number of jobs.

#include <string>
#include <string_view>
#include <vector>

namespace supermac::verify {

struct CaseResult {
    std::string suite;
    std::string check;    // what was compared, e.g. "closed_form", "routes"
    std::string subject;  // superpartition, composition, or probe set
    bool pass = false;
    std::string detail;   // empty on success unless there is something to report
};

/// norms, eval, eval2, duality, pieri, recursions, hecke, zeta.
const std::vector<std::string>& suite_names();

/// Runs every case of `suite` with |Λ| ≤ max_deg on at most `jobs` threads
/// (jobs ≤ 0 means one per hardware thread).  Throws std::invalid_argument
/// for an unknown suite name.
std::vector<CaseResult> run_suite(std::string_view suite, int max_deg, int jobs);

/// Random polynomial probes per relation and per N in the hecke suite.
inline constexpr int kProbesPerN = 20;

}  // namespace supermac::verify
