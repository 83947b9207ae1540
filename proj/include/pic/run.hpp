#pragma once

#include <string>

#include "pic/solver.hpp"

namespace pic {

enum class RunMode { fpt, baseline, oracle, recognize, verify };

struct RunConfig {
    std::string input_path;
    RunMode mode = RunMode::fpt;
    int budget = 0;
    int tau_override = -1;
    long long ceiling = kDefaultCeiling;
    int jobs = 1;
    std::string output_path;  // empty writes to stdout
    std::string result_path;  // verify mode: document to re-check
    bool assume_kernelized = false;
};

// Dispatches one invocation and writes the result document.
// Exit codes: 0 yes, 1 no, 2 refused, 3 input error.
int run(const RunConfig& config);

}  // namespace pic
