#pragma once

#include <optional>
#include <string>

#include "pic/ordering.hpp"

namespace pic {

enum class Status { yes, no, refused };

const char* status_name(Status s);

struct SolveStats {
    long long branches_enumerated = 0;
    long long sections = 0;
    long long jump_tuples = 0;
    long long chains = 0;
    long long dp_states = 0;
    long long wall_time_ms = 0;

    SolveStats& operator+=(const SolveStats& o) {
        branches_enumerated += o.branches_enumerated;
        sections += o.sections;
        jump_tuples += o.jump_tuples;
        chains += o.chains;
        dp_states += o.dp_states;
        return *this;  // wall time is tracked by the caller, not summed
    }
};

struct SolveResult {
    Status status = Status::no;
    int cost = -1;                    // only meaningful for yes
    Completion completion;            // |edges| == cost for yes
    std::optional<Ordering> ordering; // umbrella ordering of g + completion, for yes
    SolveStats stats;
    std::string note;                 // refusal reason
};

// Plain-text key-value rendering, one fact per line. Stable field order so
// byte comparison works (minus the wall_time_ms line, which is the only
// nondeterministic field).
std::string render_result(const SolveResult& r);

// render_result with the wall_time_ms line removed
std::string strip_wall_time(const std::string& doc);

struct ParsedResult {
    Status status = Status::no;
    int cost = -1;
    std::vector<Edge> added_edges;
    std::optional<std::vector<int>> ordering_seq;
};

// throws std::runtime_error on malformed documents
ParsedResult parse_result(const std::string& text);

}  // namespace pic
