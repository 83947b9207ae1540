#pragma once

#include <stdexcept>
#include <string>

namespace pic {

// Enumerations abort with this once they pass the configured cap; the CLI
// turns it into a "refused" document instead of burning CPU forever.
struct CeilingExceeded : std::runtime_error {
    explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct CeilingCounter {
    long long limit;
    long long used = 0;
    const char* what;

    CeilingCounter(long long limit_, const char* what_) : limit(limit_), what(what_) {}

    void tick(long long amount = 1) {
        used += amount;
        if (used > limit)
            throw CeilingExceeded(std::string(what) + ": enumeration ceiling of " +
                                  std::to_string(limit) + " exceeded");
    }
};

}  // namespace pic
