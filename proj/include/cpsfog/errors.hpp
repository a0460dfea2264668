#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cpsfog {

// Fatal scenario error: aborts the run (scheduling in the past, registry
// desync, unknown ids in event handlers).
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by scenario parsing when the file is not well-formed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries every validation failure found in a scenario, not just the first.
struct ValidationError : std::runtime_error {
    std::vector<std::string> issues;

    explicit ValidationError(std::vector<std::string> list)
        : std::runtime_error(join(list)), issues(std::move(list)) {}

private:
    static std::string join(const std::vector<std::string>& list) {
        std::string s = "scenario validation failed:";
        for (const auto& i : list) {
            s += "\n  - ";
            s += i;
        }
        return s;
    }
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cpsfog
