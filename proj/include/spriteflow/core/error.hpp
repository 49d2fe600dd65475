#pragma once

#include <stdexcept>
#include <string>

namespace spriteflow {

// Library-wide exception. `what()` carries a human-readable message that
// names the offending field/key/parameter where one exists.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configuration / CLI usage problems (mapped to exit code 2 by the CLI).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace spriteflow
