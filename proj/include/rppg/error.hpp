#pragma once

#include <stdexcept>
#include <string>

namespace rppg {

// Thrown for all recoverable pipeline failures: bad inputs, malformed
// files, contract violations. The message carries the offending file or
// index where one exists.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace rppg
