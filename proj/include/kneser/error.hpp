#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Thrown on contract violations: bad parameters, malformed inputs,
// unsupported cases.
class Error : public std::runtime_error {
public:
    explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

}  // namespace kneser
