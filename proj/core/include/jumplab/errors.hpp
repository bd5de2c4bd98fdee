#pragma once

#include <stdexcept>
#include <string>

namespace jumplab {

// Violated input contract. The message names the condition that failed;
// the CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what_arg)
        : std::invalid_argument(what_arg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

} // namespace jumplab
