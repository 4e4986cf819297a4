#pragma once

#include <stdexcept>
#include <string>

namespace treeprofile {

// Exit-code categories for the CLI.
enum class ErrorClass {
    InvalidInput,   // exit 1
    Infeasible,     // exit 2
    TheoremViolation, // exit 3
    Internal        // exit 4
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), cls_(cls), kind_(std::move(kind)) {}

    ErrorClass error_class() const { return cls_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorClass cls_;
    std::string kind_;
};

inline Error invalid_input(const std::string& kind, const std::string& msg) {
    return Error(ErrorClass::InvalidInput, kind, msg);
}

inline Error infeasible(const std::string& kind, const std::string& msg) {
    return Error(ErrorClass::Infeasible, kind, msg);
}

} // namespace treeprofile
