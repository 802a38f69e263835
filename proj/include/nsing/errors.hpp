#pragma once

#include <stdexcept>
#include <string>

namespace nsing {

enum class ErrorKind {
    NonPrimitiveInput,
    EqualVectors,
    NonCoprime,
    NotEmpty,
    Degenerate,
    NotAVertex,
    NotIsolated,
    NoCompactFace,
    NotRationalHomologySphere,
    NotNegativeDefinite,
    NegativeDefinitenessViolated,
    Disconnected,
    NotTree,
    KindMismatch,
    PreconditionViolated,
    InternalCheckFailed,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& what)
        : std::runtime_error(std::string(error_name(k)) + ": " + what), kind_(k) {}
    ErrorKind kind() const { return kind_; }
    const char* name() const { return error_name(kind_); }

private:
    ErrorKind kind_;
};

// Used for consistency assertions that must hold by theory; a failure points at a bug.
inline void check(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::InternalCheckFailed, what);
}

}  // namespace nsing
