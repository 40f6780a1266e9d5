#pragma once

#include <stdexcept>
#include <string>

namespace qpf {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad document, bad field spec, ...).
/// Carries a 1-based position when the error came from a source file.
struct InputError : Error {
    int line = 0;
    int col = 0;
    InputError(const std::string& msg, int line_ = 0, int col_ = 0)
        : Error(line_ > 0 ? std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg : msg),
          line(line_),
          col(col_) {}
};

/// A configured cap was hit (completion length cap, group order cap) or the
/// quotient was detected to be infinite dimensional.
struct CapError : Error {
    using Error::Error;
};

/// An operation was called on an input that does not satisfy its precondition
/// (e.g. Nakayama form construction on a non-split algebra). The analysis
/// pipeline reports these as stage refusals rather than failures.
struct PreconditionError : Error {
    using Error::Error;
};

/// An internal certificate failed: a result that should hold by theorem did
/// not check out. Always a bug or an out-of-scope input; never swallowed.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace qpf
