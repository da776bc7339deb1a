#pragma once

#include <stdexcept>
#include <string>

namespace gsm {

/// Failure categories surfaced by validating constructors and capped
/// enumerations. Messages carry the first violating witness.
enum class Errc {
    not_associative,
    no_identity,
    not_latin_square,
    unsupported_preset,
    order_cap_exceeded,
    not_a_subgroup,
    not_normal,
    identity_not_trivial,
    not_compatible,
    not_permutation,
    ill_defined_action,
    mixed_parents,
    size_cap_exceeded,
    not_a_submodule,
    non_invertible_order,
    syntax_error,
    unknown_check,
    cap_exceeded,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int line = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          line_(line) {}

    Errc code() const { return code_; }
    /// Input line for parse errors, -1 otherwise.
    int line() const { return line_; }

private:
    Errc code_;
    int line_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, int line = -1) {
    throw Error(code, message, line);
}

} // namespace gsm
