#pragma once

#include <stdexcept>
#include <string>

namespace twinrep {

/// Failure categories raised by the library. Every throwing operation
/// documents which kinds it can raise; nothing else escapes.
enum class ErrorKind {
    NonUnitNegativePower,
    DivisionByZero,
    ZeroSpecialization,
    PoleAtPoint,
    SyntaxError,
    IndexOutOfRange,
    RankMismatch,
    BadStrandCount,
    KindMismatch,
    ZeroScalar,
    BadFamilyTag,
    BlockStructureViolation,
    NotInvolution,
    UnclassifiableInvolution,
    CriterionMismatch,
    DegreeMismatch,
    BadArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Syntax errors additionally carry the 0-based offset of the offending
/// character in the input string.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(ErrorKind::SyntaxError,
                message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace twinrep
