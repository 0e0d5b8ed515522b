#pragma once

#include <stdexcept>
#include <string>

namespace eulerw {

/* Failure kinds surfaced by the library. The CLI prints the kind name and
   exits with status 3 on domain violations, so these names are part of the
   public surface and must stay stable. */
enum class Errc {
    InvalidPartition,
    EvenPartPresent,
    EmptyInput,
    RepeatedPart,
    RankTooLarge,
    RankTooSmall,
    NotInDomain,
    IndexOutOfRange,
    UnknownIdentity,
    UnknownBuilder,
    NonUnitReciprocal,
    OrderMismatch,
    NonPositiveExponent,
    InternalInvariantViolation,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace eulerw
