#ifndef HWB_ERROR_HPP
#define HWB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hwb {

enum class ErrorKind {
    InvalidInput,
    RankMismatch,
    NotAUnit,
    NotLie,
    NotPure,
    InvalidIndex,
    NotInClosure,
    NotInGroup,
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace hwb

#endif
