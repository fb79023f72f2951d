#include "hwb/error.hpp"

namespace hwb {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::NotLie: return "NotLie";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::InvalidIndex: return "InvalidIndex";
        case ErrorKind::NotInClosure: return "NotInClosure";
        case ErrorKind::NotInGroup: return "NotInGroup";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

} // namespace hwb
