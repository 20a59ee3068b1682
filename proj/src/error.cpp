#include "galcoh/error.hpp"

namespace galcoh {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NonAssociative: return "NonAssociative";
        case ErrorKind::NoIdentity: return "NoIdentity";
        case ErrorKind::NoInverse: return "NoInverse";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::NotEquivariant: return "NotEquivariant";
        case ErrorKind::NotACocycle: return "NotACocycle";
        case ErrorKind::NotCyclic: return "NotCyclic";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorKind::NotSL: return "NotSL";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::NotACocycleForStructure: return "NotACocycleForStructure";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
    }
    return "Unknown";
}

}  // namespace galcoh
