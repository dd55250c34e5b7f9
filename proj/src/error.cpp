#include "twinrep/error.hpp"

namespace twinrep {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonUnitNegativePower: return "NonUnitNegativePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroSpecialization: return "ZeroSpecialization";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::BadStrandCount: return "BadStrandCount";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::BadFamilyTag: return "BadFamilyTag";
    case ErrorKind::BlockStructureViolation: return "BlockStructureViolation";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::UnclassifiableInvolution: return "UnclassifiableInvolution";
    case ErrorKind::CriterionMismatch: return "CriterionMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BadArgument: return "BadArgument";
    }
    return "UnknownError";
}

} // namespace twinrep
