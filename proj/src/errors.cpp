#include "distvar/errors.hpp"

namespace distvar {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::RetriesExhausted: return "RetriesExhausted";
        case ErrorCode::EmptyRange: return "EmptyRange";
        case ErrorCode::SingularResolvent: return "SingularResolvent";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotInner: return "NotInner";
        case ErrorCode::DeflationAmbiguous: return "DeflationAmbiguous";
        case ErrorCode::RankDeficiencyUnstable: return "RankDeficiencyUnstable";
        case ErrorCode::DefectMismatch: return "DefectMismatch";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput:
        case ErrorCode::NonSquare:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::NotCommuting:
        case ErrorCode::EmptyRange:
        case ErrorCode::NotUnitary:
        case ErrorCode::NotInner:
            return true;
        default:
            return false;
    }
}

}  // namespace distvar
