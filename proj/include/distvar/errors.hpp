#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distvar {

enum class ErrorCode {
    InvalidInput,
    NonSquare,
    DimensionMismatch,
    NonConvergence,
    NotCommuting,
    RetriesExhausted,
    EmptyRange,
    SingularResolvent,
    NotUnitary,
    NotInner,
    DeflationAmbiguous,
    RankDeficiencyUnstable,
    DefectMismatch,
};

std::string_view to_string(ErrorCode code);

// Input errors map to CLI exit code 2, everything else is a numerical failure (3).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace distvar
