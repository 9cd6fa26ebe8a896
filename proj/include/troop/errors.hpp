#pragma once

#include <stdexcept>
#include <string>

namespace troop {

enum class ErrorCode {
    // ingestion
    MissingColumn,
    EmptyInput,
    IrregularSampling,
    MisalignedAnnotation,
    UnknownEntity,
    IoError,
    // segmentation / sweep
    ResolutionTooCoarse,
    ResolutionMismatch,
    EmptyCandidateSet,
    AllCandidatesFailed,
    // model / evaluation
    DegenerateTarget,
    NonFiniteFeature,
    SchemaMismatch,
    EmptyTargets,
    TooFewGroups,
    LengthMismatch,
    // configuration
    InvalidConfig,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingColumn: return "MissingColumn";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::IrregularSampling: return "IrregularSampling";
        case ErrorCode::MisalignedAnnotation: return "MisalignedAnnotation";
        case ErrorCode::UnknownEntity: return "UnknownEntity";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
        case ErrorCode::ResolutionMismatch: return "ResolutionMismatch";
        case ErrorCode::EmptyCandidateSet: return "EmptyCandidateSet";
        case ErrorCode::AllCandidatesFailed: return "AllCandidatesFailed";
        case ErrorCode::DegenerateTarget: return "DegenerateTarget";
        case ErrorCode::NonFiniteFeature: return "NonFiniteFeature";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::EmptyTargets: return "EmptyTargets";
        case ErrorCode::TooFewGroups: return "TooFewGroups";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

// Exit-code classes used by the CLI: 2 = input error, 3 = pipeline failure,
// 4 = configuration error.
inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingColumn:
        case ErrorCode::EmptyInput:
        case ErrorCode::IrregularSampling:
        case ErrorCode::MisalignedAnnotation:
        case ErrorCode::UnknownEntity:
        case ErrorCode::IoError:
            return 2;
        case ErrorCode::InvalidConfig:
        case ErrorCode::InvalidArgument:
            return 4;
        default:
            return 3;
    }
}

}  // namespace troop
