//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/error.hpp"

namespace camd {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ValenceViolation: return "ValenceViolation";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::RingCountMismatch: return "RingCountMismatch";
    case ErrorCode::NoCover: return "NoCover";
    case ErrorCode::AmbiguousCover: return "AmbiguousCover";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::TransformDomain: return "TransformDomain";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::SingularDesignMatrix: return "SingularDesignMatrix";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UndefinedKappa: return "UndefinedKappa";
    case ErrorCode::UncoloredElement: return "UncoloredElement";
    case ErrorCode::MissingHeight: return "MissingHeight";
    case ErrorCode::HeightMismatch: return "HeightMismatch";
    case ErrorCode::NoAssembly: return "NoAssembly";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NoFeasibleIndividual: return "NoFeasibleIndividual";
    case ErrorCode::NoFeasibleStart: return "NoFeasibleStart";
    case ErrorCode::NoCandidates: return "NoCandidates";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DanglingFragmentRef: return "DanglingFragmentRef";
    case ErrorCode::InconsistentBounds: return "InconsistentBounds";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace camd
