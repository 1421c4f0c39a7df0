//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_ERROR_HPP
#define CAMD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace camd {

enum class ErrorCode {
  // graph construction / validation
  InvalidArgument,
  UnknownElement,
  Disconnected,
  ValenceViolation,
  DuplicateEdge,
  RingCountMismatch,
  // decomposition
  NoCover,
  AmbiguousCover,
  // property models
  UnknownGroup,
  TransformDomain,
  LevelMismatch,
  Underdetermined,
  SingularDesignMatrix,
  // topological indices
  IsolatedVertex,
  DivisionByZero,
  UndefinedKappa,
  // signatures
  UncoloredElement,
  MissingHeight,
  HeightMismatch,
  // feasibility / assembly
  NoAssembly,
  // solver
  Infeasible,
  SearchSpaceTooLarge,
  NoFeasibleIndividual,
  NoFeasibleStart,
  NoCandidates,
  // io
  ParseError,
  DuplicateName,
  DanglingFragmentRef,
  InconsistentBounds,
  Internal,
};

const char *error_code_name(ErrorCode code);

/// Exception carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace camd

#endif  // CAMD_ERROR_HPP
