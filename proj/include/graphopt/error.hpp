// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphopt {

enum class Errc {
  // graph construction and edits
  OutOfRangeVertex,
  SelfLoop,
  DuplicateEdge,
  AdditionAlreadyPresent,
  RemovalAbsent,
  IsolatedVertex,
  InfeasibleParameters,
  // parsing
  MalformedHeader,
  MalformedEdgeLine,
  MalformedRational,
  // numerics and limits
  ConvergenceFailure,
  ExactLimitExceeded,
  SearchSpaceTooLarge,
  DimensionMismatch,
  SingularSystem,
  // cuts
  EmptySide,
  ZeroVolumeSide,
  OddVertexCount,
  // rewiring
  DisconnectedPair,
  SameVertex,
  EdgeAbsent,
  // reductions
  CertificationFailure,
  DegreeTooHigh,
  PadCompletionFailure,
  ConstantConditionViolated,
  // verification
  VerificationMismatch,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Process exit code used by the command line front end for an error class.
/// 2 parse, 3 resource or limit, 4 invalid parameters, 5 verification mismatch.
int exit_code_for(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace graphopt
