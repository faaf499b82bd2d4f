// Copyright 2026 The imprecise-ror Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ror/error.hpp"

#include <utility>

namespace ror {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation: return "ValidationError";
    case ErrorCode::unknown_alternative: return "UnknownAlternative";
    case ErrorCode::unknown_reference_alternative: return "UnknownReferenceAlternative";
    case ErrorCode::unknown_criterion: return "UnknownCriterion";
    case ErrorCode::unknown_session: return "UnknownSession";
    case ErrorCode::unknown_dm: return "UnknownDm";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::missing_evaluation_unsupported: return "MissingEvaluationUnsupported";
    case ErrorCode::range_undeclared: return "RangeUndeclared";
    case ErrorCode::incompatible_session: return "IncompatibleSession";
    case ErrorCode::incompatible_sorting: return "IncompatibleSorting";
    case ErrorCode::level_incompatible: return "LevelIncompatible";
    case ErrorCode::dm_incompatible: return "DmIncompatible";
    case ErrorCode::empty_coalition: return "EmptyCoalition";
    case ErrorCode::not_transitive: return "NotTransitive";
    case ErrorCode::solver_failure: return "SolverFailure";
    case ErrorCode::milp_failure: return "MilpFailure";
    case ErrorCode::bad_request: return "BadRequest";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::string> details)
    : std::runtime_error(message), code_(code), details_(std::move(details)) {}

}  // namespace ror
