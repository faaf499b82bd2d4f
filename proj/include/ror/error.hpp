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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ror {

enum class ErrorCode {
  validation,
  unknown_alternative,
  unknown_reference_alternative,
  unknown_criterion,
  unknown_session,
  unknown_dm,
  index_out_of_range,
  missing_evaluation_unsupported,
  range_undeclared,
  incompatible_session,
  incompatible_sorting,
  level_incompatible,
  dm_incompatible,
  empty_coalition,
  not_transitive,
  solver_failure,
  milp_failure,
  bad_request,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code` drives CLI exit codes and
// HTTP statuses, `details` carries per-field diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace ror
