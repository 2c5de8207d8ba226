// Copyright 2026 The qdecoh Authors
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

#include "qdecoh/error.hpp"

namespace qdecoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kIndexOutOfRange:
      return "index_out_of_range";
    case ErrorCode::kNotHermitian:
      return "non_hermitian";
    case ErrorCode::kNotPositive:
      return "not_positive";
    case ErrorCode::kNotUnitary:
      return "non_unitary";
    case ErrorCode::kInvalidState:
      return "invalid_state";
    case ErrorCode::kInvalidParameter:
      return "invalid_parameter";
    case ErrorCode::kNotTracePreserving:
      return "not_trace_preserving";
    case ErrorCode::kNotUnital:
      return "not_unital";
    case ErrorCode::kNotCompletelyPositive:
      return "non_cp_channel";
    case ErrorCode::kNoGenerator:
      return "no_generator";
    case ErrorCode::kInvalidGenerator:
      return "invalid_generator";
    case ErrorCode::kDegenerateForm:
      return "degenerate_form";
    case ErrorCode::kMixedState:
      return "mixed_state";
    case ErrorCode::kRegisterTooLarge:
      return "register_too_large";
  }
  return "unknown";
}

}  // namespace qdecoh
