// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/error.hpp"

namespace uavwpt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kRegimeViolation: return "RegimeViolation";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kDurationTooShort: return "DurationTooShort";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kStaticInfeasible: return "StaticInfeasible";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace uavwpt
