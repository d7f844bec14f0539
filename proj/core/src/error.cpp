// Copyright 2026 The stereobench Authors
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

#include "stereobench/error.hpp"

namespace stereobench {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kIndex: return "index";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kMalformedHeader: return "malformed-header";
    case ErrorCode::kTruncatedPayload: return "truncated-payload";
    case ErrorCode::kZeroScale: return "zero-scale";
    case ErrorCode::kNonFinite: return "non-finite";
    case ErrorCode::kUnsupportedFormat: return "unsupported-format";
    case ErrorCode::kMissingRoot: return "missing-root";
    case ErrorCode::kMissingFile: return "missing-file";
    case ErrorCode::kEmptyManifest: return "empty-manifest";
    case ErrorCode::kDecode: return "decode";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kEmptyValidSet: return "empty-valid-set";
  }
  return "unknown";
}

std::string_view Error::detail() const noexcept {
  std::string_view w = what();
  const std::string_view name = error_code_name(code_);
  if (w.starts_with(name) && w.substr(name.size()).starts_with(": "))
    w.remove_prefix(name.size() + 2);
  return w;
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace stereobench
