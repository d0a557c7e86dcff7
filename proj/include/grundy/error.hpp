// Copyright 2026 The grundy Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grundy {

enum class ErrorCode {
  kIndexOutOfRange,
  kSelfLoop,
  kParseError,
  kArityMismatch,
  kEmptyModule,
  kInvalidParam,
  kNotAPermutation,
  kSizeLimitExceeded,
  kNotPrimeContext,
  kEmptyGraph,
  kNotAPartition,
  kNotAModule,
  kNotNeighborhoodNode,
  kNotInClass,
  kEmptyChildren,
  kBadShape,
  kWrongArity,
  kNotSpiderNode,
  kNotSplitNode,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kEmptyModule: return "EmptyModule";
    case ErrorCode::kInvalidParam: return "InvalidParam";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kNotPrimeContext: return "NotPrimeContext";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kNotAModule: return "NotAModule";
    case ErrorCode::kNotNeighborhoodNode: return "NotNeighborhoodNode";
    case ErrorCode::kNotInClass: return "NotInClass";
    case ErrorCode::kEmptyChildren: return "EmptyChildren";
    case ErrorCode::kBadShape: return "BadShape";
    case ErrorCode::kWrongArity: return "WrongArity";
    case ErrorCode::kNotSpiderNode: return "NotSpiderNode";
    case ErrorCode::kNotSplitNode: return "NotSplitNode";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code is stable and meant for
/// programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::kParseError,
              message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace grundy
