// Copyright 2026 The clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace clopen {

// Arguments that violate a constructor or operation contract.
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation invoked outside its stated precondition.
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable resource bound (period cap, closure cap) was exceeded.
class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index outside the valid range of a finite set.
class RangeError : public std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Negative answers that are results, not errors: a separator that finds the
// point is inside the class, a search that exhausts its bound, and so on.
enum class FailCode {
  NotSeparable,
  SearchBoundExceeded,
  NoTopologyInNeighborhood,
  NoFunctionInNeighborhood,
  NotExtendable,
  CannotExtend,
  NotUniversal,
  InvariantViolated,
  DenseClassNotSeparable,
};

inline const char* fail_code_name(FailCode code) {
  switch (code) {
    case FailCode::NotSeparable: return "NotSeparable";
    case FailCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case FailCode::NoTopologyInNeighborhood: return "NoTopologyInNeighborhood";
    case FailCode::NoFunctionInNeighborhood: return "NoFunctionInNeighborhood";
    case FailCode::NotExtendable: return "NotExtendable";
    case FailCode::CannotExtend: return "CannotExtend";
    case FailCode::NotUniversal: return "NotUniversal";
    case FailCode::InvariantViolated: return "InvariantViolated";
    case FailCode::DenseClassNotSeparable: return "DenseClassNotSeparable";
  }
  return "Unknown";
}

struct Fail {
  FailCode code;
  std::string detail;
};

inline Fail fail(FailCode code, std::string detail = {}) {
  return Fail{code, std::move(detail)};
}

// Either a value or a structured negative answer.
template <class T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Fail f) : v_(std::move(f)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T& value() & { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }

  const Fail& failure() const { return std::get<Fail>(v_); }

 private:
  std::variant<T, Fail> v_;
};

}  // namespace clopen
