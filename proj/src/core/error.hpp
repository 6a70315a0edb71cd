/*
Copyright 2026 The brickplan Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace brickplan {

/// Error categories; numeric values are shared with the C API status codes.
enum class ErrorCode {
    Parse = 1,
    Validation = 2,
    Infeasible = 3,
    UnsupportedGeometry = 4,
    Domain = 5,
    Coverage = 6,
    Deadlock = 7,
    Io = 8,
    InvalidArgument = 9,
    EmptyReport = 10,
    Internal = 11,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string &what) : Error(ErrorCode::Parse, what) {}
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string &what) : Error(ErrorCode::Validation, what) {}
};

class InfeasibleError : public Error {
  public:
    explicit InfeasibleError(const std::string &what) : Error(ErrorCode::Infeasible, what) {}
};

class UnsupportedGeometryError : public Error {
  public:
    explicit UnsupportedGeometryError(const std::string &what) : Error(ErrorCode::UnsupportedGeometry, what) {}
};

class DomainError : public Error {
  public:
    explicit DomainError(const std::string &what) : Error(ErrorCode::Domain, what) {}
};

class CoverageError : public Error {
  public:
    explicit CoverageError(const std::string &what) : Error(ErrorCode::Coverage, what) {}
};

class DeadlockError : public Error {
  public:
    explicit DeadlockError(const std::string &what) : Error(ErrorCode::Deadlock, what) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string &what) : Error(ErrorCode::Io, what) {}
};

} // namespace brickplan
