// Copyright 2026 The Robokit Authors
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

namespace robokit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition. `key` names the offending
/// field (config key, joint name, argument) when there is one.
class ValidationError : public Error {
 public:
  ValidationError(std::string key, const std::string& what)
      : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class ConfigParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionError : public ValidationError {
 public:
  DimensionError(std::size_t expected, std::size_t got)
      : ValidationError("q", "expected " + std::to_string(expected) +
                                 " joint values, got " + std::to_string(got)) {}
};

class JointLimitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Raised when a subsystem is accessed that the config disables or the
/// backend does not provide.
class CapabilityError : public Error {
 public:
  explicit CapabilityError(std::string subsystem, const std::string& why)
      : Error(subsystem + ": " + why), subsystem_(std::move(subsystem)) {}
  const std::string& subsystem() const noexcept { return subsystem_; }

 private:
  std::string subsystem_;
};

}  // namespace robokit
