// Copyright 2026 The KDP Authors
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

#ifndef KDP_ERROR_HPP_
#define KDP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kdp {

// dimension or layout disagreement between operands
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// invalid condition/clamp specification (e.g. goal timestep out of range)
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// object used against a stale or mismatched companion (tape vs net)
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// invalid configuration value or combination
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// numerical abort during training (non-finite loss/gradient/drift)
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

// file i/o failures; subclasses distinguish load rejections
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class BadMagicError : public IoError {
 public:
  explicit BadMagicError(const std::string& what) : IoError(what) {}
};

class VersionError : public IoError {
 public:
  explicit VersionError(const std::string& what) : IoError(what) {}
};

class TruncatedError : public IoError {
 public:
  explicit TruncatedError(const std::string& what) : IoError(what) {}
};

class CrcError : public IoError {
 public:
  explicit CrcError(const std::string& what) : IoError(what) {}
};

}  // namespace kdp

#endif  // KDP_ERROR_HPP_
