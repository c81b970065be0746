// Copyright 2026 The propaudit Authors
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

#ifndef PROPAUDIT_ERRORS_H_
#define PROPAUDIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace propaudit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad ids, wrong selection size, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to enumerate beyond its configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// No ball around the candidate can hold level * n / k agents.
class InfeasibleLevel : public Error {
 public:
  using Error::Error;
};

class UnsupportedBackend : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace propaudit

#endif  // PROPAUDIT_ERRORS_H_
