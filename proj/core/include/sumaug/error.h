// Copyright 2026 The sumaug Authors.
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

#ifndef SUMAUG_ERROR_H_
#define SUMAUG_ERROR_H_

#include <stdexcept>
#include <string>

namespace sumaug {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration or usage: unknown keys, unbound placeholders, invalid
// parameter ranges. The CLI maps these to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data that cannot be interpreted (corrupt files, wrong magic, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumaug

#endif  // SUMAUG_ERROR_H_
