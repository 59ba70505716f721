/* Copyright 2026 The Pentagram Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <stdexcept>
#include <string>

namespace pentagram {

// Error categories map one-to-one onto the C API status codes and the CLI
// exit codes (2 validation, 3 domain precondition, 4 internal invariant).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class InternalError : public Error {
  public:
    using Error::Error;
};

#define PENTAGRAM_CHECK(cond, msg)                                           \
    do {                                                                     \
        if (!(cond)) throw ::pentagram::InternalError(std::string(msg));     \
    } while (0)

}  // namespace pentagram
