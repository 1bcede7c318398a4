/* Copyright (C) 2026 The dlchar Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef DLCHAR_ERRORS_HPP
#define DLCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlchar {

// Every failure raised by the library derives from Error.  The C API maps
// each subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A lift or coset representative that does not satisfy the transporter
// condition it was supposed to satisfy.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Raised when an exact identity that must hold by construction fails, e.g. a
// character value that is not an algebraic integer.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlchar

#endif  // DLCHAR_ERRORS_HPP
