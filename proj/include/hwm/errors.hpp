/*
   Copyright 2026 The hwm Authors

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

namespace hwm {

/// Malformed input, usage errors, or a size guard refusing the request.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold was observed to fail.
///
/// `code()` is a short stable tag (for example "NU-BOUND" or
/// "AX-VIOLATION"); `witness()` carries the offending data in text form.
class InternalError : public std::runtime_error {
 public:
  InternalError(std::string code, std::string witness)
      : std::runtime_error(code + ": " + witness), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::string witness_;
};

}  // namespace hwm
