// Copyright 2026 The dnnmis Authors
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

namespace dnnmis {

/// Base of every error the library throws. The C API maps each subclass to
/// one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad file contents, out-of-range vertex ids, bad CLI values.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size cap (complement materialization, oracle).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a precondition (length mismatch, bad config value).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values reached the optimizer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A produced solution failed its independent re-check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dnnmis
