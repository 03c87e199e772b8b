// Copyright 2026 The locreal Authors
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

#ifndef LOCREAL_ERRORS_H
#define LOCREAL_ERRORS_H

#include <stdexcept>
#include <string>

namespace locreal {

/// Input rejected by a constructor or precondition check (CLI exit status 1).
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Shapes of the operands do not agree.
class DimensionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// A value lies outside its declared domain (outcome set, probability range...).
class DomainError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// The hypothesis of an inequality is not met, so the bound cannot be claimed
/// (CLI exit status 2).
class HypothesisError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A proven bound or structural invariant was observed broken. This always
/// indicates a bug or corrupted input that slipped past validation (CLI exit
/// status 3).
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace locreal

#endif
