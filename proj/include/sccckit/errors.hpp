// Copyright 2026 The sccckit Authors
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

namespace sccckit {

/// Base class of every error raised by the library.
class SccError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SCCCKIT_DEFINE_ERROR(Name)              \
  class Name : public SccError {                \
   public:                                      \
    using SccError::SccError;                   \
  }

SCCCKIT_DEFINE_ERROR(ParseError);
SCCCKIT_DEFINE_ERROR(TypeMismatch);
SCCCKIT_DEFINE_ERROR(IndexOutOfRange);
SCCCKIT_DEFINE_ERROR(NotEndomorphism);
SCCCKIT_DEFINE_ERROR(NotProjector);
SCCCKIT_DEFINE_ERROR(NotUnitary);
SCCCKIT_DEFINE_ERROR(NotPhaseEquivalent);
SCCCKIT_DEFINE_ERROR(RootUnavailable);
SCCCKIT_DEFINE_ERROR(DegenerateSample);
SCCCKIT_DEFINE_ERROR(SemiringLawViolation);
SCCCKIT_DEFINE_ERROR(UnknownSuite);
SCCCKIT_DEFINE_ERROR(UnknownModel);
SCCCKIT_DEFINE_ERROR(IoError);

// Two independent unfoldings of the same categorical quantity disagree.
// Raised only when the underlying model is broken.
SCCCKIT_DEFINE_ERROR(ModelInconsistency);

class AbsorptionMismatch : public ModelInconsistency {
 public:
  using ModelInconsistency::ModelInconsistency;
};

class CriterionDisagreement : public ModelInconsistency {
 public:
  using ModelInconsistency::ModelInconsistency;
};

#undef SCCCKIT_DEFINE_ERROR

}  // namespace sccckit
