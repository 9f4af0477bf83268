// Copyright 2026 The Authors.
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

#ifndef GENCONF_ERRORS_H_
#define GENCONF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace genconf {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GENCONF_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

GENCONF_DEFINE_ERROR(InvalidMultiindex);
GENCONF_DEFINE_ERROR(InvalidConfiguration);
GENCONF_DEFINE_ERROR(InvalidPermutation);
GENCONF_DEFINE_ERROR(InvalidTransform);
GENCONF_DEFINE_ERROR(NotGeneric);
GENCONF_DEFINE_ERROR(SamplingExhausted);
GENCONF_DEFINE_ERROR(ImageNotAffine);
GENCONF_DEFINE_ERROR(InvalidDcr);
GENCONF_DEFINE_ERROR(InvalidDimension);
GENCONF_DEFINE_ERROR(ClassificationContradiction);
GENCONF_DEFINE_ERROR(InducedMapInconsistent);
GENCONF_DEFINE_ERROR(TheoremViolation);
GENCONF_DEFINE_ERROR(UnsupportedCase);
GENCONF_DEFINE_ERROR(ParseError);

#undef GENCONF_DEFINE_ERROR

}  // namespace genconf

#endif  // GENCONF_ERRORS_H_
