// Copyright 2026 The qdp developers
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

#ifndef QDP_ERRORS_HPP_
#define QDP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qdp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QDP_DEFINE_ERROR(NAME)     \
  class NAME : public Error {      \
   public:                         \
    using Error::Error;            \
  }

// Schema / dataset loading.
QDP_DEFINE_ERROR(SchemaError);
QDP_DEFINE_ERROR(UnknownAttributeError);
QDP_DEFINE_ERROR(UnknownValueError);
QDP_DEFINE_ERROR(WidthOverflowError);
QDP_DEFINE_ERROR(EmptyDatasetError);
QDP_DEFINE_ERROR(DuplicateRowsError);

// Query parsing.
QDP_DEFINE_ERROR(QuerySyntaxError);

// Circuits and states.
QDP_DEFINE_ERROR(IndexOutOfRangeError);
QDP_DEFINE_ERROR(DimensionMismatchError);
QDP_DEFINE_ERROR(UnsupportedGateError);

// Mechanisms.
QDP_DEFINE_ERROR(NTooSmallError);
QDP_DEFINE_ERROR(MTooLargeForPostLaplaceError);

// Noise channels.
QDP_DEFINE_ERROR(NotDensityMatrixError);
QDP_DEFINE_ERROR(ZeroPError);

// Encrypted execution.
QDP_DEFINE_ERROR(KeyLengthMismatchError);
QDP_DEFINE_ERROR(UnknownGateError);

// Accounting.
QDP_DEFINE_ERROR(NegativeBudgetError);

#undef QDP_DEFINE_ERROR

}  // namespace qdp

#endif  // QDP_ERRORS_HPP_
