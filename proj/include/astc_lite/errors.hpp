// SPDX-License-Identifier: Apache-2.0
// ----------------------------------------------------------------------------
// Copyright 2026 The astc-lite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at:
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.
// ----------------------------------------------------------------------------

/**
 * @brief Exception types thrown by the library.
 *
 * Everything derives from astc_lite::Error so callers that only care about
 * "did it work" can catch a single type. The command-line tool maps the
 * families onto exit codes (IoError -> 2, everything else -> 3).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace astc_lite {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Image dimensions that violate an operation's precondition.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A compressed block that is not in the single configuration this codec supports.
class UnsupportedConfiguration : public Error {
public:
    using Error::Error;
};

/// Malformed or unsupported file content.
class FormatError : public Error {
public:
    using Error::Error;
};

class BadMagicError : public FormatError {
public:
    using FormatError::FormatError;
};

class UnsupportedFootprintError : public FormatError {
public:
    using FormatError::FormatError;
};

class TruncatedDataError : public FormatError {
public:
    using FormatError::FormatError;
};

/// Raster format or sample depth we do not read or write (e.g. 16-bit PNG).
class UnsupportedImageFormat : public FormatError {
public:
    using FormatError::FormatError;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace astc_lite
