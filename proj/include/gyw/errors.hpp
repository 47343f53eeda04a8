// Copyright 2026 The gyw Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GYW_ERRORS_HPP
#define GYW_ERRORS_HPP

#include <stdexcept>

namespace gyw
{

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the range an operation is defined on.
class ParameterError : public Error
{
public:
    using Error::Error;
};

// Inputs that are individually valid but cannot be combined (e.g. cutoff mismatch).
class UsageError : public Error
{
public:
    using Error::Error;
};

// A truncated series was asked for a coefficient beyond its cutoff.
class OutOfRangeError : public Error
{
public:
    using Error::Error;
};

// A wall or expression does not satisfy an operation's precondition.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

// The value lies outside the domain of a (partial) map.
class DomainError : public Error
{
public:
    using Error::Error;
};

// Malformed external input.
class ValidationError : public Error
{
public:
    using Error::Error;
};

} // namespace gyw

#endif
