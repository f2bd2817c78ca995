/*
 * Copyright 2026 The mbtd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MBTD_ERROR_HPP
#define MBTD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mbtd {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (index range, self-loop, bad parameters).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// Malformed graph/formula text or family spec.
class ParseError : public Error
{
public:
    using Error::Error;
};

/// Instance larger than the configured size cap of an exhaustive routine.
class CapExceeded : public Error
{
public:
    using Error::Error;
};

/// The search hit its node budget before deciding the position.
class BudgetExceeded : public Error
{
public:
    BudgetExceeded(const std::string& what, unsigned long long nodes) : Error(what), nodes_(nodes) { }
    unsigned long long nodes() const { return nodes_; }

private:
    unsigned long long nodes_;
};

/// Staller won the D-game while Dominator won the S-game. Only a solver bug produces this.
class InconsistentOutcome : public Error
{
public:
    using Error::Error;
};

/// A strategy produced a claimed or out-of-range vertex.
class IllegalMove : public Error
{
public:
    using Error::Error;
};

}

#endif
