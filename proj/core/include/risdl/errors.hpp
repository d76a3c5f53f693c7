// SPDX-License-Identifier: Apache-2.0
//
// risdl: capacity analysis of RIS-assisted opportunistic downlinks
// Copyright (C) 2026 The risdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace risdl {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two scenario points coincide, so a pathloss distance is zero.
class ZeroDistanceError : public DomainError {
public:
    using DomainError::DomainError;
};

// The reflected path vanishes (||diag(f*) g|| == 0).
class DegenerateReflectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Moment matching received m2 <= m1^2.
class NumericalDegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bracketed root search could not enclose the target.
class SearchFailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature ran out of subdivisions before meeting the tolerance.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// Malformed scenario file or unknown key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace risdl
