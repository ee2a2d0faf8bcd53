/* Copyright 2026 The yangian-omega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef YANGIAN_ERRORS_HPP
#define YANGIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace yangian {

// Mismatched contexts, out-of-range indices, malformed arguments.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A computation would exceed its configured size budget.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed algebra specification file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace yangian

#endif  // YANGIAN_ERRORS_HPP
