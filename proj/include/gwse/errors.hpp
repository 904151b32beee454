/*
 * Copyright 2026 The gwse Authors
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

#ifndef GWSE_ERRORS_HPP
#define GWSE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwse {

/// Malformed input document. `where` is a line:column or a JSON field path.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where))
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Well-formed document describing an invalid game.
class ValidationError : public std::runtime_error
{
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// A precondition of a library operation was violated by the caller.
class ContractViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// The brute-force oracle declined an instance larger than its configured bound.
class OracleRefusal : public std::runtime_error
{
public:
    OracleRefusal(std::size_t bound, std::size_t actual, const std::string& what)
        : std::runtime_error(what), bound_(bound), actual_(actual)
    {
    }

    std::size_t bound() const noexcept { return bound_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t bound_;
    std::size_t actual_;
};

} // namespace gwse

#endif
