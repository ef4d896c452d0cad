/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CENDA_ERRORS_HPP
#define CENDA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cenda {

/// Raised for malformed textual input; carries a 1-based source position.
class parse_error : public std::runtime_error {
   public:
    parse_error(const std::string& what, std::size_t line, std::size_t col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t col() const noexcept { return col_; }

   private:
    std::size_t line_;
    std::size_t col_;
};

/// Raised when a configurable resource cap (degree bound, span size) is hit.
class limit_error : public std::runtime_error {
   public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cenda

#endif
