#pragma once

// Text format for generator matrices:
//
//   # comment lines and blank lines are ignored
//   q <order> [modulus <c0> <c1> ... <cm>]
//   n <length>
//   k <rows>
//   <k lines of n integers in [0, q)>
//
// Modulus coefficients run from the constant term up and must describe a monic
// irreducible polynomial of degree m, where q = p^m.

#include "ghwlrc/linear_code.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghwlrc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

LinearCode parse_code_file(std::string_view text);
LinearCode read_code_file(const std::string& path);

/// Writes the canonical generator; the modulus is spelled out for extension fields.
std::string serialize_code_file(const LinearCode& code);
void write_code_file(const std::string& path, const LinearCode& code);

} // namespace ghwlrc
