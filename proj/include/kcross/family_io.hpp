#pragma once

#include <kcross/core.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kcross {

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public InputError {
  public:
    ParseError(std::size_t line, const std::string &message);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Family text format:
//
//   # optional comment lines
//   w <width>
//   <c_1> <c_2> ... <c_w>      one vector per line, signed decimal integers
//
// Blank lines are ignored. Duplicate vectors are a parse error.

Family read_family(std::istream &in);
Family parse_family(std::string_view text);

/// Canonical form: the width line followed by the vectors in lexicographic
/// order, single spaces, trailing newline, no comments.
void write_family(std::ostream &out, const Family &family);
std::string format_family(const Family &family);

} // namespace kcross
