#pragma once

#include <stdexcept>
#include <string>

#include "segre/cohomology.hpp"

// Tiny expression language for sheaves:
//
//   atom := O(<divisor>) | O(<a>,<b>) | O(<k>) | Omega(<divisor>) | L
//   term := [<m>*] atom
//   sum  := term (+ term)*
//   expr := sum | ext( sum ; sum )
//
// A divisor is a signed combination of F and L, e.g. `O(2F-3L)`;
// `O(k)` means O(kH) and `L` is the bundle O(F-L). Any atom or ext(...)
// may carry twist suffixes `(t)` meaning (x) O(tH). Whitespace is
// ignored; multiplicities must be positive.

namespace segre {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected);

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

Sheaf parse_sheaf_expr(const std::string& input);  // throws ParseError

// Canonical form; reparses to an equal value.
std::string print_sheaf_expr(const Sheaf& s);

}  // namespace segre
