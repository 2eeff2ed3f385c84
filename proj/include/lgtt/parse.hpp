#ifndef LGTT_PARSE_HPP
#define LGTT_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lgtt/polynomial.hpp"

namespace lgtt {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := (int | int '/' int | 'i' | var | '(' expr ')') ('^' int)?
// Variables are exactly the names supplied by the caller.
GPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace lgtt

#endif
