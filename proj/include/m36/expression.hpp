#pragma once

// Class expressions such as "psi[5,6]^2*psi[6,5]^2" or "1/2*K + B".
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' digit)?
//   atom   := rational | E[ijk] | F[ij] | G[ij,kl,mn] | psi[i,j] | phi[i,j]
//           | delta[ijk] | delta[ij,k] | delta[ij,kl,mn] | K | B | '(' expr ')'

#include <functional>
#include <stdexcept>
#include <string>

#include "m36/ring.hpp"

namespace m36 {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

using Multiply = std::function<RingElement(const RingElement&, const RingElement&)>;

/// Throws ParseError on bad syntax, exponents above 4 or products above
/// degree 4. `multiply` defaults to the polynomial product.
RingElement parse_expression(const std::string& text, const Multiply& multiply = {});

}  // namespace m36
