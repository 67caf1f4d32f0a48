#pragma once

// Expression parser for polynomials over Z and Q[z].
//
// Grammar (longest-match tokens, juxtaposition is multiplication):
//   poly     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := base ('^' nat)?
//   base     := rational | 'x' | 'y' | 'z' | '(' poly ')'
//   rational := nat ('/' nat)?

#include "rxy/bipoly.hpp"

namespace rxy {

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
};

// parse into qt(R)[x,y]; 'z' is rejected under ring = Int
PolyQ parse_poly(const std::string& text, Ring ring);

// parse a polynomial that must be integral (an element of R[x,y])
PolyR parse_poly_integral(const std::string& text, Ring ring);

// scalar conveniences built on the same grammar
RingElem parse_ring_elem(const std::string& text, Ring ring);
FracElem parse_frac_elem(const std::string& text, Ring ring);

}  // namespace rxy
