// Text grammar for group specifications.
//
//   perm(n; (1,2)(3,4), (1,2,3))     cycles on points 1..n; points may also be space separated
//   metacyclic(n,t,l,r)
//   abelian(d1,d2,...)
//   abc(d1,...; (row1),(row2),...; t)
//   product(S1, S2, ...)
//   sym(n)  alt(n)
//   G1  G2  D<k>  Q<k>  C<k>
//
// Whitespace between tokens is ignored. Errors report the byte offset.

#ifndef CUTGROUPS_SPEC_PARSER_HPP_
#define CUTGROUPS_SPEC_PARSER_HPP_

#include <string_view>

#include "cutgroups/group_spec.hpp"

namespace cutgroups {

// Throws ParseError.
GroupSpec parse_spec(std::string_view text);

} // namespace cutgroups

#endif // CUTGROUPS_SPEC_PARSER_HPP_
