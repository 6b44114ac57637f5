#pragma once

#include <string>
#include <string_view>

#include "hln/ast.hpp"

namespace hln {

/// Parse a program in the high-level notation.
///
/// Grammar:  P ::= A; P | ()   with the eight actions
///   bind(a, b, c, r)    dimerize(a, b, c, r)
///   activate(a, b, c, r)    activateAnddissociate(a, b, c, d, r)
///   phosphorylate(a, b, c, r)    dissociate(a, b, c, r)
///   degrade(a, r)    hydrolyze(a, b, r)
///
/// Whitespace between tokens is insignificant. The trailing "()" terminator
/// is accepted but optional. Rates accept decimal and scientific notation
/// and must be positive and finite. Species identifiers may not collide
/// with action keywords.
///
/// Throws ParseError with 1-based line/column on any violation.
Process parse_program(std::string_view source);

/// Canonical textual form. parse_program(format_program(p)) == p.
/// Actions are joined by "; "; the empty process prints as "()".
std::string format_program(const Process& p);

}  // namespace hln
