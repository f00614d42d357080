#pragma once

// Text formats for words.
//
//   expr  := term*
//   term  := atom ('^' int)?
//   atom  := letter | '(' expr ')'
//   int   := ('-' | '+')? digits
//
// Whitespace is ignored. For words over {a, b} the letters are a, b and their
// inverses A, B; XY-words use x, y, X, Y. Negative powers invert: "a^-1" == "A".

#include <string>
#include <string_view>

#include "orjsj/hnn_subgroup.hpp"
#include "orjsj/word.hpp"

namespace orjsj {

Word parse_word(std::string_view text);
XYWord parse_xy(std::string_view text);

// Accepts a bare word or a presentation "<a, b | W>" / "⟨a, b | W⟩".
Word parse_relator(std::string_view text);

// Caret-power form, e.g. x^-2 y^2 for XXyy. Exponent-one syllables print bare.
std::string format_xy(const XYWord& t);

}  // namespace orjsj
