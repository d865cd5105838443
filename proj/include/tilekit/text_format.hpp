#pragma once

#include <string>
#include <string_view>

#include "tilekit/code.hpp"

namespace tilekit {

// Text form: letters a..p are the unprimed letters of pairs 1..16, A..P their
// complements, '*' the star. One word per line, LF newlines; lines starting
// with '#' and blank lines are ignored.

/// Throws ParseError.
Word parse_word(std::string_view text);
/// Throws ParseError (bad symbol, ragged dimensions, duplicate word).
Code parse_code(std::string_view text);
/// Canonical text: sorted words, one per line, each terminated by LF.
std::string serialize(const Code& c);
/// Words joined by `sep` on a single line.
std::string join_words(const Code& c, char sep = ' ');

}  // namespace tilekit
