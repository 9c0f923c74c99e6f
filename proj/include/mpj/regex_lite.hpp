#pragma once

#include <string>

#include "mpj/lang.hpp"

namespace mpj {

/// Sugar over the expression atoms, for the command line.
///
/// Grammar: letters, concatenation, parentheses, `+` for union, postfix `*`
/// and postfix `+` (one-or-more; a `+` is postfix exactly when it is last or
/// followed by `)`, `*` or `+`). Star and one-or-more apply to letter sets
/// only, since the atom language has no general iteration. Shorthands
/// `<word>-shuffle`, `<word>-factor`, `<word>-prefix`, `<word>-suffix` name
/// the corresponding atoms.
///
/// The alphabet is the set of letters appearing in the pattern unless
/// `alphabet` overrides it (it must then contain every letter used).
LangExpr parse_regex_lite(const std::string& text, AlphabetRef alphabet = nullptr);

}  // namespace mpj
