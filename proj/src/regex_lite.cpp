#include "mpj/regex_lite.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "mpj/error.hpp"

namespace mpj {

namespace {

bool reserved(char c) { return c == '(' || c == ')' || c == '*' || c == '+'; }

/// An expression plus, when it denotes a plain set of single letters, that
/// set; only such pieces may be starred.
struct Piece {
  LangExpr expr;
  std::optional<std::vector<int>> letters;
};

struct Parser {
  const std::string& text;
  size_t pos = 0;
  AlphabetRef alphabet;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  bool plus_is_postfix() const {
    if (peek() != '+') return false;
    char next = pos + 1 < text.size() ? text[pos + 1] : '\0';
    return next == '\0' || next == ')' || next == '*' || next == '+';
  }

  Piece parse_expr() {
    std::vector<Piece> parts{parse_concat()};
    while (peek() == '+' && !plus_is_postfix()) {
      ++pos;
      parts.push_back(parse_concat());
    }
    if (parts.size() == 1) return std::move(parts[0]);
    std::optional<std::vector<int>> letters{std::in_place};
    for (const Piece& p : parts) {
      if (!p.letters) {
        letters.reset();
        break;
      }
      letters->insert(letters->end(), p.letters->begin(), p.letters->end());
    }
    if (letters) {
      std::sort(letters->begin(), letters->end());
      letters->erase(std::unique(letters->begin(), letters->end()),
                     letters->end());
      return {LangExpr::letter_set(alphabet, *letters), letters};
    }
    std::vector<LangExpr> exprs;
    exprs.reserve(parts.size());
    for (Piece& p : parts) exprs.push_back(std::move(p.expr));
    return {LangExpr::union_of(std::move(exprs)), std::nullopt};
  }

  Piece parse_concat() {
    std::vector<LangExpr> factors;
    std::vector<int> pending;  // literal letters awaiting a word atom
    auto flush = [&] {
      if (pending.empty()) return;
      factors.push_back(LangExpr::word(Word(alphabet, pending)));
      pending.clear();
    };
    std::optional<Piece> only_letter_set;
    int pieces = 0;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || (c == '+' && !plus_is_postfix())) break;
      Piece f = parse_factor();
      ++pieces;
      if (f.letters && f.expr.op() == LangOp::kWord) {
        pending.push_back((*f.letters)[0]);
        if (pieces == 1) only_letter_set = f;
        continue;
      }
      only_letter_set = pieces == 1 ? std::optional<Piece>(f) : std::nullopt;
      flush();
      factors.push_back(std::move(f.expr));
    }
    if (pieces == 0) throw Error("regex: empty expression at position " +
                                 std::to_string(pos));
    if (pieces == 1 && only_letter_set) return *only_letter_set;
    flush();
    if (factors.size() == 1) return {std::move(factors[0]), std::nullopt};
    return {LangExpr::concat(std::move(factors)), std::nullopt};
  }

  Piece parse_factor() {
    Piece base = parse_atom();
    while (true) {
      if (peek() == '*') {
        ++pos;
        base = iterate(base, 0);
      } else if (plus_is_postfix()) {
        ++pos;
        base = iterate(base, 1);
      } else {
        break;
      }
    }
    return base;
  }

  Piece iterate(const Piece& base, int at_least) {
    if (!base.letters)
      throw Error("regex: '*' and one-or-more '+' apply to letter sets only");
    LangExpr e = at_least == 0
                     ? LangExpr::letters_star(alphabet, *base.letters)
                     : LangExpr::letters_at_least(alphabet, *base.letters, 1);
    return {std::move(e), std::nullopt};
  }

  Piece parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Piece inner = parse_expr();
      if (peek() != ')') throw Error("regex: missing ')' at position " +
                                     std::to_string(pos));
      ++pos;
      return inner;
    }
    if (c == '\0' || reserved(c))
      throw Error(std::string("regex: unexpected '") + (c ? c : '$') +
                  "' at position " + std::to_string(pos));
    ++pos;
    int letter = alphabet->index_of(Symbol(c));
    return {LangExpr::word(Word(alphabet, {letter})), std::vector<int>{letter}};
  }
};

LangExpr parse_shorthand(const std::string& text, size_t dash,
                         AlphabetRef alphabet) {
  std::string word = text.substr(0, dash);
  std::string kind = text.substr(dash + 1);
  if (!alphabet) {
    std::set<char> chars(word.begin(), word.end());
    alphabet = Alphabet::of_chars(std::string(chars.begin(), chars.end()));
  }
  Word u = Word::parse(alphabet, word);
  if (kind == "shuffle") return LangExpr::shuffle_ideal(u);
  if (kind == "factor") return LangExpr::factor(u);
  if (kind == "prefix") return LangExpr::prefix(u);
  if (kind == "suffix") return LangExpr::suffix(u);
  if (kind == "word") return LangExpr::word(u);
  throw Error("regex: unknown shorthand '-" + kind + "'");
}

}  // namespace

LangExpr parse_regex_lite(const std::string& text, AlphabetRef alphabet) {
  if (text.empty()) throw Error("regex: empty pattern");
  if (size_t dash = text.find('-'); dash != std::string::npos)
    return parse_shorthand(text, dash, std::move(alphabet));
  if (!alphabet) {
    std::set<char> chars;
    for (char c : text)
      if (!reserved(c)) chars.insert(c);
    if (chars.empty()) throw Error("regex: no letters in pattern");
    alphabet = Alphabet::of_chars(std::string(chars.begin(), chars.end()));
  }
  Parser parser{text, 0, std::move(alphabet)};
  Piece result = parser.parse_expr();
  if (parser.pos != text.size())
    throw Error("regex: trailing input at position " +
                std::to_string(parser.pos));
  return std::move(result.expr);
}

}  // namespace mpj
