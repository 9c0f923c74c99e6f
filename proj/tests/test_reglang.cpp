#include "doctest.h"
#include "mpj/lang.hpp"
#include "mpj/regex_lite.hpp"

using namespace mpj;

namespace {

const AlphabetRef kAB = Alphabet::of_chars("ab");
const AlphabetRef kABC = Alphabet::of_chars("abc");

Word w(const AlphabetRef& a, const std::string& s) { return Word::parse(a, s); }

bool in(const LangExpr& e, const std::string& s) {
  return member(e, Word::parse(e.alphabet(), s));
}

void check_scan_agrees_with_dfa(const LangExpr& e, int max_len) {
  Dfa d = compile(e);
  WordEnumerator en(e.alphabet(), 0, max_len);
  while (auto word = en.next()) CHECK(member(e, *word) == d.member(*word));
}

}  // namespace

TEST_CASE("atom membership") {
  CHECK(in(LangExpr::shuffle_ideal(w(kAB, "ab")), "aabb"));
  CHECK(in(LangExpr::shuffle_ideal(w(kAB, "ab")), "ba") == false);
  CHECK(in(LangExpr::factor(w(kAB, "ab")), "bab"));
  CHECK_FALSE(in(LangExpr::factor(w(kAB, "ab")), "ba"));
  CHECK(in(LangExpr::prefix(w(kAB, "ab")), "abb"));
  CHECK_FALSE(in(LangExpr::prefix(w(kAB, "ab")), "aab"));
  CHECK(in(LangExpr::suffix(w(kAB, "ab")), "aab"));
  CHECK(in(LangExpr::word(w(kAB, "ab")), "ab"));
  CHECK_FALSE(in(LangExpr::word(w(kAB, "ab")), "abb"));
  CHECK(in(LangExpr::letters_star(kAB, {0}), ""));
  CHECK(in(LangExpr::letters_star(kAB, {0}), "aaa"));
  CHECK_FALSE(in(LangExpr::letters_star(kAB, {0}), "ab"));
  CHECK(in(LangExpr::letters_at_least(kAB, {0}, 2), "aa"));
  CHECK_FALSE(in(LangExpr::letters_at_least(kAB, {0}, 2), "a"));
  CHECK(in(LangExpr::universe(kAB), "ba"));
  CHECK_FALSE(in(LangExpr::none(kAB), ""));
}

TEST_CASE("scanning and compiled membership agree") {
  check_scan_agrees_with_dfa(LangExpr::shuffle_ideal(w(kAB, "ab")), 6);
  check_scan_agrees_with_dfa(LangExpr::threshold_block(kABC, {w(kABC, "ab")}, 2), 5);
  check_scan_agrees_with_dfa(
      LangExpr::threshold_block(kABC, {w(kABC, "ab"), w(kABC, "c")}, 2), 5);
  check_scan_agrees_with_dfa(
      LangExpr::concat({LangExpr::prefix(w(kAB, "a")),
                        LangExpr::complement(LangExpr::factor(w(kAB, "bb")))}),
      6);
  check_scan_agrees_with_dfa(parse_regex_lite("(a+b)*ac+"), 6);
}

TEST_CASE("threshold blocks: factor occurrence or l scattered copies") {
  LangExpr block = LangExpr::threshold_block(kABC, {w(kABC, "ab")}, 2);
  CHECK(in(block, "ab"));       // explicit factor
  CHECK(in(block, "acbacb"));   // abab embeds, no factor
  CHECK_FALSE(in(block, "acb"));
  CHECK_FALSE(in(block, "ba"));

  LangExpr two = LangExpr::threshold_block(kABC, {w(kABC, "c"), w(kABC, "a")}, 2);
  CHECK(in(two, "ca"));
  CHECK(in(two, "bcba"));
  CHECK_FALSE(in(two, "ac"));
}

TEST_CASE("threshold at l = 1 collapses to a shuffle ideal") {
  LangExpr block =
      LangExpr::threshold_block(kABC, {w(kABC, "ab"), w(kABC, "c")}, 1);
  Dfa lhs = compile(block);
  Dfa rhs = compile(LangExpr::shuffle_ideal(w(kABC, "abc")));
  CHECK_FALSE(dfa_equal(lhs, rhs).has_value());
}

TEST_CASE("single-letter lists collapse to shuffle ideals at any l") {
  Dfa lhs = compile(
      LangExpr::threshold_block(kABC, {w(kABC, "c"), w(kABC, "a")}, 2));
  Dfa rhs = compile(LangExpr::shuffle_ideal(w(kABC, "ca")));
  CHECK_FALSE(dfa_equal(lhs, rhs).has_value());
}

TEST_CASE("the threshold identity for (a+b)*ac+") {
  LangExpr lhs = LangExpr::intersection_of(
      {LangExpr::complement(
           LangExpr::threshold_block(kABC, {w(kABC, "c"), w(kABC, "a")}, 2)),
       LangExpr::complement(
           LangExpr::threshold_block(kABC, {w(kABC, "c"), w(kABC, "b")}, 2)),
       LangExpr::threshold_block(kABC, {w(kABC, "ac")}, 2)});
  CHECK_FALSE(dfa_equal(compile(lhs), compile(parse_regex_lite("(a+b)*ac+")))
                  .has_value());
}

TEST_CASE("equivalence counterexamples are shortest") {
  Dfa da = compile(LangExpr::shuffle_ideal(w(kAB, "ab")));
  Dfa db = compile(LangExpr::shuffle_ideal(w(kAB, "ba")));
  auto diff = dfa_equal(da, db);
  REQUIRE(diff.has_value());
  CHECK(diff->length() == 2);
  CHECK(da.member(*diff) != db.member(*diff));
}

TEST_CASE("word counting") {
  Dfa d = compile(LangExpr::shuffle_ideal(w(kAB, "ab")));
  CHECK(count_words(d, 3) == std::vector<long long>{0, 0, 1, 4});
}

TEST_CASE("k-piecewise testability") {
  Dfa d = compile(LangExpr::shuffle_ideal(w(kAB, "ab")));
  CHECK_FALSE(is_k_pt(d, 1));
  CHECK(is_k_pt(d, 2));
  CHECK(is_k_pt(d, 3));
  CHECK_FALSE(is_k_pt(compile(parse_regex_lite("(a+b)*ac+")), 4));
}

TEST_CASE("class cap aborts piecewise-testability decisions") {
  CHECK_THROWS_AS(is_k_pt(compile(parse_regex_lite("(a+b)*ac+")), 3, 5),
                  CapExceeded);
}

TEST_CASE("costa forms evaluate and match their characterization") {
  // a (ab)* a with r = 0: words a...a over {a,b} without bb and length >= 2.
  CostaForm f;
  f.alphabet = kAB;
  f.r = 1;
  f.u = {w(kAB, "a"), w(kAB, "a")};
  f.sets = {{1}};
  f.validate();
  LangExpr lang = costa_lang(f);
  CHECK(in(lang, "aa"));
  CHECK(in(lang, "aba"));
  CHECK(in(lang, "abba"));
  CHECK_FALSE(in(lang, "ab"));
  CHECK_FALSE(dfa_equal(compile(lang), compile(costa_K(f))).has_value());
}

TEST_CASE("costa validation rejects malformed shapes") {
  CostaForm bad;
  bad.alphabet = kAB;
  bad.r = 0;
  bad.u = {w(kAB, "a")};
  bad.sets = {{0}};  // u count must be one more than set count
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("r and s languages agree with the block at matched exponents") {
  // Union over all exponent vectors must reproduce the block language.
  std::vector<Word> us{w(kABC, "ab"), w(kABC, "c")};
  int l = 2;
  std::vector<LangExpr> parts;
  for (int a1 = 1; a1 <= l; ++a1)
    for (int a2 = 1; a2 <= l; ++a2)
      parts.push_back(LangExpr::intersection_of(
          {LangExpr::r_lang(kABC, us, l, {a1, a2}),
           LangExpr::s_lang(kABC, us, l, {a1, a2})}));
  Dfa lhs = compile(LangExpr::union_of(std::move(parts)));
  Dfa rhs = compile(LangExpr::threshold_block(kABC, us, l));
  CHECK_FALSE(dfa_equal(lhs, rhs).has_value());
}

TEST_CASE("regex-lite parses postfix and shorthand patterns") {
  LangExpr e = parse_regex_lite("(a+b)*ac+");
  CHECK(e.alphabet()->to_string() == "abc");
  CHECK(in(e, "ac"));
  CHECK(in(e, "bac"));
  CHECK(in(e, "abacc"));
  CHECK_FALSE(in(e, "aca"));
  CHECK_FALSE(in(e, "c"));
  CHECK_FALSE(in(e, ""));

  CHECK_FALSE(
      dfa_equal(compile(parse_regex_lite("ab-shuffle")),
                compile(LangExpr::shuffle_ideal(w(kAB, "ab")))).has_value());

  LangExpr sum = parse_regex_lite("ab+ba");
  CHECK(in(sum, "ab"));
  CHECK(in(sum, "ba"));
  CHECK_FALSE(in(sum, "aa"));
}

TEST_CASE("regex-lite rejects what the atoms cannot express") {
  CHECK_THROWS_AS(parse_regex_lite("(ab)*"), Error);
  CHECK_THROWS_AS(parse_regex_lite(""), Error);
  CHECK_THROWS_AS(parse_regex_lite("a("), Error);
  CHECK_THROWS_AS(parse_regex_lite("a)"), Error);
  CHECK_THROWS_AS(parse_regex_lite("ab-spindle"), Error);
}

TEST_CASE("state cap names the offending subexpression") {
  LangExpr big = LangExpr::shuffle_ideal(w(kAB, "ababababab"));
  CHECK_THROWS_AS(compile(big, 3), CapExceeded);
}
