#include "doctest.h"
#include "mpj/words.hpp"

#include <set>

using namespace mpj;

TEST_CASE("symbols parse and print") {
  CHECK(Symbol('a').to_string() == "a");
  CHECK(Symbol('a', 3).to_string() == "a:3");
  CHECK(Symbol::parse("b:12") == Symbol('b', 12));
  CHECK(Symbol::parse("b") == Symbol('b'));
}

TEST_CASE("alphabets index symbols in order") {
  AlphabetRef a = Alphabet::of_chars("abc");
  CHECK(a->size() == 3);
  CHECK(a->index_of(Symbol('b')) == 1);
  CHECK(a->at(2) == Symbol('c'));
  CHECK(a->to_string() == "abc");
  CHECK_THROWS_AS(a->index_of(Symbol('z')), Error);
  CHECK_THROWS_AS(Alphabet::of_chars("aba"), Error);
}

TEST_CASE("tagged alphabets round-trip through strings") {
  AlphabetRef base = Alphabet::of_chars("ab");
  AlphabetRef tagged = Alphabet::with_tags(*base, 3);
  CHECK(tagged->size() == 6);
  CHECK(tagged->at(0) == Symbol('a', 0));
  CHECK(tagged->at(4) == Symbol('b', 1));
  AlphabetRef again = Alphabet::parse(tagged->to_string());
  CHECK(*again == *tagged);
}

TEST_CASE("words concatenate, repeat, slice") {
  AlphabetRef a = Alphabet::of_chars("ab");
  Word u = Word::parse(a, "ab");
  CHECK(u.length() == 2);
  CHECK(u.concat(u).to_string() == "abab");
  CHECK(u.repeat(3).to_string() == "ababab");
  CHECK(u.repeat(0).empty());
  CHECK(u.concat(u).slice(1, 3).to_string() == "ba");
  CHECK(Word::parse(a, "").empty());
}

TEST_CASE("shortlex order") {
  AlphabetRef a = Alphabet::of_chars("ab");
  CHECK(Word::parse(a, "b") < Word::parse(a, "aa"));
  CHECK(Word::parse(a, "ab") < Word::parse(a, "ba"));
  CHECK_FALSE(Word::parse(a, "ba") < Word::parse(a, "ba"));
}

TEST_CASE("subword sets enumerate scattered subwords") {
  AlphabetRef a = Alphabet::of_chars("ab");
  SubwordSet s = subword_set(Word::parse(a, "ab"), 2);
  CHECK(s.size() == 4);  // e, a, b, ab
  CHECK(s.contains({}));
  CHECK(s.contains({0, 1}));
  CHECK_FALSE(s.contains({1, 0}));
  CHECK(subword_set(Word::parse(a, "aab"), 2) ==
        subword_set(Word::parse(a, "aaab"), 2));
}

TEST_CASE("subword split rule matches direct computation") {
  AlphabetRef a = Alphabet::of_chars("ab");
  WordEnumerator both(a, 0, 3);
  while (auto u = both.next()) {
    WordEnumerator inner(a, 0, 3);
    while (auto v = inner.next()) {
      for (int k = 1; k <= 3; ++k) {
        SubwordSet split = subword_set(*u, k).concat(subword_set(*v, k));
        CHECK(split == subword_set(u->concat(*v), k));
      }
    }
  }
}

TEST_CASE("sim_k distinguishes exactly by short subwords") {
  AlphabetRef a = Alphabet::of_chars("ab");
  CHECK(sim_k(Word::parse(a, "ab"), Word::parse(a, "aab"), 1));
  CHECK_FALSE(sim_k(Word::parse(a, "ab"), Word::parse(a, "ba"), 2));
  CHECK(sim_k(Word::parse(a, "abab"), Word::parse(a, "aabb"), 1));
}

TEST_CASE("word enumeration is shortlex and complete") {
  AlphabetRef a = Alphabet::of_chars("abc");
  WordEnumerator en(a, 0, 4);
  int count = 0;
  Word prev;
  bool first = true;
  while (auto w = en.next()) {
    ++count;
    if (!first) CHECK(prev < *w);
    prev = *w;
    first = false;
  }
  CHECK(count == 121);  // 1 + 3 + 9 + 27 + 81
}

TEST_CASE("distinct binary subword classes: 4, 16, 68") {
  AlphabetRef a = Alphabet::of_chars("ab");
  for (auto [k, expected] : {std::pair{1, 4}, {2, 16}, {3, 68}}) {
    std::set<std::string> keys;
    WordEnumerator en(a, 0, 10);
    while (auto w = en.next()) keys.insert(subword_set(*w, k).key());
    CHECK(static_cast<int>(keys.size()) == expected);
  }
}
