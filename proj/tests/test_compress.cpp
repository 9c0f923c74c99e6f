#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "mpj/compress.hpp"
#include "mpj/lang.hpp"

using namespace mpj;

namespace {

const AlphabetRef kAB = Alphabet::of_chars("ab");

// max(i, j) on {0..3}: associative, identity 0.
MonoidRef max4() {
  return std::make_shared<const FiniteMonoid>(FiniteMonoid::validate_and_build(
      {{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}}, 0));
}

Program boundary_example() {
  Program p;
  p.input_alphabet = kAB;
  p.n = 2;
  p.target = max4();
  p.instructions = {{1, {1, 2}}, {1, {1, 3}}, {2, {1, 2}}};
  p.accept = {true, false, false, false};
  return p;
}

bool has_subword(const std::vector<int>& t, const std::vector<int>& trace) {
  size_t i = 0;
  for (int e : trace)
    if (i < t.size() && e == t[i]) ++i;
  return i == t.size();
}

Program random_program(std::mt19937& rng, const MonoidRef& m, int n, int len) {
  Program p;
  p.input_alphabet = kAB;
  p.n = n;
  p.target = m;
  std::uniform_int_distribution<int> pos(1, n);
  std::uniform_int_distribution<int> elem(0, m->size() - 1);
  for (int i = 0; i < len; ++i)
    p.instructions.push_back({pos(rng), {elem(rng), elem(rng)}});
  for (int e = 0; e < m->size(); ++e) p.accept.push_back(elem(rng) == 0);
  return p;
}

std::vector<std::vector<int>> tuples_up_to(int m, int k) {
  std::vector<std::vector<int>> out;
  for (int len = 1; len <= k; ++len) {
    std::vector<int> t(len, 0);
    while (true) {
      out.push_back(t);
      size_t i = t.size();
      while (i > 0 && t[i - 1] == m - 1) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("first and last occurrences per read pair") {
  Program p = boundary_example();
  CHECK(compress_subword_indices(p, {1}) == std::vector<int>{0, 2});
  CHECK(compress_subword_indices(p, {1, 2}) == std::vector<int>{0, 2});
  CHECK(compress_subword_indices(p, {2, 3}) == std::vector<int>{0, 1, 2});
  CHECK(compress_subword_indices(p, {}).empty());
  CHECK_THROWS_AS(compress_subword_indices(p, {4}), Error);
}

TEST_CASE("bound values") {
  CHECK(compression_bound(0, 2, 5) == 1);
  CHECK(compression_bound(1, 2, 5) == 10);
  CHECK(compression_bound(2, 2, 5) == 20);
  CHECK(compression_bound(3, 2, 5) == 600);
  CHECK(compression_bound(50, 3, 1000) == std::numeric_limits<int64_t>::max());
}

TEST_CASE("subprogram restriction") {
  Program p = boundary_example();
  Program q = subprogram(p, {0, 2});
  CHECK(q.length() == 2);
  CHECK(q.instructions[0] == p.instructions[0]);
  CHECK(q.instructions[1] == p.instructions[2]);
  CHECK_THROWS_AS(subprogram(p, {2, 0}), Error);
  CHECK_THROWS_AS(subprogram(p, {0, 3}), Error);
}

TEST_CASE("empty programs compress to themselves") {
  Program p = boundary_example();
  p.instructions.clear();
  Compressed c = compress_equivalent(p, 2);
  CHECK(c.kept.empty());
  CHECK(c.program.length() == 0);
}

TEST_CASE("kept instructions preserve each subword test under supersets") {
  std::mt19937 rng(7);
  MonoidRef m = syntactic_monoid(
                    compile(LangExpr::shuffle_ideal(Word::parse(kAB, "ab"))))
                    .morphism.target;
  const int n = 3;
  for (int trial = 0; trial < 4; ++trial) {
    Program p = random_program(rng, m, n, 12);
    for (const std::vector<int>& t : tuples_up_to(m->size(), 2)) {
      std::vector<int> idx = compress_subword_indices(p, t);
      CHECK(static_cast<int64_t>(idx.size()) <=
            compression_bound(static_cast<int>(t.size()), 2, n));

      // Any superset of the kept set answers "is t a subword of the trace"
      // the same way the full program does.
      std::vector<int> super;
      for (int i = 0; i < p.length(); ++i) {
        bool kept = std::binary_search(idx.begin(), idx.end(), i);
        if (kept || rng() % 4 == 0) super.push_back(i);
      }
      Program q = subprogram(p, super);
      WordEnumerator en(kAB, n, n);
      while (auto w = en.next())
        CHECK(has_subword(t, eval_trace(p, *w)) ==
              has_subword(t, eval_trace(q, *w)));
    }
  }
}

TEST_CASE("compressed programs are subword-equivalent to depth k") {
  std::mt19937 rng(9);
  MonoidRef m = max4();
  const int n = 3;
  const int k = 2;
  int64_t families = 0;
  for (int len = 1, pw = m->size(); len <= k; ++len, pw *= m->size())
    families += pw;
  for (int trial = 0; trial < 4; ++trial) {
    Program p = random_program(rng, m, n, 14);
    Compressed c = compress_equivalent(p, k);
    CHECK(static_cast<int64_t>(c.kept.size()) <=
          families * compression_bound(k, 2, n));
    WordEnumerator en(kAB, n, n);
    while (auto w = en.next()) {
      std::vector<int> full = eval_trace(p, *w);
      std::vector<int> slim = eval_trace(c.program, *w);
      for (const std::vector<int>& t : tuples_up_to(m->size(), k))
        CHECK(has_subword(t, full) == has_subword(t, slim));
    }
  }
}
