#include <algorithm>
#include <optional>
#include <set>

#include "mpj/error.hpp"
#include "mpj/lang.hpp"

namespace mpj {

namespace {

std::vector<int> set_diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_inter(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void split_into(const Word& v, std::vector<Word>& out) {
  for (int t = 0; t < v.length(); ++t) out.push_back(v.slice(t, t + 1));
}

/// Conjunct collector with <...>_2 blocks; empty factors are dropped (their
/// single-block language is the universe), an all-empty list is skipped
/// entirely.
struct Conjuncts {
  AlphabetRef alph;
  std::vector<LangExpr> parts;
  std::set<std::string> seen;

  std::optional<LangExpr> block(const std::vector<Word>& raw) {
    std::vector<Word> factors;
    for (const Word& u : raw)
      if (!u.empty()) factors.push_back(u);
    if (factors.empty()) return std::nullopt;
    return LangExpr::threshold_block(alph, std::move(factors), 2);
  }

  void add(LangExpr e) {
    if (seen.insert(e.pretty()).second) parts.push_back(std::move(e));
  }

  void require_block(const std::vector<Word>& raw) {
    if (auto b = block(raw)) add(std::move(*b));
  }

  void forbid_block(const std::vector<Word>& raw) {
    if (auto b = block(raw)) add(LangExpr::complement(std::move(*b)));
  }
};

/// Odometer over the index product of the choice-list sizes; runs fn for
/// every combination.
void for_each_choice(const std::vector<size_t>& sizes,
                     const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(sizes.size(), 0);
  while (true) {
    fn(idx);
    size_t t = 0;
    while (t < sizes.size() && ++idx[t] == sizes[t]) idx[t++] = 0;
    if (t == sizes.size()) return;
  }
}

}  // namespace

LangExpr costa_lang(const CostaForm& f) { return LangExpr::costa(f); }

LangExpr costa_K(const CostaForm& f) {
  f.validate();
  const AlphabetRef& alph = f.alphabet;
  const int n = f.n();
  const int s = alph->size();
  auto letter = [&](int c) { return Word(alph, {c}); };
  auto in = [](const std::vector<int>& set, int c) {
    return std::binary_search(set.begin(), set.end(), c);
  };

  Conjuncts cj{alph, {}, {}};
  cj.add(LangExpr::prefix(f.u[0]));

  if (n == 0) {
    for (int c = 0; c < s; ++c) cj.forbid_block({f.u[0], letter(c)});
    return LangExpr::intersection_of(std::move(cj.parts));
  }

  cj.add(LangExpr::suffix(f.u[n]));

  if (n == 1) {
    // The nonempty-block conjunct rules out words where the u0 prefix and
    // un suffix would have to overlap.
    cj.require_block({f.u[0], f.u[1]});
    for (int c = 0; c < s; ++c)
      if (!in(f.sets[0], c)) cj.forbid_block({f.u[0], letter(c), f.u[1]});
    return LangExpr::intersection_of(std::move(cj.parts));
  }

  // Separator choices: the word itself, or one boundary pair b1 b2 per
  // incomparable set separator.
  std::vector<std::vector<Word>> choices(n - 1);
  for (int i = 1; i < n; ++i) {
    if (!f.u[i].empty()) {
      choices[i - 1] = {f.u[i]};
    } else {
      for (int b1 : set_diff(f.sets[i - 1], f.sets[i]))
        for (int b2 : set_diff(f.sets[i], f.sets[i - 1]))
          choices[i - 1].push_back(Word(alph, {b1, b2}));
    }
  }
  std::vector<size_t> sizes;
  for (const auto& c : choices) sizes.push_back(c.size());

  // Positive family: some separator choice embeds blockwise, with nonempty
  // word separators kept whole and boundary pairs split into letters.
  std::vector<LangExpr> positive;
  for_each_choice(sizes, [&](const std::vector<size_t>& idx) {
    std::vector<Word> fac{f.u[0]};
    for (int i = 1; i < n; ++i) {
      const Word& v = choices[i - 1][idx[i - 1]];
      if (!f.u[i].empty())
        fac.push_back(v);
      else
        split_into(v, fac);
    }
    fac.push_back(f.u[n]);
    if (auto b = cj.block(fac)) positive.push_back(std::move(*b));
  });
  if (!positive.empty()) cj.add(LangExpr::union_of(std::move(positive)));

  // Second family: no stray letter c outside A_i inside the i-th star zone,
  // for any separator choice (all separators letter-split).
  for_each_choice(sizes, [&](const std::vector<size_t>& idx) {
    std::vector<std::vector<Word>> bars(n - 1);
    for (int i = 1; i < n; ++i) split_into(choices[i - 1][idx[i - 1]], bars[i - 1]);
    for (int i = 1; i <= n; ++i) {
      for (int c = 0; c < s; ++c) {
        if (in(f.sets[i - 1], c)) continue;
        std::vector<Word> fac{f.u[0]};
        for (int j = 1; j < i; ++j)
          fac.insert(fac.end(), bars[j - 1].begin(), bars[j - 1].end());
        fac.push_back(letter(c));
        for (int j = i; j < n; ++j)
          fac.insert(fac.end(), bars[j - 1].begin(), bars[j - 1].end());
        fac.push_back(f.u[n]);
        cj.forbid_block(fac);
      }
    }
  });

  // Third family: set separators admit neither a foreign letter between the
  // boundary pair nor a too-short middle run.
  for (int i = 1; i < n; ++i) {
    if (!f.u[i].empty()) continue;
    std::vector<size_t> other_sizes = sizes;
    other_sizes[i - 1] = 1;
    const std::vector<int> d1 = set_diff(f.sets[i - 1], f.sets[i]);
    const std::vector<int> d2 = set_diff(f.sets[i], f.sets[i - 1]);
    const std::vector<int> mid = set_inter(f.sets[i - 1], f.sets[i]);
    for_each_choice(other_sizes, [&](const std::vector<size_t>& idx) {
      std::vector<Word> pre{f.u[0]};
      for (int j = 1; j < i; ++j) split_into(choices[j - 1][idx[j - 1]], pre);
      std::vector<Word> post;
      for (int j = i + 1; j < n; ++j) split_into(choices[j - 1][idx[j - 1]], post);
      post.push_back(f.u[n]);
      for (int b1 : d1) {
        for (int b2 : d2) {
          for (int c = 0; c < s; ++c) {
            if (in(f.sets[i - 1], c) || in(f.sets[i], c)) continue;
            std::vector<Word> fac = pre;
            fac.push_back(letter(b1));
            fac.push_back(letter(c));
            fac.push_back(letter(b2));
            fac.insert(fac.end(), post.begin(), post.end());
            cj.forbid_block(fac);
          }
          for (int len = 0; len < f.r; ++len) {
            std::vector<size_t> vsizes(len, mid.size());
            if (mid.empty() && len > 0) continue;
            for_each_choice(vsizes, [&](const std::vector<size_t>& vidx) {
              std::vector<int> letters{b1};
              for (int t = 0; t < len; ++t) letters.push_back(mid[vidx[t]]);
              letters.push_back(b2);
              std::vector<Word> fac = pre;
              fac.push_back(Word(alph, letters));
              fac.insert(fac.end(), post.begin(), post.end());
              cj.forbid_block(fac);
            });
          }
        }
      }
    });
  }

  return LangExpr::intersection_of(std::move(cj.parts));
}

}  // namespace mpj
