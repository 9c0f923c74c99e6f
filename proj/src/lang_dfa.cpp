#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "mpj/config.hpp"
#include "mpj/dfa.hpp"
#include "mpj/error.hpp"
#include "mpj/lang.hpp"

namespace mpj {

namespace {

int state_cap_or_default(int cap) { return cap < 0 ? Config::global().state_cap : cap; }

void check_state_cap(size_t states, int cap, const char* what) {
  if (states > static_cast<size_t>(cap))
    throw CapExceeded(std::string(what) + " exceeds state cap " + std::to_string(cap));
}

}  // namespace

bool Dfa::is_complete() const {
  for (const auto& row : delta)
    for (int t : row)
      if (t < 0) return false;
  return true;
}

void Dfa::validate() const {
  if (!alphabet) throw Error("dfa needs an alphabet");
  if (delta.empty()) throw Error("dfa needs at least one state");
  if (start < 0 || start >= states()) throw Error("dfa start state out of range");
  if (accept.size() != delta.size()) throw Error("dfa accept vector size mismatch");
  for (const auto& row : delta) {
    if (static_cast<int>(row.size()) != alphabet->size())
      throw Error("dfa transition row size mismatch");
    for (int t : row)
      if (t < -1 || t >= states()) throw Error("dfa transition target out of range");
  }
}

int Dfa::run(const std::vector<int>& letters) const {
  int q = start;
  for (int c : letters) {
    q = delta[q][c];
    if (q < 0) return -1;
  }
  return q;
}

bool Dfa::member(const Word& w) const {
  if (!same_alphabet(alphabet, w.alphabet())) throw Error("alphabet mismatch in dfa member");
  const int q = run(w.letters());
  return q >= 0 && accept[q];
}

Dfa complete_dfa(const Dfa& d) {
  if (d.is_complete()) return d;
  Dfa out = d;
  const int sink = out.states();
  for (auto& row : out.delta)
    for (int& t : row)
      if (t < 0) t = sink;
  out.delta.emplace_back(d.alphabet->size(), sink);
  out.accept.push_back(false);
  return out;
}

namespace {

/// Keeps reachable states only; preserves completeness.
Dfa restrict_reachable(const Dfa& d) {
  std::vector<int> index(d.states(), -1);
  std::vector<int> order;
  std::queue<int> queue;
  index[d.start] = 0;
  order.push_back(d.start);
  queue.push(d.start);
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop();
    for (int t : d.delta[q])
      if (index[t] < 0) {
        index[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push(t);
      }
  }
  Dfa out;
  out.alphabet = d.alphabet;
  out.start = 0;
  out.delta.resize(order.size());
  out.accept.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    out.accept[i] = d.accept[order[i]];
    out.delta[i].resize(d.alphabet->size());
    for (int c = 0; c < d.alphabet->size(); ++c) out.delta[i][c] = index[d.delta[order[i]][c]];
  }
  return out;
}

}  // namespace

Dfa minimize_dfa(const Dfa& d, int state_cap) {
  check_state_cap(d.delta.size(), state_cap_or_default(state_cap), "automaton");
  Dfa c = restrict_reachable(complete_dfa(d));
  const int n = c.states();
  const int s = c.alphabet->size();

  std::vector<int> cls(n);
  bool has_acc = false, has_rej = false;
  for (int q = 0; q < n; ++q) {
    cls[q] = c.accept[q] ? 1 : 0;
    (c.accept[q] ? has_acc : has_rej) = true;
  }
  int count = has_acc && has_rej ? 2 : 1;
  while (true) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next(n);
    std::vector<int> sig(s + 1);
    for (int q = 0; q < n; ++q) {
      sig[0] = cls[q];
      for (int ch = 0; ch < s; ++ch) sig[ch + 1] = cls[c.delta[q][ch]];
      auto [it, fresh] = sig_index.emplace(sig, static_cast<int>(sig_index.size()));
      (void)fresh;
      next[q] = it->second;
    }
    const int new_count = static_cast<int>(sig_index.size());
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }

  // Quotient, then canonical BFS renumbering from the start state.
  std::vector<int> rep(count, -1);
  for (int q = 0; q < n; ++q)
    if (rep[cls[q]] < 0) rep[cls[q]] = q;
  std::vector<int> bfs(count, -1);
  std::vector<int> order;
  std::queue<int> queue;
  bfs[cls[c.start]] = 0;
  order.push_back(cls[c.start]);
  queue.push(cls[c.start]);
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop();
    for (int ch = 0; ch < s; ++ch) {
      const int t = cls[c.delta[rep[g]][ch]];
      if (bfs[t] < 0) {
        bfs[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push(t);
      }
    }
  }

  Dfa out;
  out.alphabet = c.alphabet;
  out.start = 0;
  out.delta.resize(order.size());
  out.accept.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    const int q = rep[order[i]];
    out.accept[i] = c.accept[q];
    out.delta[i].resize(s);
    for (int ch = 0; ch < s; ++ch) out.delta[i][ch] = bfs[cls[c.delta[q][ch]]];
  }
  return out;
}

namespace {

enum class BoolOp { kAnd, kOr };

Dfa product_dfa(const Dfa& a0, const Dfa& b0, BoolOp op, int cap) {
  if (!same_alphabet(a0.alphabet, b0.alphabet)) throw Error("alphabet mismatch in product");
  const Dfa a = complete_dfa(a0);
  const Dfa b = complete_dfa(b0);
  const int s = a.alphabet->size();
  const int64_t nb = b.states();

  std::unordered_map<int64_t, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::queue<int> queue;
  auto add = [&](int q1, int q2) {
    const int64_t key = q1 * nb + q2;
    auto [it, fresh] = index.emplace(key, static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(q1, q2);
      check_state_cap(pairs.size(), cap, "product automaton");
      queue.push(it->second);
    }
    return it->second;
  };
  add(a.start, b.start);
  Dfa out;
  out.alphabet = a.alphabet;
  out.start = 0;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop();
    const auto [q1, q2] = pairs[i];
    if (static_cast<int>(out.delta.size()) <= i) out.delta.resize(i + 1);
    out.delta[i].resize(s);
    for (int c = 0; c < s; ++c) out.delta[i][c] = add(a.delta[q1][c], b.delta[q2][c]);
  }
  out.delta.resize(pairs.size());
  for (auto& row : out.delta) row.resize(s, -1);
  out.accept.resize(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    const bool x = a.accept[pairs[i].first];
    const bool y = b.accept[pairs[i].second];
    out.accept[i] = op == BoolOp::kAnd ? (x && y) : (x || y);
  }
  return out;
}

}  // namespace

Dfa intersect_dfa(const Dfa& a, const Dfa& b, int state_cap) {
  const int cap = state_cap_or_default(state_cap);
  return minimize_dfa(product_dfa(a, b, BoolOp::kAnd, cap), cap);
}

Dfa union_dfa(const Dfa& a, const Dfa& b, int state_cap) {
  const int cap = state_cap_or_default(state_cap);
  return minimize_dfa(product_dfa(a, b, BoolOp::kOr, cap), cap);
}

Dfa complement_dfa(const Dfa& d) {
  Dfa out = complete_dfa(d);
  for (size_t q = 0; q < out.accept.size(); ++q) out.accept[q] = !out.accept[q];
  return out;
}

Dfa concat_dfa(const Dfa& a0, const Dfa& b0, int state_cap) {
  if (!same_alphabet(a0.alphabet, b0.alphabet)) throw Error("alphabet mismatch in concat");
  const int cap = state_cap_or_default(state_cap);
  const Dfa a = complete_dfa(a0);
  const Dfa b = complete_dfa(b0);
  const int s = a.alphabet->size();
  const int width = (b.states() + 63) / 64;

  // State: a-state plus the set of live b-states, encoded as one key vector.
  std::map<std::vector<uint64_t>, int> index;
  std::vector<std::vector<uint64_t>> states;
  std::queue<int> queue;
  auto make_key = [&](int q1, const std::vector<uint64_t>& set) {
    std::vector<uint64_t> key(width + 1);
    key[0] = static_cast<uint64_t>(q1);
    std::copy(set.begin(), set.end(), key.begin() + 1);
    return key;
  };
  auto add = [&](std::vector<uint64_t> key) {
    auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(it->first);
      check_state_cap(states.size(), cap, "concatenation automaton");
      queue.push(it->second);
    }
    return it->second;
  };

  std::vector<uint64_t> init(width, 0);
  if (a.accept[a.start]) init[b.start / 64] |= 1ull << (b.start % 64);
  add(make_key(a.start, init));

  Dfa out;
  out.alphabet = a.alphabet;
  out.start = 0;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop();
    const std::vector<uint64_t> key = states[i];
    const int q1 = static_cast<int>(key[0]);
    if (static_cast<int>(out.delta.size()) <= i) out.delta.resize(i + 1);
    out.delta[i].assign(s, -1);
    for (int c = 0; c < s; ++c) {
      const int nq1 = a.delta[q1][c];
      std::vector<uint64_t> nset(width, 0);
      for (int q2 = 0; q2 < b.states(); ++q2)
        if (key[1 + q2 / 64] >> (q2 % 64) & 1) {
          const int t = b.delta[q2][c];
          nset[t / 64] |= 1ull << (t % 64);
        }
      if (a.accept[nq1]) nset[b.start / 64] |= 1ull << (b.start % 64);
      out.delta[i][c] = add(make_key(nq1, nset));
    }
  }
  out.delta.resize(states.size());
  for (auto& row : out.delta) row.resize(s, -1);
  out.accept.resize(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    bool acc = false;
    for (int q2 = 0; q2 < b.states() && !acc; ++q2)
      acc = (states[i][1 + q2 / 64] >> (q2 % 64) & 1) && b.accept[q2];
    out.accept[i] = acc;
  }
  return minimize_dfa(out, cap);
}

std::optional<Word> dfa_equal(const Dfa& a0, const Dfa& b0) {
  if (!same_alphabet(a0.alphabet, b0.alphabet)) throw Error("alphabet mismatch in dfa_equal");
  const Dfa a = complete_dfa(a0);
  const Dfa b = complete_dfa(b0);
  const int s = a.alphabet->size();
  const int64_t nb = b.states();

  std::unordered_map<int64_t, int> seen;
  std::vector<std::pair<int, int>> parent;  // (previous pair index, letter)
  std::vector<std::pair<int, int>> pairs;
  auto add = [&](int q1, int q2, int from, int letter) {
    auto [it, fresh] = seen.emplace(q1 * nb + q2, static_cast<int>(pairs.size()));
    (void)it;
    if (fresh) {
      pairs.emplace_back(q1, q2);
      parent.emplace_back(from, letter);
    }
  };
  add(a.start, b.start, -1, -1);
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    const auto [q1, q2] = pairs[i];
    if (a.accept[q1] != b.accept[q2]) {
      std::vector<int> letters;
      for (int at = i; parent[at].first >= 0; at = parent[at].first)
        letters.push_back(parent[at].second);
      std::reverse(letters.begin(), letters.end());
      return Word(a.alphabet, std::move(letters));
    }
    for (int c = 0; c < s; ++c) add(a.delta[q1][c], b.delta[q2][c], i, c);
  }
  return std::nullopt;
}

std::vector<long long> count_words(const Dfa& d0, int max_len) {
  const Dfa d = complete_dfa(d0);
  std::vector<long long> cnt(d.states(), 0), next(d.states(), 0);
  cnt[d.start] = 1;
  std::vector<long long> out;
  for (int len = 0; len <= max_len; ++len) {
    long long total = 0;
    for (int q = 0; q < d.states(); ++q)
      if (d.accept[q]) total += cnt[q];
    out.push_back(total);
    std::fill(next.begin(), next.end(), 0);
    for (int q = 0; q < d.states(); ++q)
      if (cnt[q])
        for (int c = 0; c < d.alphabet->size(); ++c) next[d.delta[q][c]] += cnt[q];
    std::swap(cnt, next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expression compilation

namespace {

/// Longest proper suffix of u[0:t) that is a prefix of u, extended by c.
std::vector<std::vector<int>> kmp_transitions(const Word& u, const AlphabetRef& alph) {
  const int m = u.length();
  const int s = alph->size();
  std::vector<std::vector<int>> delta(m + 1, std::vector<int>(s));
  for (int c = 0; c < s; ++c) delta[0][c] = (m > 0 && u.letter(0) == c) ? 1 : 0;
  std::vector<int> fail(m + 1, 0);
  for (int t = 1; t <= m; ++t) {
    if (t < m) {
      for (int c = 0; c < s; ++c)
        delta[t][c] = u.letter(t) == c ? t + 1 : delta[fail[t]][c];
    } else {
      for (int c = 0; c < s; ++c) delta[t][c] = delta[fail[t]][c];
    }
    if (t < m) fail[t + 1] = delta[fail[t]][u.letter(t)];
  }
  return delta;
}

struct Compiler {
  int cap;

  Dfa basic(const AlphabetRef& alph, std::vector<std::vector<int>> delta,
            std::vector<bool> accept) {
    Dfa d;
    d.alphabet = alph;
    d.start = 0;
    d.delta = std::move(delta);
    d.accept = std::move(accept);
    return d;
  }

  Dfa subsequence(const Word& u) {
    const auto& alph = u.alphabet();
    const int m = u.length();
    std::vector<std::vector<int>> delta(m + 1, std::vector<int>(alph->size()));
    for (int t = 0; t <= m; ++t)
      for (int c = 0; c < alph->size(); ++c)
        delta[t][c] = (t < m && u.letter(t) == c) ? t + 1 : t;
    std::vector<bool> accept(m + 1, false);
    accept[m] = true;
    return basic(alph, std::move(delta), std::move(accept));
  }

  Dfa factor_automaton(const Word& u, bool absorb) {
    const auto& alph = u.alphabet();
    const int m = u.length();
    auto delta = kmp_transitions(u, alph);
    if (absorb)
      for (int c = 0; c < alph->size(); ++c) delta[m][c] = m;
    std::vector<bool> accept(m + 1, false);
    accept[m] = true;
    return basic(alph, std::move(delta), std::move(accept));
  }

  Dfa chain(const Word& u, bool absorb_accept) {
    // u Sigma* when absorbing, {u} otherwise
    const auto& alph = u.alphabet();
    const int m = u.length();
    const int dead = m + 1;
    std::vector<std::vector<int>> delta(m + 2, std::vector<int>(alph->size(), dead));
    for (int t = 0; t < m; ++t) delta[t][u.letter(t)] = t + 1;
    if (absorb_accept)
      for (int c = 0; c < alph->size(); ++c) delta[m][c] = m;
    std::vector<bool> accept(m + 2, false);
    accept[m] = true;
    return basic(alph, std::move(delta), std::move(accept));
  }

  Dfa letters(const AlphabetRef& alph, const std::vector<int>& set, int at_least,
              bool exactly_one) {
    // exactly_one: one letter from set; otherwise set^(>= at_least)
    const int n = exactly_one ? 1 : at_least;
    const int dead = n + 1;
    std::vector<std::vector<int>> delta(n + 2, std::vector<int>(alph->size(), dead));
    for (int t = 0; t <= n; ++t)
      for (int c : set) delta[t][c] = std::min(t + 1, n);
    if (exactly_one)
      for (int c : set) delta[n][c] = dead;
    else
      for (int c : set) delta[n][c] = n;
    std::vector<bool> accept(n + 2, false);
    accept[n] = true;
    return basic(alph, std::move(delta), std::move(accept));
  }

  Dfa go(const LangExpr& e) {
    try {
      return compile_node(e);
    } catch (CapExceeded& err) {
      const std::string msg = err.what();
      if (msg.find("while compiling") == std::string::npos)
        throw CapExceeded(msg + " while compiling " + e.pretty());
      throw;
    }
  }

  Dfa compile_node(const LangExpr& e) {
    switch (e.op()) {
      case LangOp::kShuffleIdeal:
        return subsequence(e.single_word());
      case LangOp::kFactor:
        return minimize_dfa(factor_automaton(e.single_word(), true), cap);
      case LangOp::kPrefix:
        return minimize_dfa(chain(e.single_word(), true), cap);
      case LangOp::kSuffix:
        return minimize_dfa(factor_automaton(e.single_word(), false), cap);
      case LangOp::kWord:
        return minimize_dfa(chain(e.single_word(), false), cap);
      case LangOp::kLetterSet:
        return minimize_dfa(letters(e.alphabet(), e.letters(), 1, true), cap);
      case LangOp::kLettersStar:
        return minimize_dfa(letters(e.alphabet(), e.letters(), 0, false), cap);
      case LangOp::kLettersAtLeast:
        return minimize_dfa(letters(e.alphabet(), e.letters(), e.r(), false), cap);
      case LangOp::kThresholdBlock: {
        std::vector<LangExpr> parts;
        for (const Word& u : e.factors())
          parts.push_back(LangExpr::union_of(
              {LangExpr::factor(u), LangExpr::shuffle_ideal(u.repeat(e.l()))}));
        return go(LangExpr::concat(std::move(parts)));
      }
      case LangOp::kLBlock:
        return e.alpha_single() < e.l()
                   ? go(LangExpr::factor(e.single_word()))
                   : go(LangExpr::shuffle_ideal(e.single_word().repeat(e.l())));
      case LangOp::kRLang: {
        const auto& us = e.factors();
        const auto& alpha = e.alpha();
        Word base(e.alphabet(), {});
        for (size_t t = 0; t < us.size(); ++t) base = base.concat(us[t].repeat(alpha[t]));
        std::vector<LangExpr> parts{LangExpr::shuffle_ideal(base)};
        for (size_t t = 0; t < us.size(); ++t) {
          if (alpha[t] >= e.l()) continue;
          Word bumped(e.alphabet(), {});
          for (size_t s2 = 0; s2 < us.size(); ++s2)
            bumped = bumped.concat(us[s2].repeat(alpha[s2] + (s2 == t ? 1 : 0)));
          parts.push_back(LangExpr::complement(LangExpr::shuffle_ideal(bumped)));
        }
        return go(LangExpr::intersection_of(std::move(parts)));
      }
      case LangOp::kSLang: {
        const auto& us = e.factors();
        const auto& alpha = e.alpha();
        std::vector<LangExpr> parts;
        for (size_t t = 0; t < us.size(); ++t) {
          if (alpha[t] >= e.l()) continue;
          Word left(e.alphabet(), {});
          for (size_t s2 = 0; s2 < t; ++s2) left = left.concat(us[s2].repeat(alpha[s2]));
          Word right(e.alphabet(), {});
          for (size_t s2 = t + 1; s2 < us.size(); ++s2)
            right = right.concat(us[s2].repeat(alpha[s2]));
          parts.push_back(LangExpr::concat({LangExpr::shuffle_ideal(left),
                                            LangExpr::word(us[t]),
                                            LangExpr::shuffle_ideal(right)}));
        }
        if (parts.empty()) return go(LangExpr::universe(e.alphabet()));
        return go(LangExpr::intersection_of(std::move(parts)));
      }
      case LangOp::kCosta: {
        const CostaForm& f = e.costa_form();
        std::vector<LangExpr> parts{LangExpr::word(f.u[0])};
        for (int t = 1; t <= f.n(); ++t) {
          parts.push_back(LangExpr::letters_star(f.alphabet, f.sets[t - 1]));
          if (t < f.n()) {
            if (!f.u[t].empty()) {
              parts.push_back(LangExpr::word(f.u[t]));
            } else {
              std::vector<int> d1, mid, d2;
              std::set_difference(f.sets[t - 1].begin(), f.sets[t - 1].end(),
                                  f.sets[t].begin(), f.sets[t].end(), std::back_inserter(d1));
              std::set_intersection(f.sets[t - 1].begin(), f.sets[t - 1].end(),
                                    f.sets[t].begin(), f.sets[t].end(),
                                    std::back_inserter(mid));
              std::set_difference(f.sets[t].begin(), f.sets[t].end(), f.sets[t - 1].begin(),
                                  f.sets[t - 1].end(), std::back_inserter(d2));
              parts.push_back(LangExpr::concat(
                  {LangExpr::letter_set(f.alphabet, d1),
                   LangExpr::letters_at_least(f.alphabet, mid, f.r),
                   LangExpr::letter_set(f.alphabet, d2)}));
            }
          }
        }
        if (f.n() >= 1) parts.push_back(LangExpr::word(f.u[f.n()]));
        return go(parts.size() == 1 ? parts[0] : LangExpr::concat(std::move(parts)));
      }
      case LangOp::kUnion: {
        Dfa acc = go(e.children()[0]);
        for (size_t i = 1; i < e.children().size(); ++i)
          acc = union_dfa(acc, go(e.children()[i]), cap);
        return acc;
      }
      case LangOp::kIntersection: {
        Dfa acc = go(e.children()[0]);
        for (size_t i = 1; i < e.children().size(); ++i)
          acc = intersect_dfa(acc, go(e.children()[i]), cap);
        return acc;
      }
      case LangOp::kComplement:
        return minimize_dfa(complement_dfa(go(e.children()[0])), cap);
      case LangOp::kConcat: {
        Dfa acc = go(e.children()[0]);
        for (size_t i = 1; i < e.children().size(); ++i)
          acc = concat_dfa(acc, go(e.children()[i]), cap);
        return acc;
      }
    }
    throw Error("bad expression node");
  }
};

}  // namespace

Dfa compile(const LangExpr& e, int state_cap) {
  Compiler compiler{state_cap_or_default(state_cap)};
  return minimize_dfa(compiler.go(e), compiler.cap);
}

// ---------------------------------------------------------------------------
// Piecewise testability of fixed order k

namespace {

struct BitsetHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

bool is_k_pt(const Dfa& d0, int k, int64_t class_cap) {
  if (k < 0) throw Error("k must be >= 0");
  const int64_t cap = class_cap < 0 ? Config::global().class_cap : class_cap;
  const Dfa d = minimize_dfa(d0);
  const int n = d.states();
  const int s = d.alphabet->size();

  // Rank all words of length <= k in shortlex order.
  std::vector<int64_t> offset(k + 2, 0);
  for (int len = 0; len <= k; ++len) {
    int64_t pow = 1;
    for (int t = 0; t < len; ++t) pow *= s;
    offset[len + 1] = offset[len] + pow;
    if (offset[len + 1] > (1 << 21))
      throw Error("subword universe too large for is_k_pt at this alphabet and k");
  }
  const int64_t universe = offset[k + 1];
  std::vector<int8_t> len_of(universe);
  for (int len = 0; len <= k; ++len)
    std::fill(len_of.begin() + offset[len], len_of.begin() + offset[len + 1],
              static_cast<int8_t>(len));
  const int set_width = static_cast<int>((universe + 63) / 64);

  // Interned ~k classes; per class: bitset, letter successors, visit mask
  // over DFA states, and seen-accept/seen-reject flags.
  std::vector<uint64_t> class_bits;
  std::vector<int32_t> class_succ;
  std::vector<uint64_t> class_visit;
  std::vector<uint8_t> class_flags;
  const int visit_width = (n + 63) / 64;
  std::unordered_map<std::vector<uint64_t>, int32_t, BitsetHash> intern;

  auto add_class = [&](const std::vector<uint64_t>& bits) -> int32_t {
    auto [it, fresh] = intern.emplace(bits, static_cast<int32_t>(intern.size()));
    if (fresh) {
      if (static_cast<int64_t>(intern.size()) > cap)
        throw CapExceeded("~k class count exceeds cap " + std::to_string(cap));
      class_bits.insert(class_bits.end(), bits.begin(), bits.end());
      class_succ.insert(class_succ.end(), s, -1);
      class_visit.insert(class_visit.end(), visit_width, 0);
      class_flags.push_back(0);
    }
    return it->second;
  };

  std::vector<uint64_t> eps(set_width, 0);
  eps[0] |= 1;  // rank of the empty word
  add_class(eps);

  auto successor = [&](int32_t cls, int c) -> int32_t {
    const size_t slot = static_cast<size_t>(cls) * s + c;
    if (class_succ[slot] >= 0) return class_succ[slot];
    std::vector<uint64_t> bits(class_bits.begin() + static_cast<size_t>(cls) * set_width,
                               class_bits.begin() + static_cast<size_t>(cls + 1) * set_width);
    const std::vector<uint64_t> src = bits;
    for (int w = 0; w < set_width; ++w) {
      uint64_t chunk = src[w];
      while (chunk) {
        const int bit = std::countr_zero(chunk);
        chunk &= chunk - 1;
        const int64_t idx = static_cast<int64_t>(w) * 64 + bit;
        const int len = len_of[idx];
        if (len < k) {
          const int64_t child = offset[len + 1] + (idx - offset[len]) * s + c;
          bits[child / 64] |= 1ull << (child % 64);
        }
      }
    }
    // add_class may reallocate class_succ; re-index afterwards.
    const int32_t result = add_class(bits);
    class_succ[slot] = result;
    return result;
  };

  std::queue<std::pair<int32_t, int32_t>> queue;
  auto visit = [&](int32_t cls, int32_t q) -> bool {
    uint64_t& mask = class_visit[static_cast<size_t>(cls) * visit_width + q / 64];
    if (mask >> (q % 64) & 1) return true;
    mask |= 1ull << (q % 64);
    class_flags[cls] |= d.accept[q] ? 1 : 2;
    if (class_flags[cls] == 3) return false;
    queue.emplace(cls, q);
    return true;
  };

  if (!visit(0, d.start)) return false;
  while (!queue.empty()) {
    const auto [cls, q] = queue.front();
    queue.pop();
    for (int c = 0; c < s; ++c)
      if (!visit(successor(cls, c), d.delta[q][c])) return false;
  }
  return true;
}

}  // namespace mpj
