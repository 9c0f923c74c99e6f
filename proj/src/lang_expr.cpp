#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mpj/error.hpp"
#include "mpj/lang.hpp"

namespace mpj {

struct LangExpr::Node {
  LangOp op;
  AlphabetRef alph;
  std::vector<Word> words;
  int l = 0;
  int alpha_single = 0;
  std::vector<int> alpha;
  int r = 0;
  std::vector<int> letters;
  std::vector<LangExpr> kids;
  std::optional<CostaForm> costa;
};

namespace {

using Node = LangExpr::Node;

std::vector<int> checked_letter_set(const AlphabetRef& alph, std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (int c : letters)
    if (c < 0 || c >= alph->size()) throw Error("letter index out of range");
  return letters;
}

void check_factors(const AlphabetRef& alph, const std::vector<Word>& factors, bool allow_empty) {
  if (factors.empty()) throw Error("factor list must be nonempty");
  for (const Word& u : factors) {
    if (!same_alphabet(alph, u.alphabet())) throw Error("factor alphabet mismatch");
    if (!allow_empty && u.empty()) throw Error("factors must be nonempty");
  }
}

std::vector<int> word_letter_set(const Word& u) {
  std::set<int> s(u.letters().begin(), u.letters().end());
  return {s.begin(), s.end()};
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

void CostaForm::validate() const {
  if (!alphabet) throw Error("costa form needs an alphabet");
  if (r < 0) throw Error("costa exponent r must be >= 0");
  if (static_cast<int>(u.size()) != n() + 1)
    throw Error("costa form needs exactly n+1 boundary/separator words");
  for (const Word& w : u)
    if (!same_alphabet(alphabet, w.alphabet())) throw Error("costa word alphabet mismatch");
  for (const auto& set : sets) {
    if (set.empty()) throw Error("costa star sets must be nonempty");
    std::vector<int> copy = set;
    if (checked_letter_set(alphabet, copy) != set)
      throw Error("costa star sets must be sorted distinct letter indices");
  }
  for (int i = 1; i < n(); ++i) {
    const std::vector<int>& ai = sets[i - 1];
    const std::vector<int>& aj = sets[i];
    if (u[i].empty()) {
      if (subset_of(ai, aj) || subset_of(aj, ai))
        throw Error("set separator needs incomparable adjacent star sets");
    } else {
      const std::vector<int> content = word_letter_set(u[i]);
      if (subset_of(content, ai) || subset_of(content, aj))
        throw Error("word separator must leave both adjacent star sets");
    }
  }
}

#define MPJ_DEFINE_WORD_ATOM(fn, opname)                                \
  LangExpr LangExpr::fn(Word u) {                                       \
    auto node = std::make_shared<Node>();                               \
    node->op = LangOp::opname;                                          \
    node->alph = u.alphabet();                                          \
    node->words.push_back(std::move(u));                                \
    return LangExpr(std::move(node));                                   \
  }

MPJ_DEFINE_WORD_ATOM(shuffle_ideal, kShuffleIdeal)
MPJ_DEFINE_WORD_ATOM(factor, kFactor)
MPJ_DEFINE_WORD_ATOM(prefix, kPrefix)
MPJ_DEFINE_WORD_ATOM(suffix, kSuffix)
MPJ_DEFINE_WORD_ATOM(word, kWord)

#undef MPJ_DEFINE_WORD_ATOM

LangExpr LangExpr::threshold_block(AlphabetRef alphabet, std::vector<Word> factors, int l) {
  if (l < 1) throw Error("threshold l must be >= 1");
  check_factors(alphabet, factors, false);
  auto node = std::make_shared<Node>();
  node->op = LangOp::kThresholdBlock;
  node->alph = std::move(alphabet);
  node->words = std::move(factors);
  node->l = l;
  return LangExpr(std::move(node));
}

LangExpr LangExpr::l_block(Word u, int l, int alpha) {
  if (l < 1) throw Error("threshold l must be >= 1");
  if (alpha < 1 || alpha > l) throw Error("block exponent must lie in [1, l]");
  if (u.empty()) throw Error("block factor must be nonempty");
  auto node = std::make_shared<Node>();
  node->op = LangOp::kLBlock;
  node->alph = u.alphabet();
  node->words.push_back(std::move(u));
  node->l = l;
  node->alpha_single = alpha;
  return LangExpr(std::move(node));
}

namespace {

std::shared_ptr<Node> profile_node(LangOp op, AlphabetRef alphabet, std::vector<Word> factors,
                                   int l, std::vector<int> alpha) {
  if (l < 1) throw Error("threshold l must be >= 1");
  check_factors(alphabet, factors, false);
  if (alpha.size() != factors.size()) throw Error("exponent vector length mismatch");
  for (int a : alpha)
    if (a < 1 || a > l) throw Error("block exponent must lie in [1, l]");
  auto node = std::make_shared<Node>();
  node->op = op;
  node->alph = std::move(alphabet);
  node->words = std::move(factors);
  node->l = l;
  node->alpha = std::move(alpha);
  return node;
}

}  // namespace

LangExpr LangExpr::r_lang(AlphabetRef alphabet, std::vector<Word> factors, int l,
                          std::vector<int> alpha) {
  return LangExpr(profile_node(LangOp::kRLang, std::move(alphabet), std::move(factors), l,
                               std::move(alpha)));
}

LangExpr LangExpr::s_lang(AlphabetRef alphabet, std::vector<Word> factors, int l,
                          std::vector<int> alpha) {
  return LangExpr(profile_node(LangOp::kSLang, std::move(alphabet), std::move(factors), l,
                               std::move(alpha)));
}

LangExpr LangExpr::costa(CostaForm form) {
  form.validate();
  auto node = std::make_shared<Node>();
  node->op = LangOp::kCosta;
  node->alph = form.alphabet;
  node->costa = std::move(form);
  return LangExpr(std::move(node));
}

LangExpr LangExpr::letter_set(AlphabetRef alphabet, std::vector<int> letters) {
  auto node = std::make_shared<Node>();
  node->op = LangOp::kLetterSet;
  node->letters = checked_letter_set(alphabet, std::move(letters));
  node->alph = std::move(alphabet);
  return LangExpr(std::move(node));
}

LangExpr LangExpr::letters_star(AlphabetRef alphabet, std::vector<int> letters) {
  auto node = std::make_shared<Node>();
  node->op = LangOp::kLettersStar;
  node->letters = checked_letter_set(alphabet, std::move(letters));
  node->alph = std::move(alphabet);
  return LangExpr(std::move(node));
}

LangExpr LangExpr::letters_at_least(AlphabetRef alphabet, std::vector<int> letters, int r) {
  if (r < 0) throw Error("letter count bound must be >= 0");
  auto node = std::make_shared<Node>();
  node->op = LangOp::kLettersAtLeast;
  node->letters = checked_letter_set(alphabet, std::move(letters));
  node->r = r;
  node->alph = std::move(alphabet);
  return LangExpr(std::move(node));
}

LangExpr LangExpr::universe(AlphabetRef alphabet) {
  std::vector<int> all(alphabet->size());
  for (int i = 0; i < alphabet->size(); ++i) all[i] = i;
  return letters_star(std::move(alphabet), std::move(all));
}

LangExpr LangExpr::none(AlphabetRef alphabet) { return complement(universe(std::move(alphabet))); }

namespace {

LangExpr nary(LangOp op, std::vector<LangExpr> parts) {
  if (parts.empty()) throw Error("boolean/concat node needs at least one child");
  if (parts.size() == 1) return parts[0];
  for (size_t i = 1; i < parts.size(); ++i)
    if (!same_alphabet(parts[0].alphabet(), parts[i].alphabet()))
      throw Error("alphabet mismatch between subexpressions");
  auto node = std::make_shared<Node>();
  node->op = op;
  node->alph = parts[0].alphabet();
  node->kids = std::move(parts);
  return LangExpr(std::move(node));
}

}  // namespace

LangExpr LangExpr::union_of(std::vector<LangExpr> parts) {
  return nary(LangOp::kUnion, std::move(parts));
}

LangExpr LangExpr::intersection_of(std::vector<LangExpr> parts) {
  return nary(LangOp::kIntersection, std::move(parts));
}

LangExpr LangExpr::complement(LangExpr e) {
  auto node = std::make_shared<Node>();
  node->op = LangOp::kComplement;
  node->alph = e.alphabet();
  node->kids.push_back(std::move(e));
  return LangExpr(std::move(node));
}

LangExpr LangExpr::concat(std::vector<LangExpr> parts) {
  return nary(LangOp::kConcat, std::move(parts));
}

LangOp LangExpr::op() const { return node_->op; }
const AlphabetRef& LangExpr::alphabet() const { return node_->alph; }
const std::vector<Word>& LangExpr::factors() const { return node_->words; }
const Word& LangExpr::single_word() const { return node_->words.at(0); }
int LangExpr::l() const { return node_->l; }
int LangExpr::alpha_single() const { return node_->alpha_single; }
const std::vector<int>& LangExpr::alpha() const { return node_->alpha; }
int LangExpr::r() const { return node_->r; }
const std::vector<int>& LangExpr::letters() const { return node_->letters; }
const CostaForm& LangExpr::costa_form() const { return *node_->costa; }
const std::vector<LangExpr>& LangExpr::children() const { return node_->kids; }

// ---------------------------------------------------------------------------
// Membership

namespace {

/// Range evaluator over one fixed word.
struct Eval {
  const std::vector<int>& w;
  std::map<std::tuple<const void*, int, int>, bool> cache;

  bool letters_match(const Word& u, int at) const {
    for (int t = 0; t < u.length(); ++t)
      if (w[at + t] != u.letter(t)) return false;
    return true;
  }

  bool has_factor(const Word& u, int i, int j) const {
    for (int p = i; p + u.length() <= j; ++p)
      if (letters_match(u, p)) return true;
    return false;
  }

  /// u^reps embeds in w[i:j)
  bool embeds_power(const Word& u, int reps, int i, int j) const {
    if (u.length() == 0) return true;
    int t = 0;
    const int total = u.length() * reps;
    for (int p = i; p < j && t < total; ++p)
      if (w[p] == u.letter(t % u.length())) ++t;
    return t == total;
  }

  bool embeds(const Word& u, int i, int j) const {
    int t = 0;
    for (int p = i; p < j && t < u.length(); ++p)
      if (w[p] == u.letter(t)) ++t;
    return t == u.length();
  }

  bool in_set(int letter, const std::vector<int>& set) const {
    return std::binary_search(set.begin(), set.end(), letter);
  }

  bool single_block(const Word& u, int l, int i, int j) const {
    return has_factor(u, i, j) || embeds_power(u, l, i, j);
  }

  bool eval(const LangExpr& e, int i, int j) {
    const auto key = std::make_tuple(e.id(), i, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const bool out = eval_raw(e, i, j);
    cache.emplace(key, out);
    return out;
  }

  bool eval_raw(const LangExpr& e, int i, int j) {
    switch (e.op()) {
      case LangOp::kShuffleIdeal:
        return embeds(e.single_word(), i, j);
      case LangOp::kFactor:
        return has_factor(e.single_word(), i, j);
      case LangOp::kPrefix:
        return j - i >= e.single_word().length() && letters_match(e.single_word(), i);
      case LangOp::kSuffix:
        return j - i >= e.single_word().length() &&
               letters_match(e.single_word(), j - e.single_word().length());
      case LangOp::kWord:
        return j - i == e.single_word().length() && letters_match(e.single_word(), i);
      case LangOp::kLetterSet:
        return j - i == 1 && in_set(w[i], e.letters());
      case LangOp::kLettersStar: {
        for (int p = i; p < j; ++p)
          if (!in_set(w[p], e.letters())) return false;
        return true;
      }
      case LangOp::kLettersAtLeast: {
        if (j - i < e.r()) return false;
        for (int p = i; p < j; ++p)
          if (!in_set(w[p], e.letters())) return false;
        return true;
      }
      case LangOp::kThresholdBlock: {
        const auto& us = e.factors();
        const int k = static_cast<int>(us.size());
        // ok[t][p]: blocks t.. cover w[i+p : j)
        std::vector<std::vector<char>> ok(k + 1, std::vector<char>(j - i + 1, 0));
        ok[k][j - i] = 1;
        for (int t = k - 1; t >= 0; --t)
          for (int p = j - i; p >= 0; --p)
            for (int q = p; q <= j - i && !ok[t][p]; ++q)
              ok[t][p] = ok[t + 1][q] && single_block(us[t], e.l(), i + p, i + q);
        return ok[0][0];
      }
      case LangOp::kLBlock:
        return e.alpha_single() < e.l() ? has_factor(e.single_word(), i, j)
                                        : embeds_power(e.single_word(), e.l(), i, j);
      case LangOp::kRLang: {
        const auto& us = e.factors();
        const auto& alpha = e.alpha();
        Word base(e.alphabet(), {});
        for (size_t t = 0; t < us.size(); ++t) base = base.concat(us[t].repeat(alpha[t]));
        if (!embeds(base, i, j)) return false;
        for (size_t t = 0; t < us.size(); ++t) {
          if (alpha[t] >= e.l()) continue;
          Word bumped(e.alphabet(), {});
          for (size_t s = 0; s < us.size(); ++s)
            bumped = bumped.concat(us[s].repeat(alpha[s] + (s == t ? 1 : 0)));
          if (embeds(bumped, i, j)) return false;
        }
        return true;
      }
      case LangOp::kSLang: {
        const auto& us = e.factors();
        const auto& alpha = e.alpha();
        for (size_t t = 0; t < us.size(); ++t) {
          if (alpha[t] >= e.l()) continue;
          Word left(e.alphabet(), {});
          for (size_t s = 0; s < t; ++s) left = left.concat(us[s].repeat(alpha[s]));
          Word right(e.alphabet(), {});
          for (size_t s = t + 1; s < us.size(); ++s) right = right.concat(us[s].repeat(alpha[s]));
          const Word& u = us[t];
          bool found = false;
          for (int p = i; p + u.length() <= j && !found; ++p)
            found = letters_match(u, p) && embeds(left, i, p) && embeds(right, p + u.length(), j);
          if (!found) return false;
        }
        return true;
      }
      case LangOp::kCosta:
        return eval_costa(e.costa_form(), i, j);
      case LangOp::kUnion: {
        for (const LangExpr& kid : e.children())
          if (eval(kid, i, j)) return true;
        return false;
      }
      case LangOp::kIntersection: {
        for (const LangExpr& kid : e.children())
          if (!eval(kid, i, j)) return false;
        return true;
      }
      case LangOp::kComplement:
        return !eval(e.children()[0], i, j);
      case LangOp::kConcat: {
        std::vector<char> reach(j - i + 1, 0), next(j - i + 1, 0);
        reach[0] = 1;
        for (const LangExpr& kid : e.children()) {
          std::fill(next.begin(), next.end(), 0);
          for (int p = 0; p <= j - i; ++p) {
            if (!reach[p]) continue;
            for (int q = p; q <= j - i; ++q)
              if (!next[q] && eval(kid, i + p, i + q)) next[q] = 1;
          }
          std::swap(reach, next);
        }
        return reach[j - i];
      }
    }
    throw Error("bad expression node");
  }

  bool eval_costa(const CostaForm& f, int i, int j) {
    // Segment kinds: word, star set, set separator (D1, I>=r, D2).
    struct Seg {
      enum { kWordSeg, kStarSeg, kSetSep } kind;
      const Word* word = nullptr;
      std::vector<int> star, d1, mid, d2;
    };
    std::vector<Seg> segs;
    segs.push_back({Seg::kWordSeg, &f.u[0], {}, {}, {}, {}});
    for (int t = 1; t <= f.n(); ++t) {
      segs.push_back({Seg::kStarSeg, nullptr, f.sets[t - 1], {}, {}, {}});
      if (t < f.n()) {
        if (!f.u[t].empty()) {
          segs.push_back({Seg::kWordSeg, &f.u[t], {}, {}, {}, {}});
        } else {
          Seg s;
          s.kind = Seg::kSetSep;
          std::set_difference(f.sets[t - 1].begin(), f.sets[t - 1].end(), f.sets[t].begin(),
                              f.sets[t].end(), std::back_inserter(s.d1));
          std::set_intersection(f.sets[t - 1].begin(), f.sets[t - 1].end(), f.sets[t].begin(),
                                f.sets[t].end(), std::back_inserter(s.mid));
          std::set_difference(f.sets[t].begin(), f.sets[t].end(), f.sets[t - 1].begin(),
                              f.sets[t - 1].end(), std::back_inserter(s.d2));
          segs.push_back(std::move(s));
        }
      }
    }
    if (f.n() >= 1) segs.push_back({Seg::kWordSeg, &f.u[f.n()], {}, {}, {}, {}});

    const int m = static_cast<int>(segs.size());
    const int len = j - i;
    std::vector<std::vector<char>> ok(m + 1, std::vector<char>(len + 1, 0));
    ok[m][len] = 1;
    for (int t = m - 1; t >= 0; --t) {
      const Seg& s = segs[t];
      for (int p = len; p >= 0; --p) {
        switch (s.kind) {
          case Seg::kWordSeg: {
            const int ulen = s.word->length();
            ok[t][p] = p + ulen <= len && letters_match(*s.word, i + p) && ok[t + 1][p + ulen];
            break;
          }
          case Seg::kStarSeg: {
            for (int q = p; q <= len && !ok[t][p]; ++q) {
              if (ok[t + 1][q]) ok[t][p] = 1;
              if (q < len && !in_set(w[i + q], s.star)) break;
            }
            break;
          }
          case Seg::kSetSep: {
            // D1, mid, D2 are pairwise disjoint; positions p+1..q-1 stay in
            // mid by the break below.
            if (p >= len || !in_set(w[i + p], s.d1)) break;
            for (int q = p + 1; q <= len - 1; ++q) {
              if (q - (p + 1) >= f.r && in_set(w[i + q], s.d2) && ok[t + 1][q + 1]) {
                ok[t][p] = 1;
                break;
              }
              if (!in_set(w[i + q], s.mid)) break;
            }
            break;
          }
        }
      }
    }
    return ok[0][0];
  }
};

}  // namespace

bool member(const LangExpr& e, const Word& w) {
  if (!same_alphabet(e.alphabet(), w.alphabet()))
    throw Error("alphabet mismatch between expression and word");
  Eval ev{w.letters(), {}};
  return ev.eval(e, 0, w.length());
}

// ---------------------------------------------------------------------------
// Pretty printing

namespace {

std::string quoted(const Word& u) { return "\"" + u.to_string() + "\""; }

std::string set_str(const AlphabetRef& alph, const std::vector<int>& letters) {
  std::string out = "[";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += alph->at(letters[i]).to_string();
  }
  return out + "]";
}

std::string join_words(const std::vector<Word>& ws) {
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ',';
    out += ws[i].to_string();
  }
  return out;
}

std::string vec_str(const std::vector<int>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string LangExpr::pretty() const {
  const Node& n = *node_;
  switch (n.op) {
    case LangOp::kShuffleIdeal:
      return "sh(" + n.words[0].to_string() + ")";
    case LangOp::kFactor:
      return "fac(" + n.words[0].to_string() + ")";
    case LangOp::kPrefix:
      return "pre(" + n.words[0].to_string() + ")";
    case LangOp::kSuffix:
      return "suf(" + n.words[0].to_string() + ")";
    case LangOp::kWord:
      return quoted(n.words[0]);
    case LangOp::kThresholdBlock:
      return "<" + join_words(n.words) + ">_" + std::to_string(n.l);
    case LangOp::kLBlock:
      return "lb(" + n.words[0].to_string() + "," + std::to_string(n.l) + "," +
             std::to_string(n.alpha_single) + ")";
    case LangOp::kRLang:
      return "R" + vec_str(n.alpha) + "_" + std::to_string(n.l) + "(" + join_words(n.words) + ")";
    case LangOp::kSLang:
      return "S" + vec_str(n.alpha) + "_" + std::to_string(n.l) + "(" + join_words(n.words) + ")";
    case LangOp::kCosta: {
      const CostaForm& f = *n.costa;
      std::string out = quoted(f.u[0]);
      for (int t = 1; t <= f.n(); ++t) {
        out += set_str(n.alph, f.sets[t - 1]) + "*";
        if (t < f.n()) {
          if (!f.u[t].empty())
            out += quoted(f.u[t]);
          else
            out += "(sep>=" + std::to_string(f.r) + ")";
        }
      }
      if (f.n() >= 1) out += quoted(f.u[f.n()]);
      return out;
    }
    case LangOp::kLetterSet:
      return set_str(n.alph, n.letters);
    case LangOp::kLettersStar:
      return set_str(n.alph, n.letters) + "*";
    case LangOp::kLettersAtLeast:
      return set_str(n.alph, n.letters) + ">=" + std::to_string(n.r);
    case LangOp::kUnion:
    case LangOp::kIntersection:
    case LangOp::kConcat: {
      const char* sep = n.op == LangOp::kUnion ? " | " : n.op == LangOp::kIntersection ? " & " : " . ";
      std::string out = "(";
      for (size_t i = 0; i < n.kids.size(); ++i) {
        if (i) out += sep;
        out += n.kids[i].pretty();
      }
      return out + ")";
    }
    case LangOp::kComplement:
      return "!" + n.kids[0].pretty();
  }
  throw Error("bad expression node");
}

}  // namespace mpj
