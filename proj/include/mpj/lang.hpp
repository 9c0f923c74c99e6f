#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpj/dfa.hpp"
#include "mpj/words.hpp"

namespace mpj {

enum class LangOp {
  kShuffleIdeal,    // {w : u embeds in w}
  kFactor,          // Sigma* u Sigma*
  kPrefix,          // u Sigma*
  kSuffix,          // Sigma* u
  kWord,            // {u}
  kThresholdBlock,  // <u1,...,uk>_l
  kLBlock,          // factor language (alpha < l) or power-l shuffle ideal (alpha = l)
  kRLang,           // subword profile of a threshold block at exponent vector alpha
  kSLang,           // factor-with-context conjuncts at exponent vector alpha
  kCosta,           // u0 A1* X1 ... X_{n-1} An* un
  kLetterSet,       // one letter drawn from a set
  kLettersStar,     // S*
  kLettersAtLeast,  // S^(>= r)
  kUnion,
  kIntersection,
  kComplement,
  kConcat,
};

class LangExpr;

/// Strongly constrained concatenation shape: u0 A1* X1 A2* ... X_{n-1} An* un,
/// where separator X_i is the single word u_i when u_i is nonempty (its letter
/// set contained in neither adjacent star set), and otherwise the set shape
/// (A_i \ A_{i+1}) (A_i cap A_{i+1})^{>=r} (A_{i+1} \ A_i) over incomparable
/// adjacent star sets.
struct CostaForm {
  AlphabetRef alphabet;
  int r = 0;
  std::vector<Word> u;                 // u0..un, exactly n+1 entries
  std::vector<std::vector<int>> sets;  // A1..An as sorted letter indices

  int n() const { return static_cast<int>(sets.size()); }
  void validate() const;
};

/// Immutable language expression over a fixed alphabet.
class LangExpr {
 public:
  static LangExpr shuffle_ideal(Word u);
  static LangExpr factor(Word u);
  static LangExpr prefix(Word u);
  static LangExpr suffix(Word u);
  static LangExpr word(Word u);
  /// <u1,...,uk>_l: concatenation of single-factor blocks; factors nonempty.
  static LangExpr threshold_block(AlphabetRef alphabet, std::vector<Word> factors, int l);
  static LangExpr l_block(Word u, int l, int alpha);
  static LangExpr r_lang(AlphabetRef alphabet, std::vector<Word> factors, int l,
                         std::vector<int> alpha);
  static LangExpr s_lang(AlphabetRef alphabet, std::vector<Word> factors, int l,
                         std::vector<int> alpha);
  static LangExpr costa(CostaForm form);
  static LangExpr letter_set(AlphabetRef alphabet, std::vector<int> letters);
  static LangExpr letters_star(AlphabetRef alphabet, std::vector<int> letters);
  static LangExpr letters_at_least(AlphabetRef alphabet, std::vector<int> letters, int r);
  static LangExpr universe(AlphabetRef alphabet);
  static LangExpr none(AlphabetRef alphabet);
  static LangExpr union_of(std::vector<LangExpr> parts);
  static LangExpr intersection_of(std::vector<LangExpr> parts);
  static LangExpr complement(LangExpr e);
  static LangExpr concat(std::vector<LangExpr> parts);

  LangOp op() const;
  const AlphabetRef& alphabet() const;
  const std::vector<Word>& factors() const;
  const Word& single_word() const;
  int l() const;
  int alpha_single() const;  // kLBlock
  const std::vector<int>& alpha() const;
  int r() const;
  const std::vector<int>& letters() const;
  const CostaForm& costa_form() const;
  const std::vector<LangExpr>& children() const;

  std::string pretty() const;
  const void* id() const { return node_.get(); }

  struct Node;  // definition internal to the library
  explicit LangExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const Node> node_;
};

/// Direct recursive membership test (no automaton construction).
bool member(const LangExpr& e, const Word& w);

/// Compiles to the minimal complete DFA. Intermediate products and subset
/// constructions respect the state cap (Config::global().state_cap when
/// negative); CapExceeded names the subexpression responsible.
Dfa compile(const LangExpr& e, int state_cap = -1);

/// The separator-wise normal form of a Costa shape as an expression tree.
LangExpr costa_lang(const CostaForm& f);
/// Threshold-block characterization: equal to costa_lang(f) as a language.
LangExpr costa_K(const CostaForm& f);

/// Whether L(d) is a union of ~k classes, decided by a BFS over
/// (subword-set class, state) pairs; classes are interned, capped by
/// class_cap (Config::global().class_cap when negative).
bool is_k_pt(const Dfa& d, int k, int64_t class_cap = -1);

}  // namespace mpj
