#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpj/error.hpp"

namespace mpj {

/// A letter: a printable ASCII base character plus an optional small tag.
/// Tagged symbols print as `a:0`; untagged ones as the bare character.
struct Symbol {
  static constexpr int kNoTag = -1;

  char base = '?';
  int tag = kNoTag;

  Symbol() = default;
  Symbol(char b) : base(b) {}  // NOLINT: implicit by design
  Symbol(char b, int t) : base(b), tag(t) {}

  bool tagged() const { return tag != kNoTag; }
  std::string to_string() const;
  static Symbol parse(std::string_view token);

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

/// An ordered set of distinct symbols. Letter indices used by Word refer to
/// this order. If any symbol carries a tag, the set of tags in use must be
/// contiguous from 0.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Symbol> symbols);

  /// Untagged alphabet from a character string, e.g. "abc".
  static AlphabetRef of_chars(std::string_view chars);
  static AlphabetRef of_symbols(std::vector<Symbol> symbols);
  /// `base × {0..tags-1}` with symbol (b, t) at index `b_idx * tags + t`.
  static AlphabetRef with_tags(const Alphabet& base, int tags);

  int size() const { return static_cast<int>(symbols_.size()); }
  const Symbol& at(int i) const { return symbols_.at(i); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::optional<int> find(const Symbol& s) const;
  int index_of(const Symbol& s) const;  // throws if absent
  bool has_tags() const { return tag_count_ > 0; }
  int tag_count() const { return tag_count_; }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

  /// "abc" when untagged, "a:0,b:0,a:1" style otherwise.
  std::string to_string() const;
  static AlphabetRef parse(std::string_view text);

 private:
  std::vector<Symbol> symbols_;
  int tag_count_ = 0;
};

/// Same symbols in the same order (contents, not pointer identity).
bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

/// A finite word: letter indices into a fixed alphabet.
class Word {
 public:
  Word() = default;
  Word(AlphabetRef alphabet, std::vector<int> letters);

  /// Parses the alphabet's string form: plain characters for untagged
  /// alphabets, comma-separated symbol tokens otherwise. "" is the empty word.
  static Word parse(AlphabetRef alphabet, std::string_view text);

  const AlphabetRef& alphabet() const { return alphabet_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int i) const { return letters_[i]; }
  const Symbol& symbol(int i) const;
  const std::vector<int>& letters() const { return letters_; }

  Word concat(const Word& rhs) const;
  Word repeat(int times) const;
  Word slice(int begin, int end) const;

  std::string to_string() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator<(const Word& o) const;  // shortlex

 private:
  AlphabetRef alphabet_;
  std::vector<int> letters_;
};

/// True iff u embeds in w as a scattered subsequence.
bool is_subword(const Word& u, const Word& w);
/// True iff u occurs in w as a contiguous block.
bool is_factor(const Word& u, const Word& w);

/// The set of scattered subwords of length <= k of one word, in shortlex
/// order. Supports the split rule: every subword of uv of length <= k is a
/// concatenation of a subword of u and a subword of v with total length <= k.
class SubwordSet {
 public:
  static SubwordSet of_word(const Word& w, int k);
  /// Subword set of the empty word: {ε}.
  static SubwordSet of_empty(AlphabetRef alphabet, int k);

  int k() const { return k_; }
  const std::vector<std::vector<int>>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(const std::vector<int>& u) const;

  SubwordSet append_letter(int letter) const;
  SubwordSet concat(const SubwordSet& rhs) const;

  bool operator==(const SubwordSet& o) const = default;
  /// Stable key for hashing/interning.
  std::string key() const;

 private:
  SubwordSet(AlphabetRef alphabet, int k) : alphabet_(std::move(alphabet)), k_(k) {}

  AlphabetRef alphabet_;
  int k_ = 0;
  std::vector<std::vector<int>> members_;  // shortlex-sorted, deduplicated
};

SubwordSet subword_set(const Word& w, int k);
/// u ~k v: equal sets of subwords of length <= k.
bool sim_k(const Word& u, const Word& v, int k);

/// Streams all words with min_len <= |w| <= max_len in shortlex order.
class WordEnumerator {
 public:
  WordEnumerator(AlphabetRef alphabet, int min_len, int max_len);
  std::optional<Word> next();

 private:
  AlphabetRef alphabet_;
  int max_len_;
  int len_;
  bool fresh_len_ = true;
  std::vector<int> current_;
};

/// Calls fn(letters) for every word of exactly the given length.
void for_each_word(const AlphabetRef& alphabet, int length,
                   const std::function<void(const std::vector<int>&)>& fn);

}  // namespace mpj
