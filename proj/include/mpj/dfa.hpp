#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mpj/words.hpp"

namespace mpj {

/// Deterministic automaton; delta[q][c] = -1 marks a missing edge.
struct Dfa {
  AlphabetRef alphabet;
  int start = 0;
  std::vector<std::vector<int>> delta;
  std::vector<bool> accept;

  int states() const { return static_cast<int>(delta.size()); }
  bool is_complete() const;
  /// Runs the word; missing edges reject.
  bool member(const Word& w) const;
  int run(const std::vector<int>& letters) const;  // -1 on missing edge
  void validate() const;
};

/// Adds a sink for missing edges (no-op when already complete).
Dfa complete_dfa(const Dfa& d);

/// Minimal complete DFA with canonical state numbering (BFS from the start
/// state in letter order).
Dfa minimize_dfa(const Dfa& d, int state_cap = -1);

Dfa intersect_dfa(const Dfa& a, const Dfa& b, int state_cap = -1);
Dfa union_dfa(const Dfa& a, const Dfa& b, int state_cap = -1);
Dfa complement_dfa(const Dfa& d);
/// Language concatenation via subset tracking of the second automaton.
Dfa concat_dfa(const Dfa& a, const Dfa& b, int state_cap = -1);

/// nullopt when the languages agree, otherwise a shortest distinguishing word.
std::optional<Word> dfa_equal(const Dfa& a, const Dfa& b);

/// Number of words of each length 0..max_len accepted by d.
std::vector<long long> count_words(const Dfa& d, int max_len);

}  // namespace mpj
