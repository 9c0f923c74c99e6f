#pragma once

#include <cstdint>
#include <vector>

#include "mpj/lang.hpp"
#include "mpj/programs.hpp"

namespace mpj {

/// Marker alphabet for depth k: e, #, and paired markers for each depth
/// 1..k (depth l prints as T:l-1 / B:l-1).
AlphabetRef selector_alphabet(int k);

/// Z_0 = words over {e,#} containing '#'; Z_k = Y_{k-1}* T_k Z_{k-1} B_k
/// Y_{k-1}* where Y_{k-1} is the depth-(k-1) marker alphabet.
LangExpr selector_language(int k);

/// A tabulated function [n]^k -> subsets of [n]. Entries are stored in
/// lexicographic order of the argument tuple, first component most
/// significant.
struct SelectorFn {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> table;  // strictly increasing subsets of 1..n

  void validate() const;
  int64_t rho_index(const std::vector<int>& rho) const;
  const std::vector<int>& at(const std::vector<int>& rho) const;
  static SelectorFn random(int k, int n, uint64_t seed);
};

/// Input encoding over {0,1}^{(k+1)n}: k index blocks then a data block. The
/// input is selected when every index block has exactly one 1, at position
/// rho_b, and the data block carries a 1 at some position in sigma(rho).
bool selector_member(const SelectorFn& sigma, const Word& w);

/// Word program over {0,1} whose output lies in selector_language(k) exactly
/// on the selected inputs. Length <= 2(k+1) n^{k+1}.
GammaProgram selector_program(const SelectorFn& sigma);

}  // namespace mpj
