#include "mpj/selectors.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace mpj {

namespace {

constexpr int kIdle = 0;  // 'e'
constexpr int kMark = 1;  // '#'

int top_index(int depth) { return 2 + 2 * (depth - 1); }
int bot_index(int depth) { return 3 + 2 * (depth - 1); }

/// Letter indices of the depth-l marker alphabet inside selector_alphabet(k).
std::vector<int> marker_letters(int depth) {
  std::vector<int> out = {kIdle, kMark};
  for (int j = 1; j <= depth; ++j) {
    out.push_back(top_index(j));
    out.push_back(bot_index(j));
  }
  return out;
}

int64_t checked_pow(int64_t base, int exp, int64_t cap) {
  int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) throw CapExceeded("selector table too large");
    out *= base;
  }
  return out;
}

}  // namespace

AlphabetRef selector_alphabet(int k) {
  if (k < 0) throw Error("selector depth must be >= 0");
  std::vector<Symbol> syms{Symbol('e'), Symbol('#')};
  for (int l = 1; l <= k; ++l) {
    syms.emplace_back('T', l - 1);
    syms.emplace_back('B', l - 1);
  }
  return Alphabet::of_symbols(std::move(syms));
}

LangExpr selector_language(int k) {
  AlphabetRef a = selector_alphabet(k);
  LangExpr inner = LangExpr::concat({LangExpr::letters_star(a, {kIdle, kMark}),
                                     LangExpr::letter_set(a, {kMark}),
                                     LangExpr::letters_star(a, {kIdle, kMark})});
  for (int l = 1; l <= k; ++l) {
    LangExpr outer = LangExpr::letters_star(a, marker_letters(l - 1));
    inner = LangExpr::concat({outer, LangExpr::letter_set(a, {top_index(l)}),
                              std::move(inner),
                              LangExpr::letter_set(a, {bot_index(l)}), outer});
  }
  return inner;
}

void SelectorFn::validate() const {
  if (k < 0 || n < 0) throw Error("selector: k and n must be >= 0");
  int64_t entries = k == 0 ? 1 : checked_pow(n, k, int64_t{1} << 40);
  if (static_cast<int64_t>(table.size()) != entries)
    throw Error("selector: table must have n^k entries");
  for (const auto& sel : table) {
    int prev = 0;
    for (int j : sel) {
      if (j <= prev || j > n) throw Error("selector: table entries must be strictly increasing subsets of 1..n");
      prev = j;
    }
  }
}

int64_t SelectorFn::rho_index(const std::vector<int>& rho) const {
  if (static_cast<int>(rho.size()) != k)
    throw Error("selector: argument tuple must have k components");
  int64_t idx = 0;
  for (int v : rho) {
    if (v < 1 || v > n) throw Error("selector: argument component out of 1..n");
    idx = idx * n + (v - 1);
  }
  return idx;
}

const std::vector<int>& SelectorFn::at(const std::vector<int>& rho) const {
  return table[rho_index(rho)];
}

SelectorFn SelectorFn::random(int k, int n, uint64_t seed) {
  SelectorFn out;
  out.k = k;
  out.n = n;
  int64_t entries = k == 0 ? 1 : checked_pow(n, k, int64_t{1} << 20);
  std::mt19937_64 rng(seed);
  out.table.resize(entries);
  for (auto& sel : out.table)
    for (int j = 1; j <= n; ++j)
      if (rng() & 1) sel.push_back(j);
  return out;
}

bool selector_member(const SelectorFn& sigma, const Word& w) {
  sigma.validate();
  if (w.length() != (sigma.k + 1) * sigma.n)
    throw Error("selector: input must have length (k+1)n");
  std::vector<int> rho;
  for (int b = 0; b < sigma.k; ++b) {
    int ones = 0, where = -1;
    for (int j = 0; j < sigma.n; ++j) {
      if (w.letter(b * sigma.n + j) == 1) {
        ++ones;
        where = j + 1;
      }
    }
    if (ones != 1) return false;
    rho.push_back(where);
  }
  const std::vector<int>& sel = sigma.at(rho);
  for (int j : sel)
    if (w.letter(sigma.k * sigma.n + j - 1) == 1) return true;
  return false;
}

namespace {

struct SelectorEmitter {
  const SelectorFn& sigma;
  std::vector<Instruction>& out;
  std::vector<int> prefix;

  // Depth d reads block d (positions d*n+1 .. (d+1)*n); the innermost level
  // reads the data block.
  void emit(int depth_left, int d) {
    int n = sigma.n;
    if (depth_left == 0) {
      const std::vector<int>& sel = sigma.at(prefix);
      for (int j = 1; j <= n; ++j) {
        bool selected = std::binary_search(sel.begin(), sel.end(), j);
        out.push_back(
            Instruction{d * n + j, {kIdle, selected ? kMark : kIdle}});
      }
      return;
    }
    for (int i = 1; i <= n; ++i) {
      out.push_back(Instruction{d * n + i, {kIdle, top_index(depth_left)}});
      prefix.push_back(i);
      emit(depth_left - 1, d + 1);
      prefix.pop_back();
      out.push_back(Instruction{d * n + i, {kIdle, bot_index(depth_left)}});
    }
  }
};

}  // namespace

GammaProgram selector_program(const SelectorFn& sigma) {
  sigma.validate();
  GammaProgram g;
  g.input_alphabet = Alphabet::of_chars("01");
  g.n = (sigma.k + 1) * sigma.n;
  g.output_alphabet = selector_alphabet(sigma.k);
  SelectorEmitter emitter{sigma, g.instructions, {}};
  emitter.emit(sigma.k, 0);
  return g;
}

}  // namespace mpj
