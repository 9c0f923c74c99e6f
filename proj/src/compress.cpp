#include "mpj/compress.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mpj {

namespace {

/// Per (position, letter) pair: index of the first instruction outputting
/// `value` there, and of the last one outputting `last_value`.
void boundary_indices(const std::vector<Instruction>& instructions, int sigma,
                      int value, int last_value, std::set<int>& out) {
  std::set<std::pair<int, int>> first_seen;
  for (int i = 0; i < static_cast<int>(instructions.size()); ++i) {
    const Instruction& ins = instructions[i];
    for (int a = 0; a < sigma; ++a) {
      if (ins.out[a] == value && first_seen.insert({ins.pos, a}).second)
        out.insert(i);
    }
  }
  std::set<std::pair<int, int>> pending;
  for (int i = static_cast<int>(instructions.size()); i-- > 0;) {
    const Instruction& ins = instructions[i];
    for (int a = 0; a < sigma; ++a) {
      if (ins.out[a] == last_value && pending.insert({ins.pos, a}).second)
        out.insert(i);
    }
  }
}

void collect(const std::vector<Instruction>& instructions, int sigma,
             const std::vector<int>& t, std::set<int>& out) {
  int k = static_cast<int>(t.size());
  if (k == 0 || instructions.empty()) return;
  if (k == 1) {
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < static_cast<int>(instructions.size()); ++i)
      for (int a = 0; a < sigma; ++a)
        if (instructions[i].out[a] == t[0] && seen.insert({instructions[i].pos, a}).second)
          out.insert(i);
    return;
  }
  std::set<int> boundary;
  boundary_indices(instructions, sigma, t[0], t[k - 1], boundary);
  out.insert(boundary.begin(), boundary.end());
  if (k == 2) return;

  std::vector<int> idx(boundary.begin(), boundary.end());
  for (size_t j = 0; j + 1 < idx.size(); ++j) {
    std::vector<Instruction> window(instructions.begin() + idx[j] + 1,
                                    instructions.begin() + idx[j + 1]);
    if (window.empty()) continue;
    for (int alpha = 2; alpha <= k - 1; ++alpha) {
      for (int beta = alpha; beta <= k - 1; ++beta) {
        std::vector<int> sub(t.begin() + alpha - 1, t.begin() + beta);
        std::set<int> inner;
        collect(window, sigma, sub, inner);
        for (int e : inner) out.insert(e + idx[j] + 1);
      }
    }
  }
}

}  // namespace

std::vector<int> compress_subword_indices(const Program& p,
                                          const std::vector<int>& t) {
  for (int v : t)
    if (v < 0 || v >= p.target->size())
      throw Error("compress: t is not over the program's monoid");
  std::set<int> out;
  collect(p.instructions, p.input_alphabet->size(), t, out);
  return {out.begin(), out.end()};
}

int64_t compression_bound(int k, int sigma_size, int n) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t out = 1;
  auto mul = [&](int64_t f) {
    if (f != 0 && out > kMax / f) out = kMax;
    else out *= f;
  };
  for (int j = 2; j <= k; ++j) mul(j);
  for (int j = 0; j < (k + 1) / 2; ++j) {
    mul(sigma_size);
    mul(n);
  }
  return out;
}

Program subprogram(const Program& p, const std::vector<int>& indices) {
  Program q;
  q.input_alphabet = p.input_alphabet;
  q.n = p.n;
  q.target = p.target;
  q.accept = p.accept;
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i >= static_cast<int>(p.instructions.size()))
      throw Error("subprogram: indices must be ascending and in range");
    prev = i;
    q.instructions.push_back(p.instructions[i]);
  }
  return q;
}

Compressed compress_equivalent(const Program& p, int k) {
  if (k < 0) throw Error("compress: k must be >= 0");
  int m = p.target->size();
  std::set<int> keep;
  std::vector<int> t;
  // Odometer over all nonempty t in M^{<=k}, shortest first.
  for (int len = 1; len <= k; ++len) {
    t.assign(len, 0);
    while (true) {
      std::vector<int> indices = compress_subword_indices(p, t);
      keep.insert(indices.begin(), indices.end());
      size_t i = t.size();
      while (i > 0 && t[i - 1] == m - 1) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
  Compressed out;
  out.kept.assign(keep.begin(), keep.end());
  out.program = subprogram(p, out.kept);
  return out;
}

}  // namespace mpj
