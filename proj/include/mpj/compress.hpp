#pragma once

#include <cstdint>
#include <vector>

#include "mpj/programs.hpp"

namespace mpj {

/// Indices (ascending, 0-based) of a subprogram Q = P[I] such that for every
/// I' containing I, t is a subword of eval_trace(P, w) iff it is a subword of
/// eval_trace(P[I'], w), for all w. |I| <= c_|t| * n^ceil(|t|/2) with
/// c_k = k! * |Sigma|^ceil(k/2).
std::vector<int> compress_subword_indices(const Program& p,
                                          const std::vector<int>& t);

/// c_k * n^ceil(k/2), saturating at INT64_MAX.
int64_t compression_bound(int k, int sigma_size, int n);

struct Compressed {
  Program program;
  std::vector<int> kept;  // ascending indices into the original program
};

/// Restriction of P to the union of compress_subword_indices(P, t) over all
/// nonempty t in M^{<=k}. Traces of the result have the same subwords of
/// length <= k as P's, hence are ~k-equivalent.
Compressed compress_equivalent(const Program& p, int k);

/// P restricted to an ascending index set.
Program subprogram(const Program& p, const std::vector<int>& indices);

}  // namespace mpj
