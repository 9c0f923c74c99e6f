#pragma once

#include <cstdint>

namespace mpj {

/// Size caps shared by the compilation and algebra layers.
///
/// `state_cap` bounds intermediate DFA state counts, `element_cap` bounds
/// monoid/semigroup sizes wherever a multiplication table is materialized,
/// and `class_cap` bounds the number of interned ~k-classes in the
/// piecewise-testability decision procedure (which stores no table and can
/// afford far more elements).
struct Config {
  int state_cap = 100000;
  int element_cap = 5000;
  int64_t class_cap = 5000000;

  static Config& global();
};

}  // namespace mpj
