#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpj/config.hpp"
#include "mpj/dfa.hpp"
#include "mpj/words.hpp"

namespace mpj {

/// Finite semigroup given by a full multiplication table.
class FiniteSemigroup {
 public:
  /// Checks squareness, entry ranges, associativity and (when given) the
  /// identity law; throws Error on violation, CapExceeded past `cap`
  /// (element cap from Config::global() when cap < 0). When `generators`
  /// is nonempty it must generate the semigroup and associativity is
  /// verified by Light's test restricted to it.
  static FiniteSemigroup validate_and_build(const std::vector<std::vector<int>>& table,
                                            std::optional<int> identity, int cap = -1,
                                            const std::vector<int>& generators = {});
  /// Wraps a table that is associative by construction (internal builders).
  static FiniteSemigroup unchecked(std::vector<int> flat, int size,
                                   std::optional<int> identity);

  FiniteSemigroup() = default;

  int size() const { return size_; }
  int mul(int a, int b) const { return flat_[static_cast<size_t>(a) * size_ + b]; }
  std::optional<int> identity() const { return identity_; }

  /// x^e for e >= 1 (e = 0 allowed when an identity is present).
  int power(int x, long long e) const;
  std::vector<int> idempotents() const;
  /// Scans for a two-sided identity.
  std::optional<int> detect_identity() const;
  std::vector<std::vector<int>> table() const;

 protected:
  int size_ = 0;
  std::optional<int> identity_;
  std::vector<int> flat_;
};

/// Finite monoid: semigroup with a distinguished identity; caches the
/// idempotent power omega.
class FiniteMonoid : public FiniteSemigroup {
 public:
  static FiniteMonoid validate_and_build(const std::vector<std::vector<int>>& table,
                                         int identity, int cap = -1,
                                         const std::vector<int>& generators = {});
  static FiniteMonoid unchecked(std::vector<int> flat, int size, int identity);
  /// The trivial monoid {1}.
  static FiniteMonoid trivial();

  int one() const { return *identity_; }
  long long omega() const { return omega_; }

 private:
  long long omega_ = 1;
};

using MonoidRef = std::shared_ptr<const FiniteMonoid>;

/// Smallest e >= 1 with x^e idempotent for every x.
long long idempotent_power(const FiniteSemigroup& s);

enum class Variety { kA, kDA, kJ };

Variety variety_from_name(const std::string& name);
std::string variety_name(Variety v);

/// Outcome of an omega-equation check; witness holds the elements violating
/// `equation` when the check fails.
struct VarietyCheck {
  bool holds = true;
  std::string equation;
  std::vector<int> witness;
};

/// Decides membership of M in A (x^w = x^w+1), DA ((xy)^w x (xy)^w = (xy)^w)
/// or J ((xy)^w = (xy)^w x = y (xy)^w).
VarietyCheck check_variety(const FiniteMonoid& m, Variety v);

/// Checks every local monoid eSe against the J equations, using each local
/// monoid's own idempotent power.
struct LocalJCheck {
  bool holds = true;
  int idempotent = -1;
  std::string equation;
  std::vector<int> witness;  // elements of eSe, as elements of s
};
LocalJCheck is_locally_J(const FiniteSemigroup& s);

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b, int cap = -1);

/// Morphism from a free monoid into a finite monoid, given on letters.
struct GeneratedMorphism {
  AlphabetRef alphabet;
  MonoidRef target;
  std::vector<int> letter_image;

  int eval(const Word& w) const;
  int eval_letters(const std::vector<int>& letters) const;
};

/// Transition monoid of a complete DFA: transformations of the state set
/// generated by the letter actions, in BFS order from the identity
/// (generators applied on the right, letters in alphabet order).
struct TransitionMonoid {
  GeneratedMorphism morphism;
  /// element -> the transformation it denotes (state -> state).
  std::vector<std::vector<int>> transformations;
};
TransitionMonoid transition_monoid(const Dfa& d, int cap = -1);

/// Syntactic monoid of the language of `d`: transition monoid of the
/// minimal complete DFA, plus the accepting element set.
struct SyntacticMonoid {
  GeneratedMorphism morphism;
  std::vector<bool> accept;
};
SyntacticMonoid syntactic_monoid(const Dfa& d, int cap = -1);

/// Image of nonempty words only; identity() is set when some nonempty word
/// acts as a two-sided identity on the image.
struct SyntacticSemigroup {
  AlphabetRef alphabet;
  std::shared_ptr<const FiniteSemigroup> semigroup;
  std::vector<int> letter_image;
  std::vector<bool> accept;
};
SyntacticSemigroup syntactic_semigroup(const Dfa& d, int cap = -1);

/// Stability data of a surjection-onto-its-image morphism phi: the least
/// k >= 1 with phi(Sigma^2k) = phi(Sigma^k), the stable semigroup
/// S = phi(Sigma^k), and its monoid completion S^1 (identity adjoined only
/// when S has none).
struct StableStructure {
  int k = 1;
  std::vector<int> stable_elements;  // M-element indices, ascending
  FiniteSemigroup semigroup;
  FiniteMonoid monoid;
  bool adjoined_identity = false;
};
StableStructure stable_pair(const GeneratedMorphism& phi);

/// Quotient of the free monoid by ~k, built by BFS over subword sets.
/// Element 0 is the class of the empty word; representatives are the
/// shortlex-least BFS witnesses.
struct QuotientMonoid {
  GeneratedMorphism morphism;
  std::vector<Word> representatives;
};
QuotientMonoid quotient_by_sim_k(const AlphabetRef& alphabet, int k, int cap = -1);

}  // namespace mpj
