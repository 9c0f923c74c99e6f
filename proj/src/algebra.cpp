#include "mpj/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "mpj/error.hpp"

namespace mpj {

namespace {

constexpr long long kOmegaLimit = 4000000000000000000LL;

int element_cap_or_default(int cap) {
  return cap < 0 ? Config::global().element_cap : cap;
}

std::vector<int> flatten_table(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(m) * m);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) throw Error("multiplication table is not square");
    for (int x : row) {
      if (x < 0 || x >= m) throw Error("multiplication table entry out of range");
      flat.push_back(x);
    }
  }
  return flat;
}

void check_associative_full(const std::vector<int>& flat, int m) {
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int ab = flat[static_cast<size_t>(a) * m + b];
      for (int c = 0; c < m; ++c) {
        const int bc = flat[static_cast<size_t>(b) * m + c];
        if (flat[static_cast<size_t>(ab) * m + c] != flat[static_cast<size_t>(a) * m + bc])
          throw Error("multiplication table is not associative");
      }
    }
}

/// Light's test: elements b with (ab)c = a(bc) for all a, c form a set closed
/// under the product, so checking the generators and that they generate
/// suffices.
void check_associative_generated(const std::vector<int>& flat, int m,
                                 const std::vector<int>& gens) {
  for (int g : gens) {
    if (g < 0 || g >= m) throw Error("generator index out of range");
    for (int a = 0; a < m; ++a) {
      const int ag = flat[static_cast<size_t>(a) * m + g];
      for (int c = 0; c < m; ++c) {
        const int gc = flat[static_cast<size_t>(g) * m + c];
        if (flat[static_cast<size_t>(ag) * m + c] != flat[static_cast<size_t>(a) * m + gc])
          throw Error("multiplication table is not associative");
      }
    }
  }
  std::vector<bool> reached(m, false);
  std::queue<int> queue;
  std::vector<int> members;
  for (int g : gens)
    if (!reached[g]) {
      reached[g] = true;
      queue.push(g);
      members.push_back(g);
    }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    const size_t count = members.size();
    for (size_t i = 0; i < count; ++i) {
      for (int y : {flat[static_cast<size_t>(x) * m + members[i]],
                    flat[static_cast<size_t>(members[i]) * m + x]}) {
        if (!reached[y]) {
          reached[y] = true;
          queue.push(y);
          members.push_back(y);
        }
      }
    }
  }
  for (int x = 0; x < m; ++x)
    if (!reached[x]) throw Error("given generators do not generate the semigroup");
}

void check_identity_law(const std::vector<int>& flat, int m, int e) {
  if (e < 0 || e >= m) throw Error("identity index out of range");
  for (int x = 0; x < m; ++x)
    if (flat[static_cast<size_t>(e) * m + x] != x || flat[static_cast<size_t>(x) * m + e] != x)
      throw Error("identity law fails");
}

/// Cyclic structure of x: least i >= 1 and p >= 1 with x^(i+p) = x^i.
std::pair<long long, long long> cycle_of(const FiniteSemigroup& s, int x) {
  std::map<int, long long> seen;
  int y = x;
  long long step = 1;
  while (true) {
    auto [it, fresh] = seen.emplace(y, step);
    if (!fresh) return {it->second, step - it->second};
    y = s.mul(y, x);
    ++step;
  }
}

long long lcm_guarded(long long a, long long b) {
  const long long g = std::gcd(a, b);
  if (a / g > kOmegaLimit / b) throw Error("idempotent power overflow");
  return a / g * b;
}

}  // namespace

FiniteSemigroup FiniteSemigroup::validate_and_build(const std::vector<std::vector<int>>& table,
                                                    std::optional<int> identity, int cap,
                                                    const std::vector<int>& generators) {
  const int m = static_cast<int>(table.size());
  if (m == 0) throw Error("semigroup must be nonempty");
  if (m > element_cap_or_default(cap))
    throw CapExceeded("semigroup size " + std::to_string(m) + " exceeds element cap");
  FiniteSemigroup s;
  s.size_ = m;
  s.flat_ = flatten_table(table);
  if (generators.empty())
    check_associative_full(s.flat_, m);
  else
    check_associative_generated(s.flat_, m, generators);
  if (identity) check_identity_law(s.flat_, m, *identity);
  s.identity_ = identity;
  return s;
}

FiniteSemigroup FiniteSemigroup::unchecked(std::vector<int> flat, int size,
                                           std::optional<int> identity) {
  FiniteSemigroup s;
  s.size_ = size;
  s.flat_ = std::move(flat);
  s.identity_ = identity;
  return s;
}

int FiniteSemigroup::power(int x, long long e) const {
  if (e == 0) {
    if (!identity_) throw Error("zeroth power needs an identity");
    return *identity_;
  }
  if (e < 0) throw Error("negative power");
  int acc = -1;
  int base = x;
  while (e > 0) {
    if (e & 1) acc = acc < 0 ? base : mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> out;
  for (int x = 0; x < size_; ++x)
    if (mul(x, x) == x) out.push_back(x);
  return out;
}

std::optional<int> FiniteSemigroup::detect_identity() const {
  for (int e = 0; e < size_; ++e) {
    bool ok = true;
    for (int x = 0; x < size_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> FiniteSemigroup::table() const {
  std::vector<std::vector<int>> out(size_);
  for (int i = 0; i < size_; ++i)
    out[i].assign(flat_.begin() + static_cast<size_t>(i) * size_,
                  flat_.begin() + static_cast<size_t>(i + 1) * size_);
  return out;
}

FiniteMonoid FiniteMonoid::validate_and_build(const std::vector<std::vector<int>>& table,
                                              int identity, int cap,
                                              const std::vector<int>& generators) {
  // Monoid generators generate as a monoid: the identity comes for free.
  std::vector<int> gens = generators;
  if (!gens.empty()) gens.push_back(identity);
  FiniteSemigroup base = FiniteSemigroup::validate_and_build(table, identity, cap, gens);
  FiniteMonoid m;
  static_cast<FiniteSemigroup&>(m) = std::move(base);
  m.omega_ = idempotent_power(m);
  return m;
}

FiniteMonoid FiniteMonoid::unchecked(std::vector<int> flat, int size, int identity) {
  FiniteMonoid m;
  static_cast<FiniteSemigroup&>(m) = FiniteSemigroup::unchecked(std::move(flat), size, identity);
  m.omega_ = idempotent_power(m);
  return m;
}

FiniteMonoid FiniteMonoid::trivial() { return unchecked({0}, 1, 0); }

long long idempotent_power(const FiniteSemigroup& s) {
  long long period_lcm = 1;
  long long max_index = 1;
  for (int x = 0; x < s.size(); ++x) {
    const auto [index, period] = cycle_of(s, x);
    period_lcm = lcm_guarded(period_lcm, period);
    max_index = std::max(max_index, index);
  }
  return (max_index + period_lcm - 1) / period_lcm * period_lcm;
}

Variety variety_from_name(const std::string& name) {
  if (name == "A") return Variety::kA;
  if (name == "DA") return Variety::kDA;
  if (name == "J") return Variety::kJ;
  throw Error("unknown variety '" + name + "' (expected A, DA or J)");
}

std::string variety_name(Variety v) {
  switch (v) {
    case Variety::kA: return "A";
    case Variety::kDA: return "DA";
    case Variety::kJ: return "J";
  }
  throw Error("bad variety");
}

VarietyCheck check_variety(const FiniteMonoid& m, Variety v) {
  const long long w = m.omega();
  std::vector<int> pow_w(m.size());
  for (int x = 0; x < m.size(); ++x) pow_w[x] = m.power(x, w);

  VarietyCheck out;
  if (v == Variety::kA) {
    for (int x = 0; x < m.size(); ++x)
      if (m.mul(pow_w[x], x) != pow_w[x])
        return {false, "x^w = x^(w+1)", {x}};
    return out;
  }
  for (int x = 0; x < m.size(); ++x) {
    for (int y = 0; y < m.size(); ++y) {
      const int e = pow_w[m.mul(x, y)];
      if (v == Variety::kDA) {
        if (m.mul(m.mul(e, x), e) != e)
          return {false, "(xy)^w x (xy)^w = (xy)^w", {x, y}};
      } else {
        if (m.mul(e, x) != e) return {false, "(xy)^w x = (xy)^w", {x, y}};
        if (m.mul(y, e) != e) return {false, "y (xy)^w = (xy)^w", {x, y}};
      }
    }
  }
  return out;
}

LocalJCheck is_locally_J(const FiniteSemigroup& s) {
  for (int e : s.idempotents()) {
    std::vector<int> local;
    std::vector<int> local_index(s.size(), -1);
    for (int x = 0; x < s.size(); ++x) {
      const int y = s.mul(e, s.mul(x, e));
      if (local_index[y] < 0) {
        local_index[y] = static_cast<int>(local.size());
        local.push_back(y);
      }
    }
    const int lm = static_cast<int>(local.size());
    std::vector<int> flat(static_cast<size_t>(lm) * lm);
    for (int i = 0; i < lm; ++i)
      for (int j = 0; j < lm; ++j)
        flat[static_cast<size_t>(i) * lm + j] = local_index[s.mul(local[i], local[j])];
    FiniteMonoid local_monoid = FiniteMonoid::unchecked(std::move(flat), lm, local_index[e]);
    VarietyCheck check = check_variety(local_monoid, Variety::kJ);
    if (!check.holds) {
      LocalJCheck out;
      out.holds = false;
      out.idempotent = e;
      out.equation = check.equation;
      for (int w : check.witness) out.witness.push_back(local[w]);
      return out;
    }
  }
  return {};
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b, int cap) {
  const long long m = static_cast<long long>(a.size()) * b.size();
  if (m > element_cap_or_default(cap))
    throw CapExceeded("direct product size " + std::to_string(m) + " exceeds element cap");
  const int bs = b.size();
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int x = a.mul(i / bs, j / bs);
      const int y = b.mul(i % bs, j % bs);
      flat[static_cast<size_t>(i) * m + j] = x * bs + y;
    }
  }
  return FiniteMonoid::unchecked(std::move(flat), static_cast<int>(m), a.one() * bs + b.one());
}

int GeneratedMorphism::eval(const Word& w) const {
  if (!same_alphabet(alphabet, w.alphabet())) throw Error("alphabet mismatch in morphism");
  return eval_letters(w.letters());
}

int GeneratedMorphism::eval_letters(const std::vector<int>& letters) const {
  int acc = target->one();
  for (int c : letters) acc = target->mul(acc, letter_image.at(c));
  return acc;
}

namespace {

/// BFS closure of `seed` transformations under right-composition with the
/// letter actions; returns elements in discovery order.
struct TransformationClosure {
  std::vector<std::vector<int>> elements;
  std::map<std::vector<int>, int> index;
  std::vector<int> letter_image;
};

TransformationClosure close_transformations(const Dfa& d,
                                             std::vector<std::vector<int>> seed, int cap) {
  const int n = d.states();
  const int s = d.alphabet->size();
  std::vector<std::vector<int>> action(s, std::vector<int>(n));
  for (int c = 0; c < s; ++c)
    for (int q = 0; q < n; ++q) action[c][q] = d.delta[q][c];

  TransformationClosure out;
  std::queue<int> queue;
  auto add = [&](const std::vector<int>& t) {
    auto [it, fresh] = out.index.emplace(t, static_cast<int>(out.elements.size()));
    if (fresh) {
      out.elements.push_back(t);
      if (static_cast<int>(out.elements.size()) > cap)
        throw CapExceeded("transition monoid exceeds element cap " + std::to_string(cap));
      queue.push(it->second);
    }
    return it->second;
  };
  for (auto& t : seed) add(t);
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop();
    for (int c = 0; c < s; ++c) {
      std::vector<int> u(n);
      for (int q = 0; q < n; ++q) u[q] = action[c][out.elements[i][q]];
      add(u);
    }
  }
  out.letter_image.resize(s);
  for (int c = 0; c < s; ++c) out.letter_image[c] = out.index.at(action[c]);
  return out;
}

std::vector<int> compose_table(const TransformationClosure& closure, int n) {
  const int m = static_cast<int>(closure.elements.size());
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<int> u(n);
      for (int q = 0; q < n; ++q) u[q] = closure.elements[j][closure.elements[i][q]];
      flat[static_cast<size_t>(i) * m + j] = closure.index.at(u);
    }
  }
  return flat;
}

}  // namespace

TransitionMonoid transition_monoid(const Dfa& d, int cap) {
  const Dfa dc = complete_dfa(d);
  const int n = dc.states();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  TransformationClosure closure =
      close_transformations(dc, {id}, element_cap_or_default(cap));
  std::vector<int> flat = compose_table(closure, n);
  const int m = static_cast<int>(closure.elements.size());
  auto monoid = std::make_shared<FiniteMonoid>(FiniteMonoid::unchecked(std::move(flat), m, 0));
  TransitionMonoid out;
  out.morphism = GeneratedMorphism{dc.alphabet, monoid, closure.letter_image};
  out.transformations = std::move(closure.elements);
  return out;
}

static SyntacticMonoid syntacticize(const Dfa& minimal, int cap) {
  TransitionMonoid tm = transition_monoid(minimal, cap);
  std::vector<bool> accept(tm.morphism.target->size());
  for (size_t i = 0; i < tm.transformations.size(); ++i)
    accept[i] = minimal.accept[tm.transformations[i][minimal.start]];
  return {std::move(tm.morphism), std::move(accept)};
}

SyntacticMonoid syntactic_monoid(const Dfa& d, int cap) {
  return syntacticize(minimize_dfa(d), cap);
}

SyntacticSemigroup syntactic_semigroup(const Dfa& d, int cap) {
  const Dfa dm = minimize_dfa(d);
  const int n = dm.states();
  const int s = dm.alphabet->size();
  std::vector<std::vector<int>> seed;
  for (int c = 0; c < s; ++c) {
    std::vector<int> t(n);
    for (int q = 0; q < n; ++q) t[q] = dm.delta[q][c];
    seed.push_back(std::move(t));
  }
  TransformationClosure closure =
      close_transformations(dm, std::move(seed), element_cap_or_default(cap));
  std::vector<int> flat = compose_table(closure, n);
  const int m = static_cast<int>(closure.elements.size());
  const std::optional<int> id = FiniteSemigroup::unchecked(flat, m, std::nullopt).detect_identity();
  SyntacticSemigroup out;
  out.alphabet = dm.alphabet;
  out.semigroup =
      std::make_shared<FiniteSemigroup>(FiniteSemigroup::unchecked(std::move(flat), m, id));
  out.letter_image = closure.letter_image;
  out.accept.resize(m);
  for (int i = 0; i < m; ++i) out.accept[i] = dm.accept[closure.elements[i][dm.start]];
  return out;
}

StableStructure stable_pair(const GeneratedMorphism& phi) {
  const FiniteMonoid& m = *phi.target;
  const int size = m.size();
  std::vector<bool> e1(size, false);
  for (int g : phi.letter_image) e1[g] = true;

  auto product = [&](const std::vector<bool>& a, const std::vector<bool>& b) {
    std::vector<bool> out(size, false);
    for (int x = 0; x < size; ++x)
      if (a[x])
        for (int y = 0; y < size; ++y)
          if (b[y]) out[m.mul(x, y)] = true;
    return out;
  };

  std::vector<bool> ek = e1;
  const long long limit = 2LL * size * size;
  int k = 1;
  while (product(ek, ek) != ek) {
    if (k >= limit) throw Error("stability index exceeds 2|M|^2; table is corrupt");
    ek = product(ek, e1);
    ++k;
  }

  StableStructure out;
  out.k = k;
  for (int x = 0; x < size; ++x)
    if (ek[x]) out.stable_elements.push_back(x);
  const int sm = static_cast<int>(out.stable_elements.size());
  std::vector<int> local_index(size, -1);
  for (int i = 0; i < sm; ++i) local_index[out.stable_elements[i]] = i;
  std::vector<int> flat(static_cast<size_t>(sm) * sm);
  for (int i = 0; i < sm; ++i)
    for (int j = 0; j < sm; ++j)
      flat[static_cast<size_t>(i) * sm + j] =
          local_index[m.mul(out.stable_elements[i], out.stable_elements[j])];
  FiniteSemigroup sub = FiniteSemigroup::unchecked(flat, sm, std::nullopt);
  const std::optional<int> id = sub.detect_identity();
  out.semigroup = FiniteSemigroup::unchecked(flat, sm, id);
  if (id) {
    out.monoid = FiniteMonoid::unchecked(std::move(flat), sm, *id);
    out.adjoined_identity = false;
  } else {
    const int mm = sm + 1;
    std::vector<int> ext(static_cast<size_t>(mm) * mm);
    for (int i = 0; i < sm; ++i)
      for (int j = 0; j < sm; ++j)
        ext[static_cast<size_t>(i) * mm + j] = flat[static_cast<size_t>(i) * sm + j];
    for (int i = 0; i < mm; ++i) {
      ext[static_cast<size_t>(i) * mm + sm] = i;
      ext[static_cast<size_t>(sm) * mm + i] = i;
    }
    out.monoid = FiniteMonoid::unchecked(std::move(ext), mm, sm);
    out.adjoined_identity = true;
  }
  return out;
}

QuotientMonoid quotient_by_sim_k(const AlphabetRef& alphabet, int k, int cap) {
  if (k < 0) throw Error("k must be >= 0");
  const int max_elements = element_cap_or_default(cap);
  const int s = alphabet->size();

  std::vector<SubwordSet> sets{SubwordSet::of_empty(alphabet, k)};
  std::map<std::string, int> index{{sets[0].key(), 0}};
  std::vector<std::vector<int>> reps{{}};
  std::vector<std::pair<int, int>> parent{{-1, -1}};
  std::vector<int> step_to;

  std::queue<int> queue;
  queue.push(0);
  step_to.resize(s, -1);
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop();
    for (int c = 0; c < s; ++c) {
      SubwordSet next = sets[i].append_letter(c);
      const std::string key = next.key();
      auto it = index.find(key);
      int j;
      if (it == index.end()) {
        j = static_cast<int>(sets.size());
        if (j >= max_elements)
          throw CapExceeded("~k quotient exceeds element cap " + std::to_string(max_elements));
        index.emplace(key, j);
        sets.push_back(std::move(next));
        auto rep = reps[i];
        rep.push_back(c);
        reps.push_back(std::move(rep));
        parent.emplace_back(i, c);
        step_to.resize(static_cast<size_t>(j + 1) * s, -1);
        queue.push(j);
      } else {
        j = it->second;
      }
      step_to[static_cast<size_t>(i) * s + c] = j;
    }
  }

  const int m = static_cast<int>(sets.size());
  // Right multiplication by the class of rep(j) = rep(j') c is the letter
  // action c applied after right multiplication by the class of rep(j'),
  // so the table follows the BFS tree in O(m^2). parent[j].first < j.
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    flat[static_cast<size_t>(i) * m + 0] = i;
    for (int j = 1; j < m; ++j) {
      const auto [jp, c] = parent[j];
      const int left = flat[static_cast<size_t>(i) * m + jp];
      flat[static_cast<size_t>(i) * m + j] = step_to[static_cast<size_t>(left) * s + c];
    }
  }

  std::vector<int> letter_image(s);
  for (int c = 0; c < s; ++c) letter_image[c] = step_to[static_cast<size_t>(0) * s + c];
  std::vector<int> gens = letter_image;
  gens.push_back(0);
  check_associative_generated(flat, m, gens);
  check_identity_law(flat, m, 0);

  auto monoid = std::make_shared<FiniteMonoid>(FiniteMonoid::unchecked(std::move(flat), m, 0));
  QuotientMonoid out;
  out.morphism = GeneratedMorphism{alphabet, monoid, letter_image};
  out.representatives.reserve(m);
  for (int i = 0; i < m; ++i) out.representatives.emplace_back(alphabet, reps[i]);
  return out;
}

}  // namespace mpj
