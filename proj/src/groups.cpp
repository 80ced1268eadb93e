#include "tweq/groups.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "tweq/error.hpp"

namespace tweq {

namespace {

std::atomic<std::uint64_t> sampling_seed{0x5eed};

std::string triple_text(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

void FiniteGroup::set_sampling_seed(std::uint64_t seed) { sampling_seed = seed; }

FiniteGroup::FiniteGroup()
    : order_(1), identity_(0), mul_{0}, inverse_{0} {}

FiniteGroup::FiniteGroup(int order, std::vector<int> mul, int identity,
                         std::vector<std::string> labels)
    : order_(order),
      identity_(identity),
      mul_(std::move(mul)),
      labels_(std::move(labels)) {
  if (order_ < 1) throw invalid_parameter("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (mul_.size() != n * n) {
    throw invalid_parameter("multiplication table has " +
                            std::to_string(mul_.size()) + " entries, expected " +
                            std::to_string(n * n));
  }
  if (identity_ < 0 || identity_ >= order_) {
    throw invalid_parameter("identity index out of range");
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw invalid_parameter("label count does not match order");
  }
  // Latin square.
  std::vector<char> seen(n);
  for (int a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order_; ++b) {
      const int v = mul_[a * order_ + b];
      if (v < 0 || v >= order_) {
        throw invalid_parameter("table entry out of range at row " +
                                std::to_string(a));
      }
      if (seen[v]++) {
        throw invalid_parameter("row " + std::to_string(a) +
                                " is not a permutation");
      }
    }
  }
  for (int b = 0; b < order_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < order_; ++a) {
      if (seen[mul_[a * order_ + b]]++) {
        throw invalid_parameter("column " + std::to_string(b) +
                                " is not a permutation");
      }
    }
  }
  for (int a = 0; a < order_; ++a) {
    if (mul_[identity_ * order_ + a] != a || mul_[a * order_ + identity_] != a) {
      throw invalid_parameter("element " + std::to_string(identity_) +
                              " is not a two-sided identity");
    }
  }
  auto check = [&](int a, int b, int c) {
    const int lhs = mul_[mul_[a * order_ + b] * order_ + c];
    const int rhs = mul_[a * order_ + mul_[b * order_ + c]];
    if (lhs != rhs) {
      throw invalid_parameter("associativity fails at " + triple_text(a, b, c));
    }
  };
  if (order_ <= kExhaustiveAssociativityLimit) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(sampling_seed.load() ^ static_cast<unsigned>(order_));
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    const long long samples = 10LL * order_ * order_;
    for (long long s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
  }
  // Latin square plus identity gives right inverses; associativity makes
  // them two-sided, but check anyway for the sampled regime.
  inverse_.assign(n, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul_[a * order_ + b] == identity_) {
        if (mul_[b * order_ + a] != identity_) {
          throw invalid_parameter("element " + std::to_string(a) +
                                  " has no two-sided inverse");
        }
        inverse_[a] = b;
        break;
      }
    }
  }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  int result = identity_;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string FiniteGroup::label(int a) const {
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<int> FiniteGroup::generated_subgroup(
    const std::vector<int>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<int> frontier{identity_};
  in[identity_] = 1;
  std::vector<int> elements{identity_};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        const int y = mul(x, g);
        if (!in[y]) {
          in[y] = 1;
          elements.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<int> FiniteGroup::generating_set() const {
  std::vector<int> gens;
  std::vector<int> current{identity_};
  // Prefer elements of large order so cyclic groups get one generator.
  std::vector<int> candidates(order_);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return element_order(a) > element_order(b);
  });
  for (int x : candidates) {
    if (static_cast<int>(current.size()) == order_) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generated_subgroup(gens);
  }
  return gens;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elements) const {
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(order_, -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int p = pos[mul(elements[i], elements[j])];
      if (p < 0) throw invalid_parameter("element list is not closed");
      table[i * m + j] = p;
    }
  }
  if (pos[identity_] < 0) throw invalid_parameter("subgroup lacks identity");
  std::vector<std::string> sub_labels;
  if (!labels_.empty())
    for (int e : elements) sub_labels.push_back(labels_[e]);
  return FiniteGroup(m, std::move(table), pos[identity_], std::move(sub_labels));
}

FiniteGroup FiniteGroup::quotient(const std::vector<int>& normal,
                                  std::vector<int>* coset_of) const {
  std::vector<int> coset(order_, -1);
  std::vector<int> reps;
  for (int a = 0; a < order_; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int n : normal) coset[mul(a, n)] = id;
  }
  const int m = static_cast<int>(reps.size());
  if (static_cast<long long>(m) * static_cast<long long>(normal.size()) != order_) {
    throw invalid_parameter("quotient by a non-subgroup");
  }
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[i * m + j] = coset[mul(reps[i], reps[j])];
    }
  }
  // Well-definedness (normality) is checked by comparing against all coset
  // members of the first factor.
  for (int a = 0; a < order_; ++a)
    for (int j = 0; j < m; ++j)
      if (coset[mul(a, reps[j])] != table[coset[a] * m + j])
        throw invalid_parameter("quotient by a non-normal subgroup");
  if (coset_of) *coset_of = coset;
  return FiniteGroup(m, std::move(table), coset[identity_]);
}

// ---------------------------------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  long long order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw invalid_parameter("invariant factors must be >= 2");
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw invalid_parameter("invariant factors must form a divisor chain");
    }
    order *= factors_[i];
    if (order > (1 << 24)) throw invalid_parameter("abelian group too large");
  }
  order_ = static_cast<int>(order);
}

std::vector<int> FiniteAbelianGroup::coords(int index) const {
  std::vector<int> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = index % factors_[i];
    index /= factors_[i];
  }
  return out;
}

int FiniteAbelianGroup::index(const std::vector<int>& coords) const {
  if (coords.size() != factors_.size()) {
    throw invalid_parameter("coordinate tuple has wrong length");
  }
  int idx = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const int d = factors_[i];
    idx = idx * d + ((coords[i] % d) + d) % d;
  }
  return idx;
}

int FiniteAbelianGroup::add(int a, int b) const {
  int idx = 0;
  int radix = 1;
  for (int d : factors_) {
    const int s = (a % d + b % d) % d;
    idx += s * radix;
    radix *= d;
    a /= d;
    b /= d;
  }
  return idx;
}

int FiniteAbelianGroup::neg(int a) const {
  int idx = 0;
  int radix = 1;
  for (int d : factors_) {
    idx += ((d - a % d) % d) * radix;
    radix *= d;
    a /= d;
  }
  return idx;
}

int FiniteAbelianGroup::scale(int a, long long k) const {
  int idx = 0;
  int radix = 1;
  for (int d : factors_) {
    const long long s = ((a % d) * (k % d)) % d;
    idx += static_cast<int>((s + d) % d) * radix;
    radix *= d;
    a /= d;
  }
  return idx;
}

FiniteGroup FiniteAbelianGroup::as_group() const {
  std::vector<int> table(static_cast<std::size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) table[a * order_ + b] = add(a, b);
  return FiniteGroup(order_, std::move(table), 0);
}

// ---------------------------------------------------------------------------

void GroupHom::validate() const {
  if (static_cast<int>(map.size()) != source.order()) {
    throw invalid_parameter("homomorphism table has wrong length");
  }
  for (int x : map) {
    if (x < 0 || x >= target.order()) {
      throw invalid_parameter("homomorphism image out of range");
    }
  }
  for (int a = 0; a < source.order(); ++a) {
    for (int b = 0; b < source.order(); ++b) {
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) {
        throw invalid_parameter("map is not a homomorphism at (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ")");
      }
    }
  }
}

GroupHom GroupHom::compose_after(const GroupHom& first) const {
  if (!(first.target == source)) {
    throw invalid_parameter("homomorphisms are not composable");
  }
  GroupHom out{first.source, target, std::vector<int>(first.map.size())};
  for (std::size_t i = 0; i < first.map.size(); ++i) out.map[i] = map[first.map[i]];
  return out;
}

GroupHom trivial_hom(const FiniteGroup& source, const FiniteGroup& target) {
  return GroupHom{source, target,
                  std::vector<int>(source.order(), target.identity())};
}

GroupAction AbelianAction::as_group_action() const {
  return GroupAction{actor, module.as_group(), act};
}

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& module) {
  GroupAction a{actor, module, {}};
  a.act.resize(static_cast<std::size_t>(actor.order()) * module.order());
  for (int g = 0; g < actor.order(); ++g)
    for (int m = 0; m < module.order(); ++m) a.act[g * module.order() + m] = m;
  return a;
}

AbelianAction trivial_action(const FiniteGroup& actor,
                             const FiniteAbelianGroup& module) {
  AbelianAction a{actor, module, {}};
  a.act.resize(static_cast<std::size_t>(actor.order()) * module.order());
  for (int g = 0; g < actor.order(); ++g)
    for (int m = 0; m < module.order(); ++m) a.act[g * module.order() + m] = m;
  return a;
}

AbelianAction power_action(const FiniteGroup& actor,
                           const FiniteAbelianGroup& module,
                           const std::vector<int>& automorphism,
                           const std::vector<int>& exponent_of) {
  AbelianAction a{actor, module, {}};
  const int n = module.order();
  a.act.resize(static_cast<std::size_t>(actor.order()) * n);
  for (int g = 0; g < actor.order(); ++g) {
    for (int m = 0; m < n; ++m) {
      int x = m;
      for (int k = 0; k < exponent_of[g]; ++k) x = automorphism[x];
      a.act[g * n + m] = x;
    }
  }
  return a;
}

GroupAction restrict_action(const GroupAction& action,
                            const std::vector<int>& subgroup_elements) {
  GroupAction out{action.actor.subgroup(subgroup_elements), action.module, {}};
  const int n = action.module.order();
  for (int g : subgroup_elements)
    for (int m = 0; m < n; ++m) out.act.push_back(action(g, m));
  return out;
}

AbelianAction restrict_action(const AbelianAction& action,
                              const std::vector<int>& subgroup_elements) {
  AbelianAction out{action.actor.subgroup(subgroup_elements), action.module,
                    {}};
  const int n = action.module.order();
  for (int g : subgroup_elements)
    for (int m = 0; m < n; ++m) out.act.push_back(action(g, m));
  return out;
}

ValidationReport validate_action(const GroupAction& action) {
  ValidationReport r;
  const int na = action.actor.order();
  const int nm = action.module.order();
  auto fail = [&](std::string msg, std::vector<int> w) {
    r.ok = false;
    r.message = std::move(msg);
    r.witness = std::move(w);
    return r;
  };
  if (action.act.size() != static_cast<std::size_t>(na) * nm) {
    return fail("action table has wrong shape", {});
  }
  for (int x : action.act)
    if (x < 0 || x >= nm) return fail("action table entry out of range", {});
  std::vector<char> seen(nm);
  for (int g = 0; g < na; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int m = 0; m < nm; ++m) {
      if (seen[action(g, m)]++) {
        return fail("actor element " + std::to_string(g) +
                        " does not act bijectively",
                    {g});
      }
    }
    for (int m1 = 0; m1 < nm; ++m1) {
      for (int m2 = 0; m2 < nm; ++m2) {
        if (action(g, action.module.mul(m1, m2)) !=
            action.module.mul(action(g, m1), action(g, m2))) {
          return fail("actor element " + std::to_string(g) +
                          " is not a homomorphism of the module at (" +
                          std::to_string(m1) + ", " + std::to_string(m2) + ")",
                      {g, m1, m2});
        }
      }
    }
  }
  const int e = action.actor.identity();
  for (int m = 0; m < nm; ++m)
    if (action(e, m) != m)
      return fail("identity does not act trivially on " + std::to_string(m),
                  {e, m});
  for (int g1 = 0; g1 < na; ++g1) {
    for (int g2 = 0; g2 < na; ++g2) {
      const int g12 = action.actor.mul(g1, g2);
      for (int m = 0; m < nm; ++m) {
        if (action(g12, m) != action(g1, action(g2, m))) {
          return fail("composition law fails at (" + std::to_string(g1) + ", " +
                          std::to_string(g2) + ", " + std::to_string(m) + ")",
                      {g1, g2, m});
        }
      }
    }
  }
  return r;
}

ValidationReport validate_action(const AbelianAction& action) {
  return validate_action(action.as_group_action());
}

// ---------------------------------------------------------------------------

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw invalid_parameter("cyclic group order must be >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup build_symmetric(int n) {
  if (n < 1 || n > 6) {
    throw invalid_parameter("symmetric group degree must be in 1..6");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(perms[a][i]);
    labels.push_back(s + "]");
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      table[a * order + b] = index[comp];
    }
  }
  return FiniteGroup(order, std::move(table), 0, std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x * n + y] =
          a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  return FiniteGroup(n, std::move(table), a.identity() + na * b.identity());
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      const int y = group.conjugate(g, x);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  // Order statistics must agree.
  std::vector<int> oa(n), ob(n);
  for (int x = 0; x < n; ++x) {
    oa[x] = a.element_order(x);
    ob[x] = b.element_order(x);
  }
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const std::vector<int> gens = a.generating_set();
  // Each element of a as a word: x = parent[x] * gens[via[x]].
  std::vector<int> parent(n, -1), via(n, -1), bfs{a.identity()};
  std::vector<char> seen(n, 0);
  seen[a.identity()] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int y = a.mul(bfs[i], gens[g]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = bfs[i];
        via[y] = static_cast<int>(g);
        bfs.push_back(y);
      }
    }
  }
  std::vector<int> images(gens.size());
  std::function<std::optional<std::vector<int>>(std::size_t)> search =
      [&](std::size_t k) -> std::optional<std::vector<int>> {
    if (k == gens.size()) {
      std::vector<int> phi(n, -1);
      phi[a.identity()] = b.identity();
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        const int x = bfs[i];
        phi[x] = b.mul(phi[parent[x]], images[via[x]]);
      }
      std::vector<char> hit(n, 0);
      for (int x = 0; x < n; ++x) {
        if (hit[phi[x]]++) return std::nullopt;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return std::nullopt;
      return phi;
    }
    for (int y = 0; y < n; ++y) {
      if (ob[y] != oa[gens[k]]) continue;
      images[k] = y;
      if (auto r = search(k + 1)) return r;
    }
    return std::nullopt;
  };
  return search(0);
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::pair<FiniteAbelianGroup, std::vector<int>> recognize_abelian(
    const FiniteGroup& group) {
  if (!group.is_abelian()) throw invalid_parameter("group is not abelian");
  const int n = group.order();
  // p-primary cyclic factor exponents from counts of p^j-torsion.
  std::vector<std::vector<int>> prime_powers;  // descending per prime
  for (int p : prime_factors(n)) {
    std::vector<int> log_counts{0};
    for (int pj = p;; pj *= p) {
      int count = 0;
      for (int x = 0; x < n; ++x)
        if (group.pow(x, pj) == group.identity()) ++count;
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == log_counts.back()) break;
      log_counts.push_back(lg);
    }
    // factors with exponent >= j: log_counts[j] - log_counts[j-1]
    std::vector<int> powers;
    const int top = static_cast<int>(log_counts.size()) - 1;
    for (int j = top; j >= 1; --j) {
      const int at_least_j = log_counts[j] - log_counts[j - 1];
      const int at_least_next = j < top ? log_counts[j + 1] - log_counts[j] : 0;
      int pj = 1;
      for (int t = 0; t < j; ++t) pj *= p;
      for (int t = 0; t < at_least_j - at_least_next; ++t) powers.push_back(pj);
    }
    prime_powers.push_back(std::move(powers));
  }
  std::size_t k = 0;
  for (auto& v : prime_powers) k = std::max(k, v.size());
  std::vector<int> factors(k, 1);  // descending order first
  for (auto& v : prime_powers)
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  std::reverse(factors.begin(), factors.end());
  FiniteAbelianGroup abelian(factors);

  // Basis: q_i of order d_i, chosen from the largest factor down with
  // backtracking so that the generated subgroup grows by exactly d_i.
  std::vector<int> basis(k);
  std::function<bool(int, std::vector<int>)> choose =
      [&](int i, std::vector<int> generated) -> bool {
    if (i < 0) return true;
    for (int x = 0; x < n; ++x) {
      if (group.element_order(x) != factors[i]) continue;
      std::vector<int> gens(basis.begin() + i + 1, basis.end());
      gens.push_back(x);
      auto sub = group.generated_subgroup(gens);
      if (sub.size() != generated.size() * static_cast<std::size_t>(factors[i]))
        continue;
      basis[i] = x;
      if (choose(i - 1, sub)) return true;
    }
    return false;
  };
  if (!choose(static_cast<int>(k) - 1, {group.identity()})) {
    throw Error(ErrorKind::kValidation, "abelian basis search failed");
  }
  std::vector<int> iso(n);
  for (int idx = 0; idx < n; ++idx) {
    const auto c = abelian.coords(idx);
    int x = group.identity();
    for (std::size_t i = 0; i < k; ++i) x = group.mul(x, group.pow(basis[i], c[i]));
    iso[idx] = x;
  }
  return {abelian, iso};
}

}  // namespace tweq
