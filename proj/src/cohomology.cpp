#include "tweq/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "tweq/error.hpp"
#include "tweq/local_linalg.hpp"

namespace tweq {

struct CohomologyGroup::Impl {
  std::function<std::vector<int>(const std::vector<int>&)> classify;
};

namespace {

using i64 = std::int64_t;

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int int_pow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

i64 mod_inverse(i64 a, i64 m) {
  i64 old_r = ((a % m) + m) % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i64 quo = old_r / r;
    std::swap(old_r, r);
    r -= quo * old_r;
    std::swap(old_s, s);
    s -= quo * old_s;
  }
  return ((old_s % m) + m) % m;
}

// The p-primary part of a module A = (+) Z/d_i, written with one slot per
// invariant factor divisible by p: slot s has size p^{a_s}.
class PrimePart {
 public:
  PrimePart(const AbelianAction& action, int p) : module_(action.module), p_(p) {
    const auto& d = action.module.invariant_factors();
    int a = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      int e = 0;
      for (int x = d[i]; x % p == 0; x /= p) ++e;
      if (e == 0) continue;
      slot_factor_.push_back(static_cast<int>(i));
      slot_exp_.push_back(e);
      a = std::max(a, e);
      const int pe = int_pow(p, e);
      const int cofactor = d[i] / pe;
      // idempotent lift: y = v * cofactor * cofactor^{-1 mod p^e} (mod d_i)
      lift_.push_back(cofactor * static_cast<int>(mod_inverse(cofactor, pe)));
    }
    ring_ = std::make_unique<LocalRing>(p, std::max(a, 1));
    a_ = a;
    const int k = rank();
    const int n = action.actor.order();
    matrices_.assign(static_cast<std::size_t>(n), std::vector<i64>(k * k, 0));
    for (int g = 0; g < n; ++g) {
      for (int s = 0; s < k; ++s) {
        std::vector<i64> unit(k, 0);
        unit[s] = 1;
        const auto image = project(action(g, embed(unit)));
        for (int j = 0; j < k; ++j) matrices_[g][j * k + s] = image[j];
      }
    }
  }

  int rank() const { return static_cast<int>(slot_exp_.size()); }
  int slot_exponent(int s) const { return slot_exp_[s]; }
  const LocalRing& ring() const { return *ring_; }
  int top_exponent() const { return a_; }
  // Row scale making "x_j == 0 mod p^{a_j}" read "== 0 mod p^a".
  i64 row_scale(int j) const { return ring_->power_of_p(a_ - slot_exp_[j]); }
  i64 matrix(int g, int j, int s) const { return matrices_[g][j * rank() + s]; }

  std::vector<i64> project(int element) const {
    const auto c = module_.coords(element);
    std::vector<i64> out(rank());
    for (int s = 0; s < rank(); ++s)
      out[s] = c[slot_factor_[s]] % int_pow(p_, slot_exp_[s]);
    return out;
  }

  int embed(const std::vector<i64>& v) const {
    const auto& d = module_.invariant_factors();
    std::vector<int> c(d.size(), 0);
    for (int s = 0; s < rank(); ++s) {
      const int i = slot_factor_[s];
      const i64 x = ((v[s] % d[i]) + d[i]) % d[i];
      c[i] = static_cast<int>((x * lift_[s]) % d[i]);
    }
    return module_.index(c);
  }

 private:
  FiniteAbelianGroup module_;
  int p_;
  int a_ = 0;
  std::vector<int> slot_factor_;
  std::vector<int> slot_exp_;
  std::vector<int> lift_;
  std::unique_ptr<LocalRing> ring_;
  std::vector<std::vector<i64>> matrices_;
};

// Quotient U/W of submodules of R^m with W inside U, U given by generator
// columns and W by generator vectors. Produces cyclic factors p^{h_l} with
// coordinate maps and generator lifts.
struct ModuleQuotient {
  std::vector<int> exponents;               // h_l >= 1, ascending
  std::vector<std::vector<i64>> generators;  // lifts in R^m, one per factor
  // classify(x) for x in U -> coordinate per factor, mod p^{h_l}
  std::function<std::vector<i64>(const std::vector<i64>&)> coords;
};

ModuleQuotient quotient(const LocalRing& ring, const LocalMatrix& u_gens,
                        const std::vector<std::vector<i64>>& w_gens) {
  const int m = u_gens.rows();
  const i64 q = ring.modulus();
  const int a = ring.exponent();
  auto su = std::make_shared<SmithForm>(smith_normal_form(
      ring, u_gens, {.left = true, .left_inverse = true}));
  const int r = su->rank();
  auto u_val = su->valuations;

  // x in U -> coordinates lambda_l in R / p^{a - u_l}
  auto lambda_of = [su, r, u_val, m, q, &ring](const std::vector<i64>& x) {
    std::vector<i64> lam(r, 0);
    for (int l = 0; l < m; ++l) {
      const i64* prow = su->left.row(l);
      i64 acc = 0;
      for (int j = 0; j < m; ++j)
        if (x[j]) acc = (acc + prow[j] * x[j]) % q;
      if (l < r) {
        const i64 pv = ring.power_of_p(u_val[l]);
        if (acc % pv != 0) throw invalid_parameter("cochain is not a cocycle");
        lam[l] = acc / pv;
      } else if (acc != 0) {
        throw invalid_parameter("cochain is not a cocycle");
      }
    }
    return lam;
  };

  LocalMatrix rel(static_cast<int>(w_gens.size()) + r, r);
  for (std::size_t i = 0; i < w_gens.size(); ++i) {
    const auto lam = lambda_of(w_gens[i]);
    for (int l = 0; l < r; ++l) rel.at(static_cast<int>(i), l) = ring.reduce(lam[l]);
  }
  for (int l = 0; l < r; ++l)
    rel.at(static_cast<int>(w_gens.size()) + l, l) = ring.power_of_p(a - u_val[l]);

  auto sr = std::make_shared<SmithForm>(smith_normal_form(
      ring, rel, {.right = true, .right_inverse = true}));

  ModuleQuotient out;
  std::vector<int> kept;  // indices l of nontrivial factors
  // Columns past the rank are free factors of order p^a.
  for (int l = 0; l < r; ++l) {
    const int h = l < sr->rank() ? sr->valuations[l] : a;
    if (h >= 1) {
      kept.push_back(l);
      out.exponents.push_back(h);
    }
  }
  for (int l : kept) {
    // lambda = row l of Y^{-1}; x = sum_j lambda_j p^{u_j} P^{-1} e_j
    std::vector<i64> x(m, 0);
    for (int j = 0; j < r; ++j) {
      const i64 coef = (sr->right_inverse.at(l, j) * ring.power_of_p(u_val[j])) % q;
      if (coef == 0) continue;
      for (int row = 0; row < m; ++row)
        x[row] = (x[row] + coef * su->left_inverse.at(row, j)) % q;
    }
    out.generators.push_back(std::move(x));
  }
  auto exps = out.exponents;
  out.coords = [lambda_of, sr, kept, exps, r, q, &ring](const std::vector<i64>& x) {
    const auto lam = lambda_of(x);
    std::vector<i64> c(kept.size());
    for (std::size_t t = 0; t < kept.size(); ++t) {
      i64 acc = 0;
      for (int j = 0; j < r; ++j) acc = (acc + lam[j] * sr->right.at(j, kept[t])) % q;
      c[t] = acc % ring.power_of_p(exps[t]);
    }
    return c;
  };
  return out;
}

// Cohomology of one prime part in degree 1 or 2 using normalized cochains.
struct PrimeCohomology {
  int p;
  std::vector<int> exponents;
  std::vector<std::vector<i64>> generators;  // in cochain coordinates
  std::function<std::vector<i64>(const std::vector<i64>&)> coords;
};

// Index of the normalized cochain variable for (tuple position, slot).
struct CochainLayout {
  int n;       // actor order
  int e;       // identity
  int degree;  // 1 or 2
  int k;       // slots
  std::vector<int> pos;  // actor element -> index among non-identity, or -1

  CochainLayout(const FiniteGroup& g, int degree_, int k_)
      : n(g.order()), e(g.identity()), degree(degree_), k(k_), pos(n, -1) {
    int c = 0;
    for (int x = 0; x < n; ++x)
      if (x != e) pos[x] = c++;
  }
  int slots() const { return degree == 1 ? (n - 1) : (n - 1) * (n - 1); }
  int size() const { return slots() * k; }
  // -1 when the cochain is forced to vanish there (an identity argument).
  int var1(int g, int s) const { return pos[g] < 0 ? -1 : pos[g] * k + s; }
  int var2(int g1, int g2, int s) const {
    if (pos[g1] < 0 || pos[g2] < 0) return -1;
    return (pos[g1] * (n - 1) + pos[g2]) * k + s;
  }
};

PrimeCohomology prime_cohomology(const AbelianAction& action,
                                 const PrimePart& part, int degree) {
  const FiniteGroup& G = action.actor;
  const LocalRing& ring = part.ring();
  const i64 q = ring.modulus();
  const int k = part.rank();
  const CochainLayout lay(G, degree, k);
  const int m = lay.size();
  const auto gens = G.generating_set();

  // Cocycle equations, each scaled so the condition reads "== 0 mod q".
  std::vector<std::vector<std::pair<int, i64>>> rows;
  auto add_term = [&](std::vector<std::pair<int, i64>>& row, int var, i64 c) {
    if (var >= 0 && c % q != 0) row.emplace_back(var, c);
  };
  if (degree == 2) {
    // c(g1,s) + c(g1 s, g3) - g1.c(s,g3) - c(g1, s g3) = 0
    for (int g1 = 0; g1 < G.order(); ++g1) {
      if (g1 == G.identity()) continue;
      for (int s : gens) {
        for (int g3 = 0; g3 < G.order(); ++g3) {
          if (g3 == G.identity()) continue;
          for (int j = 0; j < k; ++j) {
            std::vector<std::pair<int, i64>> row;
            add_term(row, lay.var2(g1, s, j), 1);
            add_term(row, lay.var2(G.mul(g1, s), g3, j), 1);
            for (int t = 0; t < k; ++t)
              add_term(row, lay.var2(s, g3, t), -part.matrix(g1, j, t));
            add_term(row, lay.var2(g1, G.mul(s, g3), j), -1);
            for (auto& [v, c] : row) c = ring.reduce(c * part.row_scale(j));
            rows.push_back(std::move(row));
          }
        }
      }
    }
  } else {
    // f(g s) - f(g) - g.f(s) = 0
    for (int g = 0; g < G.order(); ++g) {
      for (int s : gens) {
        for (int j = 0; j < k; ++j) {
          std::vector<std::pair<int, i64>> row;
          add_term(row, lay.var1(G.mul(g, s), j), 1);
          add_term(row, lay.var1(g, j), -1);
          for (int t = 0; t < k; ++t)
            add_term(row, lay.var1(s, t), -part.matrix(g, j, t));
          for (auto& [v, c] : row) c = ring.reduce(c * part.row_scale(j));
          rows.push_back(std::move(row));
        }
      }
    }
  }
  LocalMatrix eq(static_cast<int>(rows.size()), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [v, c] : rows[r])
      eq.at(static_cast<int>(r), v) = ring.reduce(eq.at(static_cast<int>(r), v) + c);
  LocalMatrix cocycles = kernel_generators(ring, eq);

  // Coboundaries plus the slot-order relations.
  std::vector<std::vector<i64>> w;
  if (degree == 2) {
    for (int h = 0; h < G.order(); ++h) {
      if (h == G.identity()) continue;
      for (int s = 0; s < k; ++s) {
        // f = e_s at h; df(g1,g2) = f(g1) + g1.f(g2) - f(g1 g2)
        std::vector<i64> x(m, 0);
        for (int g1 = 0; g1 < G.order(); ++g1) {
          for (int g2 = 0; g2 < G.order(); ++g2) {
            for (int j = 0; j < k; ++j) {
              const int v = lay.var2(g1, g2, j);
              if (v < 0) continue;
              i64 val = 0;
              if (g1 == h && j == s) val += 1;
              if (g2 == h) val += part.matrix(g1, j, s);
              if (G.mul(g1, g2) == h && j == s) val -= 1;
              x[v] = ring.reduce(val);
            }
          }
        }
        w.push_back(std::move(x));
      }
    }
  } else {
    for (int s = 0; s < k; ++s) {
      std::vector<i64> x(m, 0);
      for (int g = 0; g < G.order(); ++g) {
        for (int j = 0; j < k; ++j) {
          const int v = lay.var1(g, j);
          if (v < 0) continue;
          x[v] = ring.reduce(part.matrix(g, j, s) - (j == s ? 1 : 0));
        }
      }
      w.push_back(std::move(x));
    }
  }
  for (int v = 0; v < m; ++v) {
    const int s = v % k;
    const i64 rel = ring.power_of_p(part.slot_exponent(s));
    if (rel % q == 0) continue;
    std::vector<i64> x(m, 0);
    x[v] = rel;
    w.push_back(std::move(x));
  }

  ModuleQuotient mq = quotient(ring, cocycles, w);
  PrimeCohomology out;
  out.p = ring.prime();
  out.exponents = mq.exponents;
  out.generators = std::move(mq.generators);
  out.coords = std::move(mq.coords);
  return out;
}

void check_limits(const AbelianAction& action, const CohomologyLimits& limits) {
  if (action.actor.order() > limits.max_actor_order) {
    throw capacity_error("actor order " + std::to_string(action.actor.order()) +
                         " exceeds limit " +
                         std::to_string(limits.max_actor_order));
  }
  if (action.module.order() > limits.max_module_order) {
    throw capacity_error("module order " + std::to_string(action.module.order()) +
                         " exceeds limit " +
                         std::to_string(limits.max_module_order));
  }
  if (action.act.size() !=
      static_cast<std::size_t>(action.actor.order()) * action.module.order()) {
    throw invalid_parameter("action table has wrong shape");
  }
}

CohomologyGroup compute(const AbelianAction& action, int degree,
                        const CohomologyLimits& limits) {
  check_limits(action, limits);
  if (auto rep = validate_action(action); !rep) {
    throw invalid_parameter("action: " + rep.message);
  }
  const FiniteGroup& G = action.actor;
  const int n = G.order();
  const FiniteAbelianGroup& A = action.module;

  struct Part {
    std::shared_ptr<PrimePart> part;
    PrimeCohomology coh;
  };
  auto parts = std::make_shared<std::vector<Part>>();
  for (auto [p, e] : factorize(A.order())) {
    (void)e;
    auto part = std::make_shared<PrimePart>(action, p);
    parts->push_back({part, prime_cohomology(action, *part, degree)});
  }

  // Converting a p-part cochain vector into a table over A.
  auto table_of = [&](const PrimePart& part, const std::vector<i64>& x) {
    const int k = part.rank();
    const CochainLayout lay(G, degree, k);
    std::vector<int> table(degree == 1 ? n : n * n, A.zero());
    std::vector<i64> v(k);
    if (degree == 1) {
      for (int g = 0; g < n; ++g) {
        if (g == G.identity()) continue;
        for (int s = 0; s < k; ++s) v[s] = x[lay.var1(g, s)];
        table[g] = part.embed(v);
      }
    } else {
      for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2) {
          if (lay.var2(g1, g2, 0) < 0) continue;
          for (int s = 0; s < k; ++s) v[s] = x[lay.var2(g1, g2, s)];
          table[g1 * n + g2] = part.embed(v);
        }
    }
    return table;
  };

  // Merge p-primary cyclic factors into invariant factors: the largest
  // factor collects the largest power of every prime, and so on.
  std::size_t count = 0;
  for (auto& pt : *parts) count = std::max(count, pt.coh.exponents.size());
  // slot t (0 = largest) -> per-part factor index or -1
  std::vector<std::vector<int>> pick(count, std::vector<int>(parts->size(), -1));
  std::vector<int> factors(count, 1);
  for (std::size_t pi = 0; pi < parts->size(); ++pi) {
    const auto& ex = (*parts)[pi].coh.exponents;  // ascending
    for (std::size_t t = 0; t < ex.size(); ++t) {
      const std::size_t idx = ex.size() - 1 - t;
      pick[t][pi] = static_cast<int>(idx);
      factors[t] *= int_pow((*parts)[pi].coh.p, ex[idx]);
    }
  }
  std::reverse(factors.begin(), factors.end());
  std::reverse(pick.begin(), pick.end());

  std::vector<std::vector<int>> reps;
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<int> table(degree == 1 ? n : n * n, A.zero());
    for (std::size_t pi = 0; pi < parts->size(); ++pi) {
      if (pick[t][pi] < 0) continue;
      const auto& pt = (*parts)[pi];
      const auto piece = table_of(*pt.part, pt.coh.generators[pick[t][pi]]);
      for (std::size_t i = 0; i < table.size(); ++i) table[i] = A.add(table[i], piece[i]);
    }
    reps.push_back(std::move(table));
  }

  auto impl = std::make_shared<CohomologyGroup::Impl>();
  impl->classify = [parts, pick, factors, degree, action](const std::vector<int>& table) {
    const FiniteGroup& G = action.actor;
    const int n = G.order();
    std::vector<int> t = table;
    if (degree == 2) {
      if (t.size() != static_cast<std::size_t>(n) * n)
        throw invalid_parameter("cocycle table has wrong size");
      t = normalize(Cocycle2{action, table}).table;
      const int e = G.identity();
      for (int g = 0; g < n; ++g)
        if (t[e * n + g] != action.module.zero() || t[g * n + e] != action.module.zero())
          throw invalid_parameter("cochain is not a cocycle");
    } else if (t.size() != static_cast<std::size_t>(n)) {
      throw invalid_parameter("cochain table has wrong size");
    }
    std::vector<std::vector<i64>> per_part;
    for (const auto& pt : *parts) {
      const int k = pt.part->rank();
      const CochainLayout lay(G, degree, k);
      std::vector<i64> x(lay.size(), 0);
      if (degree == 1) {
        for (int g = 0; g < n; ++g) {
          if (g == G.identity()) {
            if (t[g] != action.module.zero())
              throw invalid_parameter("1-cocycle must vanish at the identity");
            continue;
          }
          const auto v = pt.part->project(t[g]);
          for (int s = 0; s < k; ++s) x[lay.var1(g, s)] = v[s];
        }
      } else {
        for (int g1 = 0; g1 < n; ++g1)
          for (int g2 = 0; g2 < n; ++g2) {
            if (lay.var2(g1, g2, 0) < 0) continue;
            const auto v = pt.part->project(t[g1 * n + g2]);
            for (int s = 0; s < k; ++s) x[lay.var2(g1, g2, s)] = v[s];
          }
      }
      per_part.push_back(pt.coh.coords(x));
    }
    // CRT per merged factor.
    std::vector<int> out(factors.size(), 0);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      i64 value = 0, modulus = 1;
      for (std::size_t pi = 0; pi < parts->size(); ++pi) {
        if (pick[f][pi] < 0) continue;
        const int idx = pick[f][pi];
        const i64 pm = int_pow((*parts)[pi].coh.p, (*parts)[pi].coh.exponents[idx]);
        const i64 r = per_part[pi][idx] % pm;
        // value' == value mod modulus, == r mod pm
        const i64 step = ((r - value) % pm + pm) % pm * mod_inverse(modulus % pm, pm) % pm;
        value += modulus * step;
        modulus *= pm;
      }
      out[f] = static_cast<int>(value % factors[f]);
    }
    return out;
  };
  return CohomologyGroup(degree, factors, std::move(reps), action, impl);
}

}  // namespace

// ---------------------------------------------------------------------------

CohomologyGroup::CohomologyGroup(int degree, std::vector<int> invariant_factors,
                                 std::vector<std::vector<int>> representatives,
                                 AbelianAction base,
                                 std::shared_ptr<const Impl> impl)
    : degree_(degree),
      factors_(std::move(invariant_factors)),
      reps_(std::move(representatives)),
      base_(std::move(base)),
      impl_(std::move(impl)) {}

long long CohomologyGroup::order() const {
  long long o = 1;
  for (int d : factors_) o *= d;
  return o;
}

Cocycle2 CohomologyGroup::representative2(std::size_t i) const {
  if (degree_ != 2) throw invalid_parameter("not a degree-2 group");
  return Cocycle2{base_, reps_.at(i)};
}

Cochain1 CohomologyGroup::representative1(std::size_t i) const {
  if (degree_ != 1) throw invalid_parameter("not a degree-1 group");
  return Cochain1{base_, reps_.at(i)};
}

std::vector<int> CohomologyGroup::classify(
    const std::vector<int>& cocycle_table) const {
  return impl_->classify(cocycle_table);
}

std::vector<int> CohomologyGroup::combine(const std::vector<int>& coords) const {
  if (coords.size() != factors_.size())
    throw invalid_parameter("coordinate tuple has wrong length");
  const int n = base_.actor.order();
  std::vector<int> table(degree_ == 1 ? n : n * n, base_.module.zero());
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      table[j] = base_.module.add(table[j], base_.module.scale(reps_[i][j], coords[i]));
  return table;
}

CocycleCheck is_cocycle2(const Cocycle2& c) {
  const FiniteGroup& G = c.base.actor;
  const FiniteAbelianGroup& A = c.base.module;
  const int n = G.order();
  if (c.table.size() != static_cast<std::size_t>(n) * n)
    throw invalid_parameter("cocycle table has " + std::to_string(c.table.size()) +
                            " entries, expected " + std::to_string(n * n));
  for (int v : c.table)
    if (v < 0 || v >= A.order()) throw invalid_parameter("cocycle value out of range");
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3) {
        const int lhs = A.add(c(g1, g2), c(G.mul(g1, g2), g3));
        const int rhs = A.add(c.base(g1, c(g2, g3)), c(g1, G.mul(g2, g3)));
        if (lhs != rhs) return CocycleCheck{false, {g1, g2, g3}};
      }
  return {};
}

bool is_cocycle1(const Cochain1& f) {
  const FiniteGroup& G = f.base.actor;
  const FiniteAbelianGroup& A = f.base.module;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (f.map[G.mul(g, h)] != A.add(f.map[g], f.base(g, f.map[h]))) return false;
  return true;
}

Cocycle2 coboundary_of(const Cochain1& f) {
  const FiniteGroup& G = f.base.actor;
  const FiniteAbelianGroup& A = f.base.module;
  const int n = G.order();
  if (f.map.size() != static_cast<std::size_t>(n))
    throw invalid_parameter("cochain has wrong length");
  Cocycle2 c{f.base, std::vector<int>(static_cast<std::size_t>(n) * n)};
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      c.table[g1 * n + g2] =
          A.sub(A.add(f.map[g1], f.base(g1, f.map[g2])), f.map[G.mul(g1, g2)]);
  return c;
}

Cocycle2 add_coboundary(const Cocycle2& c, const Cochain1& f) {
  Cocycle2 d = coboundary_of(f);
  for (std::size_t i = 0; i < d.table.size(); ++i)
    d.table[i] = c.base.module.add(c.table[i], d.table[i]);
  return d;
}

Cocycle2 normalize(const Cocycle2& c) {
  // The constant cochain f = -c(1,1) kills c(1,g) and c(g,1).
  const int n = c.base.actor.order();
  const int e = c.base.actor.identity();
  Cochain1 f{c.base, std::vector<int>(n, c.base.module.neg(c(e, e)))};
  return add_coboundary(c, f);
}

Cocycle2 trivial_cocycle(const AbelianAction& base) {
  const int n = base.actor.order();
  return Cocycle2{base, std::vector<int>(static_cast<std::size_t>(n) * n, base.module.zero())};
}

std::optional<Cochain1> are_cohomologous(const Cocycle2& c1, const Cocycle2& c2,
                                         const CohomologyLimits& limits) {
  if (!(c1.base.actor == c2.base.actor) || !(c1.base.module == c2.base.module) ||
      c1.base.act != c2.base.act) {
    throw invalid_parameter("cocycles live on different actions");
  }
  const AbelianAction& base = c1.base;
  const FiniteGroup& G = base.actor;
  const FiniteAbelianGroup& A = base.module;
  const int n = G.order();
  std::vector<int> diff(c1.table.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = A.sub(c2.table[i], c1.table[i]);

  long double space = 1;
  for (int i = 0; i < n; ++i) space *= A.order();
  if (space <= static_cast<long double>(limits.max_exhaustive_maps)) {
    std::vector<int> f(n, 0);
    while (true) {
      bool ok = true;
      for (int g1 = 0; g1 < n && ok; ++g1)
        for (int g2 = 0; g2 < n && ok; ++g2)
          ok = A.sub(A.add(f[g1], base(g1, f[g2])), f[G.mul(g1, g2)]) == diff[g1 * n + g2];
      if (ok) return Cochain1{base, f};
      int pos = 0;
      while (pos < n && ++f[pos] == A.order()) f[pos++] = 0;
      if (pos == n) return std::nullopt;
    }
  }
  if (n > limits.max_actor_order || A.order() > limits.max_module_order) {
    throw capacity_error("witness search needs |actor| <= " +
                         std::to_string(limits.max_actor_order) + " and |module| <= " +
                         std::to_string(limits.max_module_order));
  }
  // Solve d f = diff one prime at a time over Z/p^a.
  std::vector<int> f(n, A.zero());
  for (auto [p, e] : factorize(A.order())) {
    (void)e;
    PrimePart part(base, p);
    const LocalRing& ring = part.ring();
    const int k = part.rank();
    LocalMatrix m(n * n * k, n * k);
    LocalMatrix rhs(n * n * k, 1);
    for (int g1 = 0; g1 < n; ++g1)
      for (int g2 = 0; g2 < n; ++g2) {
        const auto b = part.project(diff[g1 * n + g2]);
        for (int j = 0; j < k; ++j) {
          const int row = (g1 * n + g2) * k + j;
          const i64 sc = part.row_scale(j);
          m.at(row, g1 * k + j) = ring.reduce(m.at(row, g1 * k + j) + sc);
          for (int t = 0; t < k; ++t)
            m.at(row, g2 * k + t) =
                ring.reduce(m.at(row, g2 * k + t) + sc * part.matrix(g1, j, t));
          const int g12 = G.mul(g1, g2);
          m.at(row, g12 * k + j) = ring.reduce(m.at(row, g12 * k + j) - sc);
          rhs.at(row, 0) = ring.reduce(sc * b[j]);
        }
      }
    SmithForm s = smith_normal_form(ring, m, {.right = true, .rhs = &rhs});
    std::vector<i64> y(n * k, 0);
    for (int l = 0; l < m.rows(); ++l) {
      const i64 b = rhs.at(l, 0);
      if (l < s.rank()) {
        const i64 pv = ring.power_of_p(s.valuations[l]);
        if (b % pv != 0) return std::nullopt;
        y[l] = b / pv;
      } else if (b != 0) {
        return std::nullopt;
      }
    }
    for (int g = 0; g < n; ++g) {
      std::vector<i64> v(k, 0);
      for (int t = 0; t < k; ++t) {
        i64 acc = 0;
        for (int l = 0; l < n * k; ++l)
          acc = (acc + s.right.at(g * k + t, l) * y[l]) % ring.modulus();
        v[t] = acc;
      }
      f[g] = A.add(f[g], part.embed(v));
    }
  }
  Cochain1 witness{base, f};
  if (add_coboundary(c1, witness).table != c2.table) {
    throw Error(ErrorKind::kValidation, "linear witness failed verification");
  }
  return witness;
}

CohomologyGroup h1(const AbelianAction& action, const CohomologyLimits& limits) {
  return compute(action, 1, limits);
}

CohomologyGroup h2(const AbelianAction& action, const CohomologyLimits& limits) {
  return compute(action, 2, limits);
}

CohomologyGroup h2_cyclic_norm(const AbelianAction& action,
                               std::optional<int> generator) {
  const FiniteGroup& G = action.actor;
  const FiniteAbelianGroup& A = action.module;
  const int r = G.order();
  int t = -1;
  if (generator) {
    t = *generator;
    if (t < 0 || t >= r || G.element_order(t) != r)
      throw invalid_parameter("designated element does not generate the actor");
  } else {
    for (int x = 0; x < r && t < 0; ++x)
      if (G.element_order(x) == r) t = x;
    if (t < 0) throw invalid_parameter("actor is not cyclic");
  }
  // power[i] = t^i, exponent_of[t^i] = i
  std::vector<int> power(r), exponent_of(r);
  for (int i = 0, x = G.identity(); i < r; ++i, x = G.mul(x, t)) {
    power[i] = x;
    exponent_of[x] = i;
  }
  std::vector<int> fixed;
  for (int a = 0; a < A.order(); ++a)
    if (action(t, a) == a) fixed.push_back(a);
  std::vector<char> is_norm(A.order(), 0);
  for (int b = 0; b < A.order(); ++b) {
    int s = A.zero();
    for (int i = 0; i < r; ++i) s = A.add(s, action(power[i], b));
    is_norm[s] = 1;
  }
  std::vector<int> norms;
  for (int a = 0; a < A.order(); ++a)
    if (is_norm[a]) norms.push_back(a);

  // Cosets of the norm image inside the fixed subgroup.
  std::vector<int> coset(A.order(), -1);
  std::vector<int> coset_rep;
  for (int a : fixed) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(a);
    for (int b : norms) coset[A.add(a, b)] = id;
  }
  const int qn = static_cast<int>(coset_rep.size());
  std::vector<int> qtable(static_cast<std::size_t>(qn) * qn);
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j) qtable[i * qn + j] = coset[A.add(coset_rep[i], coset_rep[j])];
  FiniteGroup quotient_group(qn, std::move(qtable), coset[A.zero()]);
  auto [abelian, iso] = recognize_abelian(quotient_group);
  std::vector<int> abelian_index_of(qn);
  for (int i = 0; i < qn; ++i) abelian_index_of[iso[i]] = i;

  // Representative for a in A^G: c(t^i, t^j) = a when i + j >= r.
  std::vector<std::vector<int>> reps;
  for (int i = 0; i < abelian.rank(); ++i) {
    std::vector<int> unit(abelian.rank(), 0);
    unit[i] = 1;
    const int a = coset_rep[iso[abelian.index(unit)]];
    std::vector<int> table(static_cast<std::size_t>(r) * r, A.zero());
    for (int x = 0; x < r; ++x)
      for (int y = 0; y < r; ++y)
        if (exponent_of[x] + exponent_of[y] >= r) table[x * r + y] = a;
    reps.push_back(std::move(table));
  }
  auto impl = std::make_shared<CohomologyGroup::Impl>();
  impl->classify = [action, power, t, coset, abelian_index_of, abelian](
                       const std::vector<int>& table) {
    const FiniteAbelianGroup& A = action.module;
    const Cocycle2 c = normalize(Cocycle2{action, table});
    if (!is_cocycle2(c)) throw invalid_parameter("cochain is not a cocycle");
    int a = A.zero();
    for (int x : power) a = A.add(a, c(x, t));
    if (coset[a] < 0) throw invalid_parameter("cochain is not a cocycle");
    return abelian.coords(abelian_index_of[coset[a]]);
  };
  return CohomologyGroup(2, abelian.invariant_factors(), std::move(reps), action,
                         impl);
}

}  // namespace tweq
