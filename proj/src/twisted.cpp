#include "tweq/twisted.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tweq/cohomology.hpp"
#include "tweq/error.hpp"

namespace tweq {

namespace {

std::string triple_text(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void check_shapes(const TwistedData& d) {
  if (!(d.theta.actor == d.gamma) || !(d.theta.module == d.g))
    throw invalid_parameter("theta must act by the given Gamma on the given G");
  const std::size_t n = static_cast<std::size_t>(d.gamma.order());
  if (d.c.size() != n * n)
    throw invalid_parameter("cocycle table must have |Gamma|^2 entries");
  for (int v : d.c)
    if (v < 0 || v >= d.g.order())
      throw invalid_parameter("cocycle value out of range");
}

}  // namespace

TwistedData untwisted_data(const FiniteGroup& gamma, const FiniteGroup& g,
                           const GroupAction& theta) {
  return TwistedData{gamma, g, theta,
                     std::vector<int>(static_cast<std::size_t>(gamma.order()) *
                                          gamma.order(),
                                      g.identity())};
}

CenterModule center_module(const FiniteGroup& gamma, const GroupAction& theta) {
  const FiniteGroup& G = theta.module;
  const std::vector<int> center = G.center();
  auto [ab, iso] = recognize_abelian(G.subgroup(center));
  CenterModule out;
  out.to_g.resize(ab.order());
  out.from_g.assign(G.order(), -1);
  for (int i = 0; i < ab.order(); ++i) {
    out.to_g[i] = center[iso[i]];
    out.from_g[out.to_g[i]] = i;
  }
  out.action = AbelianAction{gamma, ab,
                             std::vector<int>(static_cast<std::size_t>(gamma.order()) *
                                              ab.order())};
  for (int y = 0; y < gamma.order(); ++y)
    for (int i = 0; i < ab.order(); ++i) {
      const int img = out.from_g[theta(y, out.to_g[i])];
      if (img < 0) throw invalid_parameter("theta does not preserve the center");
      out.action.act[y * ab.order() + i] = img;
    }
  return out;
}

TwistedGroup::TwistedGroup(TwistedData data) : data_(std::move(data)) {
  check_shapes(data_);
  const ValidationReport rep = validate_action(data_.theta);
  if (!rep) throw invalid_parameter("theta: " + rep.message);
  const FiniteGroup& G = data_.g;
  const FiniteGroup& Y = data_.gamma;
  const std::vector<int> center = G.center();
  std::vector<char> central(G.order(), 0);
  for (int z : center) central[z] = 1;
  for (int a = 0; a < Y.order(); ++a)
    for (int b = 0; b < Y.order(); ++b)
      if (!central[data_.cocycle(a, b)])
        throw invalid_parameter("cocycle value at (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") is not central");
  for (int a = 0; a < Y.order(); ++a)
    for (int b = 0; b < Y.order(); ++b)
      for (int e = 0; e < Y.order(); ++e) {
        const int lhs = G.mul(data_.cocycle(a, b), data_.cocycle(Y.mul(a, b), e));
        const int rhs = G.mul(data_.theta(a, data_.cocycle(b, e)),
                              data_.cocycle(a, Y.mul(b, e)));
        if (lhs != rhs)
          throw invalid_parameter("cocycle identity fails at " + triple_text(a, b, e));
      }

  const int ng = G.order();
  const int n = ng * Y.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    const int g1 = g_part(x), y1 = gamma_part(x);
    labels[x] = "(" + G.label(g1) + "," + Y.label(y1) + ")";
    for (int w = 0; w < n; ++w) {
      const int g2 = g_part(w), y2 = gamma_part(w);
      const int g = G.mul(G.mul(data_.cocycle(y1, y2), g1), data_.theta(y1, g2));
      mul[static_cast<std::size_t>(x) * n + w] = element(g, Y.mul(y1, y2));
    }
  }
  const int e = element(G.inverse(data_.cocycle(Y.identity(), Y.identity())),
                        Y.identity());
  derived_ = FiniteGroup(n, std::move(mul), e, std::move(labels));
}

TwistedGroup build_twisted_group(TwistedData data) {
  return TwistedGroup(std::move(data));
}

std::optional<std::vector<int>> extension_equivalent(const TwistedGroup& e,
                                                     const TwistedGroup& e2) {
  const TwistedData& d = e.data();
  const TwistedData& d2 = e2.data();
  if (!(d.gamma == d2.gamma) || !(d.g == d2.g) || d.theta.act != d2.theta.act)
    throw invalid_parameter("extensions have different (G, Gamma, theta)");
  const CenterModule z = center_module(d.gamma, d.theta);
  Cocycle2 c1{z.action, {}}, c2{z.action, {}};
  for (int v : d.c) c1.table.push_back(z.from_g[v]);
  for (int v : d2.c) c2.table.push_back(z.from_g[v]);
  const auto f = are_cohomologous(c1, c2);
  if (!f) return std::nullopt;

  const FiniteGroup& G = d.g;
  const int n = e.derived().order();
  std::vector<int> phi(n);
  for (int x = 0; x < n; ++x) {
    const int y = e.gamma_part(x);
    phi[x] = e2.element(G.mul(e.g_part(x), G.inverse(z.to_g[f->map[y]])), y);
  }
  const FiniteGroup& A = e.derived();
  const FiniteGroup& B = e2.derived();
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w)
      if (phi[A.mul(x, w)] != B.mul(phi[x], phi[w]))
        throw Error(ErrorKind::kValidation,
                    "extension map fails to be a homomorphism");
  std::vector<int> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::kValidation, "extension map is not bijective");
  return phi;
}

bool is_twisted_cocycle1(const TwistedData& d, const std::vector<int>& rho) {
  const FiniteGroup& Y = d.gamma;
  const FiniteGroup& G = d.g;
  if (rho.size() != static_cast<std::size_t>(Y.order())) return false;
  for (int a = 0; a < Y.order(); ++a)
    for (int b = 0; b < Y.order(); ++b) {
      const int rhs = G.mul(G.mul(d.cocycle(a, b), rho[a]), d.theta(a, rho[b]));
      if (rho[Y.mul(a, b)] != rhs) return false;
    }
  return true;
}

std::vector<TwistedCocycle1> z1_twisted(const TwistedData& d,
                                        long long max_candidates) {
  check_shapes(d);
  const FiniteGroup& Y = d.gamma;
  const FiniteGroup& G = d.g;
  const std::vector<int> gens = Y.generating_set();
  long long candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    candidates *= G.order();
    if (candidates > max_candidates)
      throw capacity_error(std::to_string(G.order()) + "^" +
                           std::to_string(gens.size()) +
                           " generator images exceed " +
                           std::to_string(max_candidates));
  }

  const int e = Y.identity();
  std::vector<TwistedCocycle1> out;
  std::vector<int> images(gens.size(), 0);
  std::vector<int> rho(Y.order());
  std::vector<int> queue;
  for (long long t = 0; t < candidates; ++t) {
    long long rest = t;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      images[i] = static_cast<int>(rest % G.order());
      rest /= G.order();
    }
    std::fill(rho.begin(), rho.end(), -1);
    rho[e] = G.inverse(d.cocycle(e, e));
    queue.assign(1, e);
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const int y = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int s = gens[i];
        const int ys = Y.mul(y, s);
        const int v = G.mul(G.mul(d.cocycle(y, s), rho[y]), d.theta(y, images[i]));
        if (rho[ys] < 0) {
          rho[ys] = v;
          queue.push_back(ys);
        } else if (rho[ys] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok && is_twisted_cocycle1(d, rho)) out.push_back({rho});
  }
  std::sort(out.begin(), out.end(),
            [](const TwistedCocycle1& a, const TwistedCocycle1& b) {
              return a.map < b.map;
            });
  return out;
}

std::vector<LocalTypeClass> h1_twisted(const TwistedData& d,
                                       long long max_candidates) {
  const std::vector<TwistedCocycle1> z1 = z1_twisted(d, max_candidates);
  const FiniteGroup& Y = d.gamma;
  const FiniteGroup& G = d.g;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < z1.size(); ++i)
    index.emplace(z1[i].map, static_cast<int>(i));
  std::vector<char> seen(z1.size(), 0);
  std::vector<LocalTypeClass> out;
  std::vector<int> moved(Y.order());
  for (std::size_t i = 0; i < z1.size(); ++i) {
    if (seen[i]) continue;
    long long size = 0;
    for (int g = 0; g < G.order(); ++g) {
      for (int y = 0; y < Y.order(); ++y)
        moved[y] = G.mul(G.mul(G.inverse(g), z1[i].map[y]), d.theta(y, g));
      auto it = index.find(moved);
      if (it == index.end())
        throw Error(ErrorKind::kValidation, "twisted conjugation left Z^1");
      if (!seen[it->second]) {
        seen[it->second] = 1;
        ++size;
      }
    }
    LocalTypeClass cls;
    cls.id = static_cast<int>(out.size());
    cls.mode = LocalTypeMode::kFinite;
    cls.representative = z1[i].map;
    cls.orbit_size = size;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<LocalTypeClass> sl_local_types(int n, int m, int k, bool inner) {
  if (n < 1 || m < 1) throw invalid_parameter("n and m must be positive");
  if (!inner)
    throw unsupported_mode(
        "local types for an outer twist on the isotropy group are not classified");
  const long long denom = static_cast<long long>(n) * m;
  if (denom > (1 << 30)) throw capacity_error("n*m too large");
  // Multisets of size n from m values: C(n+m-1, n).
  double count = 1;
  for (int i = 1; i <= n; ++i) {
    count = count * (m - 1 + i) / i;
    if (count > 1e7) throw capacity_error("too many eigenvalue multisets");
  }
  const long long kk = ((k % n) + n) % n;
  // Eigenvalue exp(2 pi i e / nm) has m-th power exp(2 pi i e / n), which
  // must equal exp(-2 pi i k / n).
  std::vector<long long> exps(m);
  for (int j = 0; j < m; ++j) exps[j] = ((static_cast<long long>(j) * n - kk) % denom + denom) % denom;
  std::sort(exps.begin(), exps.end());

  std::vector<LocalTypeClass> out;
  std::vector<int> pick(n, 0);
  // Nondecreasing index tuples in lexicographic order.
  while (true) {
    long long sum = 0;
    for (int i : pick) sum += exps[i];
    if (sum % denom == 0) {
      LocalTypeClass cls;
      cls.id = static_cast<int>(out.size());
      cls.mode = LocalTypeMode::kSl;
      for (int i : pick) cls.representative.push_back(static_cast<int>(exps[i]));
      cls.denominator = static_cast<int>(denom);
      out.push_back(std::move(cls));
    }
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == m - 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < n; ++i) pick[i] = pick[pos];
  }
  return out;
}

std::string describe(const LocalTypeClass& cls) {
  std::ostringstream os;
  if (cls.mode == LocalTypeMode::kSl) {
    os << "eigenvalues {";
    for (std::size_t i = 0; i < cls.representative.size(); ++i)
      os << (i ? ", " : "") << "e^(2pi i " << cls.representative[i] << "/"
         << cls.denominator << ")";
    os << "}";
  } else {
    os << "rho = [";
    for (std::size_t i = 0; i < cls.representative.size(); ++i)
      os << (i ? ", " : "") << cls.representative[i];
    os << "], orbit " << cls.orbit_size;
  }
  return os.str();
}

}  // namespace tweq
