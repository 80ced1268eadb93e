#include "tweq/orbifold.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "tweq/error.hpp"

namespace tweq {

namespace {

struct Quotient {
  std::vector<int> kernel;  // sorted, contains the identity
  FiniteGroup group;
  std::vector<int> coset_of;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

int letter(int gen) { return gen + 1; }

}  // namespace

SurfaceReport validate_surface_action(const SurfaceAction& sa) {
  SurfaceReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const FiniteGroup& G = sa.group;
  const int h = sa.quotient_genus;
  const int r = sa.branch_count();
  if (sa.genus < 0) fail("genus must be >= 0");
  if (h < 0) fail("quotient_genus must be >= 0");
  std::set<int> ids;
  for (const auto& [id, m] : sa.branch) {
    if (m < 2) fail("branch point " + std::to_string(id) + " has order " +
                    std::to_string(m) + " < 2");
    if (!ids.insert(id).second) fail("branch point id " + std::to_string(id) + " repeated");
  }
  bool shape_ok = h >= 0 && r >= 0;
  if (shape_ok && sa.boundary_images.size() != static_cast<std::size_t>(2 * h + r)) {
    fail("boundary_images has " + std::to_string(sa.boundary_images.size()) +
         " entries, expected 2h + r = " + std::to_string(2 * h + r));
    shape_ok = false;
  }
  for (int x : sa.boundary_images)
    if (x < 0 || x >= G.order()) {
      fail("boundary image " + std::to_string(x) + " is not an element of the group");
      shape_ok = false;
    }

  Quotient q;
  q.kernel = sa.kernel.empty() ? std::vector<int>{G.identity()} : sa.kernel;
  bool kernel_ok = std::is_sorted(q.kernel.begin(), q.kernel.end()) &&
                   std::adjacent_find(q.kernel.begin(), q.kernel.end()) == q.kernel.end();
  for (int k : q.kernel) kernel_ok &= k >= 0 && k < G.order();
  if (kernel_ok) kernel_ok = G.generated_subgroup(q.kernel) == q.kernel;
  if (!kernel_ok) {
    fail("kernel is not a sorted subgroup of the group");
    return rep;
  }
  try {
    q.group = G.quotient(q.kernel, &q.coset_of);
  } catch (const Error&) {
    fail("kernel is not a normal subgroup");
    return rep;
  }
  const long long n = q.group.order();

  if (sa.genus >= 0 && h >= 0) {
    long long lcm = 1;
    bool orders_ok = true;
    for (const auto& [id, m] : sa.branch) {
      if (m < 2) orders_ok = false;
      else lcm = std::lcm(lcm, static_cast<long long>(m));
    }
    if (orders_ok) {
      long long rhs = (2LL * h - 2) * lcm;
      for (const auto& [id, m] : sa.branch) rhs += lcm - lcm / m;
      rhs *= n;
      const long long lhs = (2LL * sa.genus - 2) * lcm;
      if (lhs != rhs)
        fail("Riemann-Hurwitz fails: 2g-2 = " + std::to_string(2LL * sa.genus - 2) +
             " but |Gamma/K|(2h-2+sum(1-1/m_j)) = " + std::to_string(rhs) + "/" +
             std::to_string(lcm));
    }
  }
  if (!shape_ok) return rep;

  for (int j = 0; j < r; ++j) {
    const int img = q.coset_of[sa.x_image(j)];
    const int ord = q.group.element_order(img);
    if (ord != sa.branch[j].second)
      fail("x_" + std::to_string(j + 1) + " image " + std::to_string(sa.x_image(j)) +
           " has order " + std::to_string(ord) + " modulo the kernel, expected " +
           std::to_string(sa.branch[j].second));
  }
  std::vector<int> gens = sa.boundary_images;
  gens.insert(gens.end(), q.kernel.begin(), q.kernel.end());
  if (static_cast<int>(G.generated_subgroup(gens).size()) != G.order())
    fail("boundary images do not generate the group");

  int prod = G.identity();
  for (int i = 0; i < h; ++i) {
    const int a = sa.a_image(i), b = sa.b_image(i);
    prod = G.mul(prod, G.mul(G.mul(a, b), G.mul(G.inverse(a), G.inverse(b))));
  }
  for (int j = 0; j < r; ++j) prod = G.mul(prod, sa.x_image(j));
  if (!std::binary_search(q.kernel.begin(), q.kernel.end(), prod))
    fail("long relation prod [a_i,b_i] prod x_j evaluates to " + std::to_string(prod) +
         ", not the identity");
  return rep;
}

SurfaceAction hyperelliptic_action(int genus, int branch_points) {
  if (branch_points < 0) branch_points = 2 * genus + 2;
  SurfaceAction sa;
  sa.genus = genus;
  sa.group = build_cyclic(2);
  sa.quotient_genus = 0;
  for (int j = 0; j < branch_points; ++j) {
    sa.branch.emplace_back(j + 1, 2);
    sa.boundary_images.push_back(1);
  }
  return sa;
}

SurfaceAction trivial_surface_action(int genus) {
  SurfaceAction sa;
  sa.genus = genus;
  sa.quotient_genus = genus;
  sa.boundary_images.assign(2 * genus, 0);
  return sa;
}

int evaluate(const FiniteGroup& group, const std::vector<int>& images,
             const Word& word) {
  int x = group.identity();
  for (int l : word)
    x = group.mul(x, l > 0 ? images[l - 1] : group.inverse(images[-l - 1]));
  return x;
}

EquivariantPresentation presentation(const SurfaceAction& sa) {
  const SurfaceReport rep = validate_surface_action(sa);
  if (!rep) throw validation_error(join(rep.violations));
  const FiniteGroup& G = sa.group;
  const int h = sa.quotient_genus;
  const int r = sa.branch_count();

  std::vector<int> kernel = sa.kernel.empty() ? std::vector<int>{G.identity()} : sa.kernel;
  const long long n = G.order() / static_cast<long long>(kernel.size());
  // Kernel genus from Riemann-Hurwitz, doubled to stay integral.
  long long lcm = 1;
  for (const auto& [id, m] : sa.branch) lcm = std::lcm(lcm, static_cast<long long>(m));
  long long chi = (2LL * h - 2) * lcm;
  for (const auto& [id, m] : sa.branch) chi += lcm - lcm / m;
  if ((chi * n) % lcm != 0 || 2 + chi * n / lcm != 2LL * sa.genus)
    throw validation_error("kernel genus does not match the surface genus");

  EquivariantPresentation p;
  p.target = G;
  for (int i = 0; i < h; ++i) {
    p.generators.push_back("a" + std::to_string(i + 1));
    p.generators.push_back("b" + std::to_string(i + 1));
  }
  for (int j = 0; j < r; ++j) p.generators.push_back("x" + std::to_string(j + 1));
  p.epi = sa.boundary_images;
  p.orbifold_generators = 2 * h + r;

  // Nontrivial kernel elements become extra generators k_e.
  std::vector<int> kgen(G.order(), -1);
  for (int k : kernel) {
    if (k == G.identity()) continue;
    kgen[k] = static_cast<int>(p.generators.size());
    p.generators.push_back("k" + std::to_string(k));
    p.epi.push_back(k);
  }
  // Append the correction k^-1 so that the relator is trivial in G.
  auto close = [&](Word w) {
    const int v = evaluate(G, p.epi, w);
    if (v != G.identity()) w.push_back(-letter(kgen[v]));
    p.relators.push_back(std::move(w));
  };

  for (int j = 0; j < r; ++j) close(Word(sa.branch[j].second, letter(2 * h + j)));
  Word longrel;
  for (int i = 0; i < h; ++i) {
    const int a = letter(2 * i), b = letter(2 * i + 1);
    longrel.insert(longrel.end(), {a, b, -a, -b});
  }
  for (int j = 0; j < r; ++j) longrel.push_back(letter(2 * h + j));
  close(longrel);

  for (int a : kernel)
    for (int b : kernel) {
      if (a == G.identity() || b == G.identity()) continue;
      close({letter(kgen[a]), letter(kgen[b])});
    }
  for (int u = 0; u < p.orbifold_generators; ++u)
    for (int k : kernel) {
      if (k == G.identity()) continue;
      close({letter(u), letter(kgen[k]), -letter(u)});
    }
  return p;
}

std::vector<IsotropyClass> isotropy_classes(const SurfaceAction& sa) {
  const SurfaceReport rep = validate_surface_action(sa);
  if (!rep) throw validation_error(join(rep.violations));
  std::vector<IsotropyClass> out;
  for (int j = 0; j < sa.branch_count(); ++j) {
    std::vector<int> gens = sa.kernel;
    gens.push_back(sa.x_image(j));
    out.push_back({sa.branch[j].first, sa.group.generated_subgroup(gens), sa.x_image(j)});
  }
  return out;
}

std::vector<long long> abelianization(const EquivariantPresentation& p) {
  const int cols = static_cast<int>(p.generators.size());
  std::vector<std::vector<long long>> m;
  for (const Word& w : p.relators) {
    std::vector<long long> row(cols, 0);
    for (int l : w) row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  const int rows = static_cast<int>(m.size());
  std::vector<long long> diag;
  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block as pivot.
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr < 0 || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const long long f = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
        clean &= m[i][t] == 0;
      }
      for (int j = t + 1; j < cols; ++j) {
        const long long f = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        clean &= m[t][j] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold a non-multiple into row t and retry.
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m.empty() || t >= rows || m[t][t] == 0) break;
    diag.push_back(std::llabs(m[t][t]));
  }
  std::vector<long long> out;
  for (long long d : diag)
    if (d != 1) out.push_back(d);
  for (int j = static_cast<int>(diag.size()); j < cols; ++j) out.push_back(0);
  return out;
}

}  // namespace tweq
