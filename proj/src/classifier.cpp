#include "tweq/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <thread>

#include "tweq/error.hpp"

namespace tweq {

namespace {

bool is_sl_family(const StructureGroupData& d) {
  static const std::regex sln(R"(SLn\(\d+\))");
  return d.source == "builtin" && (d.name == "SL2" || std::regex_match(d.name, sln));
}

std::vector<int> restrict_table(const FiniteGroup& gamma, const std::vector<int>& table,
                                const std::vector<int>& elements) {
  const int n = gamma.order();
  const int k = static_cast<int>(elements.size());
  std::vector<int> out(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out[i * k + j] = table[elements[i] * n + elements[j]];
  return out;
}

void check_character(const FiniteGroup& gamma, const std::vector<int>& chi) {
  const int n = gamma.exponent();
  if (chi.size() != static_cast<std::size_t>(gamma.order()))
    throw invalid_parameter("chi must have one value per element of Gamma");
  for (int a = 0; a < gamma.order(); ++a)
    for (int b = 0; b < gamma.order(); ++b)
      if (((chi[a] + chi[b] - chi[gamma.mul(a, b)]) % n + n) % n != 0)
        throw invalid_parameter("chi is not a character of Gamma");
}

// Classes of H^1_theta(Gamma, G/Z(G)).
std::vector<std::string> inner_classes(const FiniteGroup& gamma, const GroupAction& theta) {
  const FiniteGroup& G = theta.module;
  std::vector<int> coset;
  const FiniteGroup q = G.quotient(G.center(), &coset);
  std::vector<int> rep(q.order(), -1);
  for (int x = 0; x < G.order(); ++x)
    if (rep[coset[x]] < 0) rep[coset[x]] = x;
  GroupAction act{gamma, q, std::vector<int>(static_cast<std::size_t>(gamma.order()) * q.order())};
  for (int y = 0; y < gamma.order(); ++y)
    for (int c = 0; c < q.order(); ++c) act.act[y * q.order() + c] = coset[theta(y, rep[c])];
  std::vector<std::string> out;
  for (const auto& cls : h1_twisted(untwisted_data(gamma, q, act)))
    out.push_back("class " + std::to_string(cls.id) + ": " + describe(cls));
  return out;
}

}  // namespace

ClassificationReport enumerate_labels(const ClassifierInput& in) {
  const bool lie = in.structure.has_value();
  if (lie == in.finite_theta.has_value())
    throw invalid_parameter("give either a structure group with a, or a finite G action");
  if (lie && !in.a) throw invalid_parameter("structure group mode needs a: Gamma -> Out");
  const FiniteGroup& gamma = lie ? in.a->source : in.finite_theta->actor;
  if (!(in.surface.group == gamma))
    throw invalid_parameter("surface action group differs from Gamma");
  const SurfaceReport rep = validate_surface_action(in.surface);
  if (!rep) {
    std::string msg;
    for (const auto& v : rep.violations) msg += (msg.empty() ? "" : "; ") + v;
    throw validation_error(msg);
  }

  ClassificationReport out;
  out.gamma_order = gamma.order();
  out.chi = in.chi.empty() ? std::vector<int>(gamma.order(), 0) : in.chi;
  check_character(gamma, out.chi);

  AbelianAction zaction;
  CenterModule zmod;
  if (lie) {
    out.structure = in.structure->name;
    zaction = center_action(*in.structure, *in.a);
    out.a_map = in.a->map;
  } else {
    const ValidationReport vr = validate_action(*in.finite_theta);
    if (!vr) throw invalid_parameter("theta: " + vr.message);
    out.structure = "finite group of order " + std::to_string(in.finite_theta->module.order());
    zmod = center_module(gamma, *in.finite_theta);
    zaction = zmod.action;
  }

  const CohomologyGroup h = h2(zaction);
  out.h2_factors = h.invariant_factors();
  const auto isotropy = isotropy_classes(in.surface);

  if (lie) {
    out.theta_classes = {"unresolved"};
    out.caveats.push_back(
        "theta' in H^1_theta(Gamma, Int(G)) is unresolved: Int(G) is infinite");
  } else {
    out.theta_classes = inner_classes(gamma, *in.finite_theta);
  }
  out.caveats.push_back("distinct labels are not claimed to index disjoint components");
  if (!in.surface.kernel.empty() && in.surface.kernel.size() > 1)
    out.caveats.push_back(
        "the action is not faithful; points off the branch set have isotropy equal to "
        "the kernel and are not labeled");

  std::set<std::string> caveat_seen;
  auto caveat = [&](const std::string& c) {
    if (caveat_seen.insert(c).second) out.caveats.push_back(c);
  };

  const std::vector<int>& factors = out.h2_factors;
  std::vector<int> coords(factors.size(), 0);
  while (true) {
    CClassBlock block;
    block.coords = coords;
    block.cocycle = normalize(Cocycle2{zaction, h.combine(coords)}).table;
    block.label_count = 1;
    for (const IsotropyClass& iso : isotropy) {
      BranchLocalTypes b;
      b.branch_id = iso.branch_id;
      b.isotropy = iso.subgroup;
      b.generator = iso.generator;
      const std::string where = "branch point " + std::to_string(iso.branch_id);
      if (lie) {
        const int m = gamma.element_order(iso.generator);
        bool inner = true;
        for (int y : iso.subgroup) inner &= (*in.a)(y) == in.a->target.identity();
        if (!is_sl_family(*in.structure)) {
          caveat("local types for " + in.structure->name + " are not computed");
        } else if (static_cast<int>(iso.subgroup.size()) != m) {
          caveat(where + ": isotropy group is not cyclic; local types unresolved");
        } else {
          const FiniteAbelianGroup& z = zaction.module;
          int charge = 0;
          int power = iso.generator;
          for (int k = 1; k < m; ++k) {
            charge = z.add(charge, block.cocycle[iso.generator * gamma.order() + power]);
            power = gamma.mul(power, iso.generator);
          }
          b.central_charge = charge;
          try {
            b.classes = sl_local_types(z.order(), m, charge, inner);
            b.resolved = true;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::kUnsupportedMode) throw;
            caveat(where + ": " + e.what());
          }
        }
      } else {
        const GroupAction& theta = *in.finite_theta;
        TwistedData d;
        d.gamma = gamma.subgroup(iso.subgroup);
        d.g = theta.module;
        d.theta = restrict_action(theta, iso.subgroup);
        d.theta.actor = d.gamma;
        for (int v : restrict_table(gamma, block.cocycle, iso.subgroup))
          d.c.push_back(zmod.to_g[v]);
        b.classes = h1_twisted(d);
        b.resolved = true;
      }
      block.label_count *= b.resolved ? static_cast<long long>(b.classes.size()) : 1;
      block.branches.push_back(std::move(b));
    }
    out.label_count += block.label_count * static_cast<long long>(out.theta_classes.size());
    out.blocks.push_back(std::move(block));

    std::size_t pos = 0;
    while (pos < coords.size() && ++coords[pos] == factors[pos]) coords[pos++] = 0;
    if (pos == coords.size()) break;
  }

  if (out.label_count > in.max_labels) {
    out.caveats.push_back("label list not expanded: " + std::to_string(out.label_count) +
                          " labels exceed the limit of " + std::to_string(in.max_labels));
    return out;
  }
  for (const CClassBlock& block : out.blocks) {
    if (block.label_count == 0) continue;
    const std::size_t r = block.branches.size();
    std::vector<int> choice(r, 0);
    while (true) {
      for (const std::string& t : out.theta_classes) {
        FixedComponentLabel label;
        label.c_class = block.coords;
        for (std::size_t i = 0; i < r; ++i)
          label.local_types.push_back(
              block.branches[i].resolved ? block.branches[i].classes[choice[i]].id : -1);
        label.theta_class = t;
        out.labels.push_back(std::move(label));
      }
      std::size_t pos = r;
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t size =
            block.branches[i].resolved ? block.branches[i].classes.size() : 1;
        if (++choice[i] < static_cast<int>(size)) {
          pos = i;
          break;
        }
        choice[i] = 0;
      }
      if (pos == r) break;
    }
  }
  return out;
}

RepCount count_twisted_reps(const EquivariantPresentation& pres, const TwistedGroup& e,
                            const RepCountOptions& options) {
  if (!(pres.target == e.data().gamma))
    throw invalid_parameter("presentation target differs from the twisted group's Gamma");
  if (options.threads < 1) throw invalid_parameter("threads must be positive");
  const int ng = e.data().g.order();
  const int gens = static_cast<int>(pres.generators.size());
  long long space = 1;
  for (int i = 0; i < gens; ++i) {
    if (space > options.max_search / ng) {
      std::string size = std::to_string(ng) + "^" + std::to_string(gens);
      throw capacity_error("search space " + size + " exceeds " +
                           std::to_string(options.max_search));
    }
    space *= ng;
  }

  // Relators checked once their last generator is assigned.
  std::vector<std::vector<const Word*>> due(std::max(gens, 1));
  std::vector<const Word*> constant;
  for (const Word& w : pres.relators) {
    int last = -1;
    for (int l : w) last = std::max(last, std::abs(l) - 1);
    if (last < 0) constant.push_back(&w);
    else due[last].push_back(&w);
  }
  const FiniteGroup& E = e.derived();

  struct Partial {
    long long count = 0;
    std::vector<std::vector<int>> solutions;
    bool overflow = false;
  };
  auto search = [&](int first_value, Partial& part) {
    std::vector<int> images(gens, 0);
    std::function<void(int)> rec = [&](int i) {
      if (part.overflow) return;
      if (i == gens) {
        ++part.count;
        if (options.classes) {
          if (static_cast<long long>(part.solutions.size()) >= options.max_solutions)
            part.overflow = true;
          else
            part.solutions.push_back(images);
        }
        return;
      }
      const int lo = i == 0 ? first_value : 0;
      const int hi = i == 0 ? first_value + 1 : ng;
      for (int v = lo; v < hi; ++v) {
        images[i] = e.element(v, pres.epi[i]);
        bool ok = true;
        for (const Word* w : due[i])
          if (evaluate(E, images, *w) != E.identity()) {
            ok = false;
            break;
          }
        if (ok) rec(i + 1);
      }
    };
    rec(0);
  };

  RepCount out;
  for (const Word* w : constant)
    if (!w->empty()) return out;
  std::vector<Partial> parts(gens == 0 ? 1 : ng);
  if (gens == 0) {
    parts[0].count = 1;
    if (options.classes) parts[0].solutions.push_back({});
  } else {
    const int threads = std::min(options.threads, ng);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int v = t; v < ng; v += threads) search(v, parts[v]);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<int>> solutions;
  for (auto& p : parts) {
    out.count += p.count;
    if (p.overflow)
      throw capacity_error("more than " + std::to_string(options.max_solutions) +
                           " representations to sort into classes");
    for (auto& s : p.solutions) solutions.push_back(std::move(s));
  }
  if (!options.classes) return out;
  if (static_cast<long long>(solutions.size()) > options.max_solutions)
    throw capacity_error("more than " + std::to_string(options.max_solutions) +
                         " representations to sort into classes");

  std::sort(solutions.begin(), solutions.end());
  std::vector<int> kernel;
  for (int x = 0; x < E.order(); ++x)
    if (e.gamma_part(x) == e.data().gamma.identity()) kernel.push_back(x);
  std::vector<char> seen(solutions.size(), 0);
  std::vector<int> moved(gens);
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (seen[i]) continue;
    long long size = 0;
    for (int k : kernel) {
      for (int j = 0; j < gens; ++j)
        moved[j] = E.mul(E.mul(k, solutions[i][j]), E.inverse(k));
      const auto it = std::lower_bound(solutions.begin(), solutions.end(), moved);
      if (it == solutions.end() || *it != moved)
        throw validation_error("conjugation left the representation set");
      const std::size_t idx = static_cast<std::size_t>(it - solutions.begin());
      if (!seen[idx]) {
        seen[idx] = 1;
        ++size;
      }
    }
    out.classes.push_back({solutions[i], size});
  }
  return out;
}

std::string factors_text(const std::vector<int>& f) {
  if (f.empty()) return "0";
  std::string s;
  for (int d : f) s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(d));
  return s;
}

namespace {

GroupHom hom_from(const FiniteGroup& source, const FiniteGroup& target,
                  std::vector<int> map) {
  GroupHom h{source, target, std::move(map)};
  h.validate();
  return h;
}

}  // namespace

std::vector<ExampleRow> reproduce_examples() {
  std::vector<ExampleRow> rows;
  auto add = [&](std::string source, std::string desc, std::vector<int> expected,
                 std::vector<int> computed) {
    ExampleRow r{std::move(source), std::move(desc), std::move(expected),
                 std::move(computed), false};
    r.match = r.expected == r.computed;
    rows.push_back(std::move(r));
  };
  const FiniteGroup c2 = build_cyclic(2);
  const FiniteGroup c3 = build_cyclic(3);
  const FiniteGroup s3 = build_symmetric(3);

  {
    const auto sl2 = lookup_structure_group("SL2");
    const auto action = center_action(sl2, trivial_hom(c2, sl2.out));
    add("SL(2), hyperelliptic", "H2(Z/2, Z/2), trivial action", {2},
        h2(action).invariant_factors());
  }
  for (int n = 3; n <= 9; ++n) {
    const auto sln = lookup_structure_group("SLn(" + std::to_string(n) + ")");
    const auto triv = center_action(sln, trivial_hom(c2, sln.out));
    const std::vector<int> even = n % 2 == 0 ? std::vector<int>{2} : std::vector<int>{};
    add("SL(n), hyperelliptic, a+",
        "H2(Z/2, Z/" + std::to_string(n) + "), trivial action", even,
        h2(triv).invariant_factors());
    const auto inv = center_action(sln, hom_from(c2, sln.out, {0, 1}));
    const CohomologyGroup h = h2(inv);
    add("SL(n), hyperelliptic, a-",
        "H2(Z/2, Z/" + std::to_string(n) + "), inversion", even, h.invariant_factors());
    // Classes indexed by the order <= 2 elements a through c(s,s) = a.
    std::set<std::vector<int>> classes;
    int two_torsion = 0;
    for (int a = 0; a < n; ++a) {
      if ((2 * a) % n != 0) continue;
      ++two_torsion;
      Cocycle2 c = trivial_cocycle(inv);
      c.table[3] = a;
      classes.insert(h.classify(c));
    }
    add("SL(n), hyperelliptic, a-",
        "distinct classes c(s,s) = a over a of order <= 2 in Z/" + std::to_string(n),
        {two_torsion}, {static_cast<int>(classes.size())});
  }
  {
    const auto spin = lookup_structure_group("Spin8");
    add("Spin(8), faithful S3", "H2(S3, Z/2 x Z/2), triality action", {},
        h2(center_action(spin, hom_from(s3, spin.out, {0, 1, 2, 3, 4, 5})))
            .invariant_factors());
    for (int b : {1, 2, 5}) {
      std::vector<int> map(6);
      for (int g = 0; g < 6; ++g) map[g] = (g == 1 || g == 2 || g == 5) ? b : 0;
      add("Spin(8), S3 with order-3 kernel",
          "H2(S3, Z/2 x Z/2), A3 trivial, odd elements act by " + s3.label(b), {2},
          h2(center_action(spin, hom_from(s3, spin.out, map))).invariant_factors());
    }
    for (int t : {0, 3, 4}) {
      std::vector<int> map{0, t, s3.mul(t, t)};
      add("Spin(8), cyclic trigonal",
          "H2(Z/3, Z/2 x Z/2), generator acts by " + s3.label(t), {},
          h2(center_action(spin, hom_from(c3, spin.out, map))).invariant_factors());
    }
  }
  {
    const auto e6 = lookup_structure_group("E6");
    add("E6, hyperelliptic, a+", "H2(Z/2, Z/3), trivial action", {},
        h2(center_action(e6, trivial_hom(c2, e6.out))).invariant_factors());
    add("E6, hyperelliptic, a-", "H2(Z/2, Z/3), inversion", {},
        h2(center_action(e6, hom_from(c2, e6.out, {0, 1}))).invariant_factors());
  }
  {
    const auto sl2 = lookup_structure_group("SL2");
    ClassifierInput in;
    in.structure = sl2;
    in.a = trivial_hom(c2, sl2.out);
    in.chi = {0, 1};
    in.surface = hyperelliptic_action(2);
    const auto report = enumerate_labels(in);
    add("SL(2), hyperelliptic", "labels for genus 2 and one character: 2^6 + 1",
        {65}, {static_cast<int>(report.label_count)});
  }
  return rows;
}

}  // namespace tweq
