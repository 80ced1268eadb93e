#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "tweq/cohomology.hpp"
#include "tweq/error.hpp"

using namespace tweq;
using tweq::testing::cyclic_action;
using tweq::testing::inversion_action;

namespace {

using Factors = std::vector<int>;

AbelianAction trivial(int r, const Factors& module) {
  return trivial_action(build_cyclic(r), FiniteAbelianGroup(module));
}

}  // namespace

TEST_CASE("is_cocycle2") {
  const AbelianAction base = trivial(2, {2});
  CHECK(is_cocycle2(trivial_cocycle(base)).ok);
  // c(s,s) = 1, others 0: all 8 triples hold.
  Cocycle2 c{base, {0, 0, 0, 1}};
  CHECK(is_cocycle2(c).ok);
  // Break it: c(0,1) = 1 only.
  Cocycle2 bad{base, {0, 1, 0, 0}};
  auto chk = is_cocycle2(bad);
  CHECK_FALSE(chk.ok);
  // The reported triple really fails.
  const auto [a, b, d] = chk.triple;
  const auto& A = base.module;
  const auto& G = base.actor;
  CHECK(A.add(bad(a, b), bad(G.mul(a, b), d)) !=
        A.add(base(a, bad(b, d)), bad(a, G.mul(b, d))));
  CHECK_THROWS_AS(is_cocycle2(Cocycle2{base, {0, 0, 0}}), Error);
}

TEST_CASE("coboundary_of") {
  const AbelianAction inv = inversion_action(4);
  CHECK(coboundary_of(Cochain1{inv, {0, 0}}).table == std::vector<int>(4, 0));
  // f(s) = 1 under inversion: c(s,s) = 1 + (-1) - f(1) = 0
  auto c = coboundary_of(Cochain1{inv, {0, 1}});
  CHECK(c(1, 1) == 0);
  std::mt19937 rng(7);
  for (const AbelianAction& act :
       {inv, tweq::testing::s3_permutation_action(), trivial(6, {2, 6})}) {
    for (int i = 0; i < 20; ++i) {
      Cochain1 f{act, tweq::testing::random_cochain(act, rng)};
      CHECK(is_cocycle2(coboundary_of(f)).ok);
    }
  }
}

TEST_CASE("normalize") {
  const AbelianAction inv = inversion_action(6);
  std::mt19937 rng(3);
  Cochain1 f{inv, tweq::testing::random_cochain(inv, rng)};
  Cocycle2 c = add_coboundary(Cocycle2{inv, {0, 0, 0, 3}}, f);
  Cocycle2 n = normalize(c);
  CHECK(n(0, 0) == 0);
  CHECK(n(0, 1) == 0);
  CHECK(n(1, 0) == 0);
  CHECK(are_cohomologous(c, n).has_value());
}

TEST_CASE("are_cohomologous") {
  const AbelianAction base = trivial(2, {2});
  Cocycle2 zero = trivial_cocycle(base);
  auto w = are_cohomologous(zero, zero);
  REQUIRE(w.has_value());
  CHECK(coboundary_of(*w).table == zero.table);
  CHECK_FALSE(are_cohomologous(zero, Cocycle2{base, {0, 0, 0, 1}}).has_value());

  std::mt19937 rng(11);
  const AbelianAction s3 = tweq::testing::s3_permutation_action();
  Cochain1 f{s3, tweq::testing::random_cochain(s3, rng)};
  Cocycle2 c = coboundary_of(f);
  auto g = are_cohomologous(trivial_cocycle(s3), c);
  REQUIRE(g.has_value());
  CHECK(coboundary_of(*g).table == c.table);
}

TEST_CASE("are_cohomologous linear route matches exhaustive route") {
  CohomologyLimits linear;
  linear.max_exhaustive_maps = 0;  // force the linear solver
  std::mt19937 rng(5);
  for (const AbelianAction& act :
       {inversion_action(4), tweq::testing::s3_sign_action(), trivial(4, {2, 4}),
        trivial(6, {6})}) {
    const CohomologyGroup h = h2(act);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> coords;
      for (int d : h.invariant_factors()) coords.push_back(static_cast<int>(rng() % d));
      Cocycle2 c{act, h.combine(coords)};
      Cochain1 f{act, tweq::testing::random_cochain(act, rng)};
      Cocycle2 c2 = add_coboundary(c, f);
      auto lin = are_cohomologous(c, c2, linear);
      auto exh = are_cohomologous(c, c2);
      REQUIRE(lin.has_value());
      REQUIRE(exh.has_value());
      CHECK(add_coboundary(c, *lin).table == c2.table);
      if (h.order() > 1) {
        // shift one coordinate to land in a different class
        std::vector<int> other = coords;
        other[0] = (other[0] + 1) % h.invariant_factors()[0];
        Cocycle2 c3{act, h.combine(other)};
        CHECK_FALSE(are_cohomologous(c, c3, linear).has_value());
        CHECK_FALSE(are_cohomologous(c, c3).has_value());
      }
    }
  }
}

TEST_CASE("h2 examples") {
  CHECK(h2(trivial(2, {2})).invariant_factors() == Factors{2});
  for (int n : {3, 5, 7, 9}) CHECK(h2(trivial(2, {n})).invariant_factors().empty());
  for (int n : {2, 4, 6, 8}) CHECK(h2(trivial(2, {n})).invariant_factors() == Factors{2});
  for (int n : {3, 5, 7, 9}) CHECK(h2(inversion_action(n)).invariant_factors().empty());
  for (int n : {4, 6, 8}) CHECK(h2(inversion_action(n)).invariant_factors() == Factors{2});
  // Every action of Z/3 on Z/2 x Z/2.
  FiniteAbelianGroup v({2, 2});
  for (const auto& alpha : tweq::testing::abelian_automorphisms(v)) {
    bool order3 = true;
    for (int m = 0; m < 4; ++m) order3 &= alpha[alpha[alpha[m]]] == m;
    if (!order3) continue;
    CHECK(h2(cyclic_action(3, v, alpha)).invariant_factors().empty());
  }
  CHECK(h2(tweq::testing::s3_permutation_action()).invariant_factors().empty());
  // A3 acting trivially: the action factors through S3/A3 = Z/2, which can
  // only swap two involutions or act trivially.
  CHECK(h2(tweq::testing::s3_sign_action()).invariant_factors().empty());
  CHECK(h2(trivial_action(build_symmetric(3), FiniteAbelianGroup({2, 2})))
            .invariant_factors() == Factors{2, 2});
  CHECK(h2(trivial(1, {5})).invariant_factors().empty());
}

TEST_CASE("h2 against the dense all-triples oracle") {
  // Unnormalized cochains and all |G|^3 identities, rank over F_p.
  std::vector<AbelianAction> cases{
      tweq::testing::s3_permutation_action(), tweq::testing::s3_sign_action(),
      trivial_action(build_symmetric(3), FiniteAbelianGroup({2, 2})),
      trivial_action(build_symmetric(3), FiniteAbelianGroup({3})),
      trivial(4, {2, 2}), trivial(6, {3}), inversion_action(3), inversion_action(5),
      trivial_action(FiniteAbelianGroup({2, 2}).as_group(), FiniteAbelianGroup({2}))};
  for (const auto& act : cases) {
    const int p = act.module.invariant_factors()[0];
    long long expected = 1;
    for (int i = 0, e = tweq::testing::dense_h2_log_order(act, p); i < e; ++i) expected *= p;
    CHECK(h2(act).order() == expected);
  }
}

TEST_CASE("inversion classes are indexed by order-2 elements") {
  for (int n : {4, 6, 8}) {
    const AbelianAction act = inversion_action(n);
    const CohomologyGroup h = h2_cyclic_norm(act);
    REQUIRE(h.invariant_factors() == Factors{2});
    // fixed points of inversion are {0, n/2}; the nontrivial class corresponds
    // to n/2, i.e. the cocycle with c(s,s) = n/2.
    CHECK(h.representatives()[0][3] == n / 2);
    CHECK(h2(act).classify(std::vector<int>{0, 0, 0, n / 2}) == std::vector<int>{1});
  }
}

TEST_CASE("h2 against brute-force cocycle counts") {
  // |Z^2| = |B^2| * |H^2| for every small case.
  std::vector<AbelianAction> cases{trivial(2, {2}), trivial(2, {4}), trivial(3, {3}),
                                   trivial(2, {2, 2}), inversion_action(4),
                                   inversion_action(3), trivial(3, {2}),
                                   trivial(4, {2}), cyclic_action(4, FiniteAbelianGroup({2}), {0, 1})};
  {
    FiniteAbelianGroup v({2, 2});
    cases.push_back(cyclic_action(2, v, {0, 2, 1, 3}));
    cases.push_back(trivial_action(FiniteAbelianGroup({2, 2}).as_group(), FiniteAbelianGroup({2})));
  }
  for (const auto& act : cases) {
    const auto counts = tweq::testing::brute_force_counts(act);
    const CohomologyGroup h = h2(act);
    CHECK(counts.cocycles == counts.coboundaries * h.order());
  }
}

TEST_CASE("h2 representatives and classify") {
  std::mt19937 rng(17);
  for (const AbelianAction& act :
       {tweq::testing::s3_sign_action(), trivial(4, {2, 4}), inversion_action(8),
        trivial_action(FiniteAbelianGroup({2, 2}).as_group(), FiniteAbelianGroup({2, 2}))}) {
    const CohomologyGroup h = h2(act);
    for (std::size_t i = 0; i < h.representatives().size(); ++i) {
      CHECK(is_cocycle2(h.representative2(i)).ok);
      std::vector<int> unit(h.invariant_factors().size(), 0);
      unit[i] = 1;
      CHECK(h.classify(h.representatives()[i]) == unit);
    }
    for (int t = 0; t < 15; ++t) {
      std::vector<int> coords;
      for (int d : h.invariant_factors()) coords.push_back(static_cast<int>(rng() % d));
      Cocycle2 c{act, h.combine(coords)};
      CHECK(h.classify(c) == coords);
      // invariant along coboundary orbits
      Cochain1 f{act, tweq::testing::random_cochain(act, rng)};
      CHECK(h.classify(add_coboundary(c, f)) == coords);
    }
  }
  // Klein four acting trivially on itself: H^2 = (Z/2)^3.
  CHECK(h2(trivial_action(FiniteAbelianGroup({2, 2}).as_group(), FiniteAbelianGroup({2})))
            .invariant_factors() == Factors{2, 2, 2});
  CHECK_THROWS_AS(h2(trivial(2, {2})).classify(std::vector<int>{0, 1, 0, 0}), Error);
}

TEST_CASE("h2 capacity") {
  CHECK_THROWS_AS(h2(trivial(25, {2})), Error);
  CHECK_THROWS_AS(h2(trivial(2, {128})), Error);
  try {
    h2(trivial(25, {2}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapacity);
  }
}

TEST_CASE("h2_cyclic_norm") {
  for (int n : {3, 5, 7}) CHECK(h2_cyclic_norm(trivial(2, {n})).invariant_factors().empty());
  for (int n : {2, 4, 6}) CHECK(h2_cyclic_norm(trivial(2, {n})).invariant_factors() == Factors{2});
  CHECK(h2_cyclic_norm(trivial(1, {6})).invariant_factors().empty());
  CHECK_THROWS_AS(h2_cyclic_norm(tweq::testing::s3_sign_action()), Error);
  // Representatives from the norm route classify consistently in both routes.
  const AbelianAction act = trivial(4, {2, 4});
  const CohomologyGroup a = h2(act);
  const CohomologyGroup b = h2_cyclic_norm(act);
  CHECK(a.invariant_factors() == b.invariant_factors());
  for (std::size_t i = 0; i < b.representatives().size(); ++i) {
    CHECK(is_cocycle2(b.representative2(i)).ok);
    std::vector<int> unit(b.invariant_factors().size(), 0);
    unit[i] = 1;
    CHECK(b.classify(b.representatives()[i]) == unit);
  }
}

TEST_CASE("h1") {
  // trivial action: Hom(Z/2, Z/4) = Z/2
  CHECK(h1(trivial(2, {4})).invariant_factors() == Factors{2});
  // inversion on Z/4: Z^1 has 4 maps, B^1 = {0,2}: Z/2
  CHECK(h1(inversion_action(4)).invariant_factors() == Factors{2});
  CHECK(h1(trivial(1, {4})).invariant_factors().empty());
  std::vector<AbelianAction> cases{trivial(2, {4}), inversion_action(4), inversion_action(5),
                                   trivial(6, {2, 6}), tweq::testing::s3_permutation_action(),
                                   tweq::testing::s3_sign_action(), trivial(4, {2, 2})};
  for (const auto& act : cases) {
    const CohomologyGroup h = h1(act);
    CHECK(h.order() == tweq::testing::brute_force_h1_order(act));
    for (std::size_t i = 0; i < h.representatives().size(); ++i) {
      CHECK(is_cocycle1(h.representative1(i)));
    }
  }
}
