#include "doctest.h"
#include "tweq/error.hpp"
#include "tweq/orbifold.hpp"

using namespace tweq;

namespace {

bool mentions(const SurfaceReport& rep, const std::string& needle) {
  for (const auto& v : rep.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

void check_relators(const EquivariantPresentation& p) {
  for (const Word& w : p.relators) CHECK(evaluate(p.target, p.epi, w) == p.target.identity());
  CHECK(static_cast<int>(p.target.generated_subgroup(p.epi).size()) == p.target.order());
}

SurfaceAction free_z2(int h) {
  SurfaceAction sa;
  sa.group = build_cyclic(2);
  sa.quotient_genus = h;
  sa.genus = 2 * h - 1;  // 2g - 2 = 2(2h - 2)
  sa.boundary_images.assign(2 * h, 0);
  sa.boundary_images[0] = 1;
  return sa;
}

// S3 on the sphere with branch orders (2, 2, 3).
SurfaceAction s3_on_sphere() {
  const FiniteGroup s3 = build_symmetric(3);
  SurfaceAction sa;
  sa.group = s3;
  sa.genus = 0;
  sa.branch = {{1, 2}, {2, 2}, {3, 3}};
  sa.boundary_images = {1, 2, s3.inverse(s3.mul(1, 2))};
  return sa;
}

}  // namespace

TEST_CASE("hyperelliptic data and Riemann-Hurwitz") {
  for (int g = 2; g <= 10; ++g) {
    CHECK(validate_surface_action(hyperelliptic_action(g)).ok);
    for (int r : {2 * g, 2 * g + 1, 2 * g + 3, 2 * g + 4}) {
      const SurfaceReport rep = validate_surface_action(hyperelliptic_action(g, r));
      CHECK_FALSE(rep.ok);
      CHECK(mentions(rep, "Riemann-Hurwitz"));
    }
  }
}

TEST_CASE("violations are named") {
  SurfaceAction sa = hyperelliptic_action(2);
  sa.boundary_images[3] = 0;
  const SurfaceReport rep = validate_surface_action(sa);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep, "x_4"));
  CHECK(mentions(rep, "long relation"));
  CHECK_THROWS_AS(presentation(sa), Error);

  SurfaceAction s = s3_on_sphere();
  s.kernel = {0, 1};
  CHECK(mentions(validate_surface_action(s), "normal"));

  SurfaceAction short_images = hyperelliptic_action(1);
  short_images.boundary_images.pop_back();
  CHECK(mentions(validate_surface_action(short_images), "boundary_images"));

  SurfaceAction not_generating = free_z2(2);
  not_generating.boundary_images[0] = 0;
  CHECK(mentions(validate_surface_action(not_generating), "generate"));
}

TEST_CASE("free actions") {
  for (int h = 1; h <= 3; ++h) {
    const SurfaceAction sa = free_z2(h);
    REQUIRE(validate_surface_action(sa).ok);
    const auto p = presentation(sa);
    CHECK(p.generators.size() == static_cast<std::size_t>(2 * h));
    CHECK(p.relators.size() == 1);
    check_relators(p);
    CHECK(abelianization(p) == std::vector<long long>(2 * h, 0));
    CHECK(isotropy_classes(sa).empty());
  }
}

TEST_CASE("trivial group gives the surface group") {
  for (int g = 0; g <= 3; ++g) {
    const auto p = presentation(trivial_surface_action(g));
    CHECK(p.generators.size() == static_cast<std::size_t>(2 * g));
    for (int x : p.epi) CHECK(x == 0);
    CHECK(abelianization(p) == std::vector<long long>(2 * g, 0));
  }
}

TEST_CASE("hyperelliptic presentation") {
  for (int g = 1; g <= 5; ++g) {
    const auto p = presentation(hyperelliptic_action(g));
    CHECK(p.generators.size() == static_cast<std::size_t>(2 * g + 2));
    CHECK(p.relators.size() == static_cast<std::size_t>(2 * g + 3));
    check_relators(p);
    CHECK(abelianization(p) == std::vector<long long>(2 * g + 1, 2));
    const auto iso = isotropy_classes(hyperelliptic_action(g));
    CHECK(iso.size() == static_cast<std::size_t>(2 * g + 2));
    for (const auto& c : iso) {
      CHECK(c.subgroup == std::vector<int>{0, 1});
      CHECK(c.generator == 1);
    }
  }
}

TEST_CASE("trigonal and S3 data") {
  // Z/3 on genus g with quotient the sphere has g + 2 branch points.
  SurfaceAction tri;
  tri.group = build_cyclic(3);
  tri.genus = 1;
  tri.branch = {{1, 3}, {2, 3}, {3, 3}};
  tri.boundary_images = {1, 1, 1};
  CHECK(validate_surface_action(tri).ok);
  check_relators(presentation(tri));
  tri.boundary_images = {1, 1, 2};
  CHECK(mentions(validate_surface_action(tri), "long relation"));

  const SurfaceAction s = s3_on_sphere();
  REQUIRE(validate_surface_action(s).ok);
  check_relators(presentation(s));
  const auto iso = isotropy_classes(s);
  CHECK(iso[2].subgroup.size() == 3);
  CHECK(iso[0].subgroup.size() == 2);
}

TEST_CASE("non-faithful actions") {
  // Z/6 acting through Z/3 on a genus-1 trigonal curve; kernel {0, 3}.
  SurfaceAction sa;
  sa.group = build_cyclic(6);
  sa.genus = 1;
  sa.branch = {{1, 3}, {2, 3}, {3, 3}};
  sa.boundary_images = {2, 2, 2};
  sa.kernel = {0, 3};
  REQUIRE(validate_surface_action(sa).ok);
  const auto p = presentation(sa);
  CHECK(p.orbifold_generators == 3);
  CHECK(p.generators.size() == 4);
  check_relators(p);
  for (const auto& c : isotropy_classes(sa)) CHECK(c.subgroup.size() == 6);

  // Genus must be computed with |Gamma/K| = 3, not 6.
  sa.genus = 2;
  CHECK(mentions(validate_surface_action(sa), "Riemann-Hurwitz"));
}
