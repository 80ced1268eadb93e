#include "doctest.h"
#include "test_util.hpp"
#include "tweq/error.hpp"
#include "tweq/io.hpp"

using namespace tweq;
using io::Json;

TEST_CASE("group round trip and references") {
  for (const FiniteGroup& g : {build_cyclic(5), build_symmetric(3), FiniteGroup()}) {
    const Json j = io::group_to_json(g);
    CHECK(io::group_from_json(j) == g);
    CHECK(io::group_to_json(io::group_from_json(j)) == j);
  }
  CHECK(io::group_from_json(Json("cyclic(4)")) == build_cyclic(4));
  CHECK(io::group_from_json(Json("symmetric(3)")) == build_symmetric(3));
  CHECK(io::group_from_json(Json("abelian(2, 2)")).order() == 4);
  CHECK(io::group_from_json(Json("trivial")).order() == 1);
  CHECK_THROWS_AS(io::group_from_json(Json("dihedral(4)")), Error);
  // Broken table is a validation failure, not an I/O failure.
  Json bad = io::group_to_json(build_cyclic(3));
  bad["mul"][1][1] = 1;
  try {
    io::group_from_json(bad);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidParameter);
  }
  Json missing = io::group_to_json(build_cyclic(3));
  missing.erase("mul");
  try {
    io::group_from_json(missing);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kValidation);
  }
}

TEST_CASE("malformed JSON reports the position") {
  try {
    io::parse_json("{\"order\": 3,, }", "inline");
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), Error);
}

TEST_CASE("actions, cocycles and cohomology round trip") {
  const AbelianAction a = testing::inversion_action(6);
  const Json ja = io::action_to_json(a);
  const AbelianAction back = io::abelian_action_from_json(ja);
  CHECK(back.act == a.act);
  CHECK(back.module == a.module);
  CHECK(io::action_to_json(back) == ja);

  const CohomologyGroup h = h2(a);
  const Json jh = io::cohomology_to_json(h);
  const auto s = io::cohomology_from_json(jh);
  CHECK(s.invariant_factors == h.invariant_factors());
  CHECK(s.representatives == h.representatives());

  const Cocycle2 c = h.representative2(0);
  const Json jc = io::cocycle_to_json(c);
  const Cocycle2 c2 = io::cocycle_from_json(jc);
  CHECK(c2.table == c.table);
  CHECK(io::cocycle_to_json(c2) == jc);

  const CohomologyGroup h1g = h1(testing::s3_permutation_action());
  const auto s1 = io::cohomology_from_json(io::cohomology_to_json(h1g));
  CHECK(s1.representatives == h1g.representatives());
}

TEST_CASE("twisted data, local types and structure groups round trip") {
  TwistedData d = untwisted_data(build_cyclic(2), build_cyclic(4),
                                 GroupAction{build_cyclic(2), build_cyclic(4),
                                             {0, 1, 2, 3, 0, 3, 2, 1}});
  d.c[3] = 2;
  const Json jd = io::twisted_data_to_json(d);
  const TwistedData d2 = io::twisted_data_from_json(jd);
  CHECK(d2.c == d.c);
  CHECK(d2.theta.act == d.theta.act);
  CHECK(io::twisted_data_to_json(d2) == jd);

  const auto fin = h1_twisted(d);
  const Json jf = io::local_types_to_json(fin, LocalTypeMode::kFinite);
  CHECK(io::local_types_to_json(io::local_types_from_json(jf), LocalTypeMode::kFinite) == jf);
  const auto sl = sl_local_types(3, 2, 0);
  const Json js = io::local_types_to_json(sl, LocalTypeMode::kSl);
  CHECK(js["mode"] == "sl");
  CHECK(io::local_types_to_json(io::local_types_from_json(js), LocalTypeMode::kSl) == js);

  const auto spin = lookup_structure_group("Spin8");
  const Json jsg = io::structure_group_to_json(spin);
  const auto spin2 = io::structure_group_from_json(jsg);
  CHECK(spin2.out_on_center.act == spin.out_on_center.act);
  CHECK(io::structure_group_to_json(spin2) == jsg);
}

TEST_CASE("surface actions, presentations and reports round trip") {
  SurfaceAction sa = hyperelliptic_action(2);
  const Json js = io::surface_action_to_json(sa);
  const SurfaceAction sb = io::surface_action_from_json(js);
  CHECK(io::surface_action_to_json(sb) == js);

  const auto p = presentation(sa);
  const Json jp = io::presentation_to_json(p);
  CHECK(io::presentation_to_json(io::presentation_from_json(jp)) == jp);

  const auto sl2 = lookup_structure_group("SL2");
  ClassifierInput in;
  in.structure = sl2;
  in.a = trivial_hom(build_cyclic(2), sl2.out);
  in.surface = hyperelliptic_action(1);
  const auto r = enumerate_labels(in);
  const Json jr = io::report_to_json(r, in.surface);
  CHECK(io::report_to_json(io::report_from_json(jr), in.surface) == jr);

  RepCount rc{12, {{{1, 2}, 3}, {{4, 5}, 9}}};
  const Json jc = io::rep_count_to_json(rc);
  CHECK(io::rep_count_to_json(io::rep_count_from_json(jc)) == jc);
}
