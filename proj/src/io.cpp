#include "tweq/io.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "tweq/error.hpp"

namespace tweq::io {

namespace {

// nlohmann type errors on well-formed JSON are schema violations.
template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(what + ": " + e.what());
  }
}

std::vector<std::vector<int>> rows_of(const std::vector<int>& flat, int rows, int cols) {
  std::vector<std::vector<int>> out(rows, std::vector<int>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out[r][c] = flat[static_cast<std::size_t>(r) * cols + c];
  return out;
}

std::vector<int> flatten(const Json& rows, int expect_rows, int expect_cols,
                         const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != expect_rows)
    throw validation_error(what + " must have " + std::to_string(expect_rows) + " rows");
  std::vector<int> out;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != expect_cols)
      throw validation_error(what + " rows must have " + std::to_string(expect_cols) +
                             " entries");
    for (const auto& v : row) out.push_back(v.get<int>());
  }
  return out;
}

Json element_json(const FiniteAbelianGroup& a, int x) { return Json(a.coords(x)); }

int element_from(const FiniteAbelianGroup& a, const Json& v) {
  if (v.is_number_integer()) {
    const int x = v.get<int>();
    if (x < 0 || x >= a.order()) throw validation_error("module element out of range");
    return x;
  }
  const auto c = v.get<std::vector<int>>();
  if (static_cast<int>(c.size()) != a.rank())
    throw validation_error("module tuple has the wrong length");
  return a.index(c);
}

Json class_json(const LocalTypeClass& c) {
  Json j;
  j["id"] = c.id;
  j["representative"] = c.representative;
  if (c.mode == LocalTypeMode::kFinite) {
    j["orbit_size"] = c.orbit_size;
  } else {
    j["denominator"] = c.denominator;
  }
  j["description"] = describe(c);
  return j;
}

LocalTypeClass class_from(const Json& j, LocalTypeMode mode) {
  LocalTypeClass c;
  c.mode = mode;
  c.id = j.at("id").get<int>();
  c.representative = j.at("representative").get<std::vector<int>>();
  if (mode == LocalTypeMode::kFinite) c.orbit_size = j.at("orbit_size").get<long long>();
  else c.denominator = j.at("denominator").get<int>();
  return c;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw io_error(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                   e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  out << text;
  if (!out) throw io_error("write failed for " + path);
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["mul"] = rows_of(g.table(), g.order(), g.order());
  std::vector<std::string> labels;
  for (int x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  j["labels"] = labels;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  return guarded("group", [&]() -> FiniteGroup {
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      static const std::regex ref(R"((cyclic|symmetric|abelian)\(([\d,\s]*)\))");
      std::smatch m;
      if (s == "trivial") return FiniteGroup();
      if (!std::regex_match(s, m, ref)) throw validation_error("unknown group reference '" + s + "'");
      std::vector<int> args;
      std::stringstream ss(m[2].str());
      for (std::string part; std::getline(ss, part, ',');) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        if (part.size() > 6) throw validation_error("group reference argument too large");
        args.push_back(std::stoi(part));
      }
      if (m[1] == "abelian") return FiniteAbelianGroup(args).as_group();
      if (args.size() != 1) throw validation_error("'" + s + "' needs one argument");
      return m[1] == "cyclic" ? build_cyclic(args[0]) : build_symmetric(args[0]);
    }
    const int n = j.at("order").get<int>();
    if (n < 1) throw validation_error("group order must be positive");
    std::vector<int> mul = flatten(j.at("mul"), n, n, "mul");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup(n, std::move(mul), j.at("identity").get<int>(), std::move(labels));
  });
}

Json abelian_to_json(const FiniteAbelianGroup& a) {
  Json j;
  j["invariant_factors"] = a.invariant_factors();
  return j;
}

FiniteAbelianGroup abelian_from_json(const Json& j) {
  return guarded("module", [&] {
    if (j.is_array()) return FiniteAbelianGroup(j.get<std::vector<int>>());
    return FiniteAbelianGroup(j.at("invariant_factors").get<std::vector<int>>());
  });
}

std::vector<int> act_rows_from_json(const Json& rows, int actor_order, int module_order) {
  return guarded("act", [&] { return flatten(rows, actor_order, module_order, "act"); });
}

Json action_to_json(const AbelianAction& a) {
  Json j;
  j["actor"] = group_to_json(a.actor);
  j["module"] = abelian_to_json(a.module);
  j["act"] = rows_of(a.act, a.actor.order(), a.module.order());
  return j;
}

AbelianAction abelian_action_from_json(const Json& j) {
  return guarded("action", [&] {
    AbelianAction a;
    a.actor = group_from_json(j.at("actor"));
    a.module = abelian_from_json(j.at("module"));
    a.act = act_rows_from_json(j.at("act"), a.actor.order(), a.module.order());
    return a;
  });
}

Json action_to_json(const GroupAction& a) {
  Json j;
  j["actor"] = group_to_json(a.actor);
  j["module"] = group_to_json(a.module);
  j["act"] = rows_of(a.act, a.actor.order(), a.module.order());
  return j;
}

GroupAction group_action_from_json(const Json& j) {
  return guarded("action", [&] {
    GroupAction a;
    a.actor = group_from_json(j.at("actor"));
    a.module = group_from_json(j.at("module"));
    a.act = act_rows_from_json(j.at("act"), a.actor.order(), a.module.order());
    return a;
  });
}

Json cocycle_to_json(const Cocycle2& c) {
  Json j;
  const int n = c.base.actor.order();
  j["actor"] = group_to_json(c.base.actor);
  j["module"] = abelian_to_json(c.base.module);
  j["act"] = rows_of(c.base.act, n, c.base.module.order());
  Json table = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(element_json(c.base.module, c(a, b)));
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

Cocycle2 cocycle_from_json(const Json& j) {
  return guarded("cocycle", [&] {
    Cocycle2 c;
    c.base.actor = group_from_json(j.at("actor"));
    c.base.module = abelian_from_json(j.at("module"));
    const int n = c.base.actor.order();
    if (j.contains("act"))
      c.base.act = act_rows_from_json(j.at("act"), n, c.base.module.order());
    else
      c.base = trivial_action(c.base.actor, c.base.module);
    const Json& t = j.at("table");
    if (!t.is_array() || static_cast<int>(t.size()) != n)
      throw validation_error("cocycle table must have |actor| rows");
    for (const auto& row : t) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw validation_error("cocycle table rows must have |actor| entries");
      for (const auto& v : row) c.table.push_back(element_from(c.base.module, v));
    }
    return c;
  });
}

Json cochain_to_json(const Cochain1& f) {
  Json j;
  j["actor"] = group_to_json(f.base.actor);
  j["module"] = abelian_to_json(f.base.module);
  j["act"] = rows_of(f.base.act, f.base.actor.order(), f.base.module.order());
  Json map = Json::array();
  for (int v : f.map) map.push_back(element_json(f.base.module, v));
  j["map"] = map;
  return j;
}

Json cohomology_to_json(const CohomologyGroup& h) {
  Json j;
  j["degree"] = h.degree();
  j["invariant_factors"] = h.invariant_factors();
  j["order"] = h.order();
  Json reps = Json::array();
  for (std::size_t i = 0; i < h.representatives().size(); ++i) {
    Json r = h.degree() == 2 ? cocycle_to_json(h.representative2(i))
                             : cochain_to_json(h.representative1(i));
    // The base action is shared; keep only the table.
    reps.push_back(h.degree() == 2 ? r["table"] : r["map"]);
  }
  j["base"] = action_to_json(h.base());
  j["representatives"] = reps;
  return j;
}

CohomologySummary cohomology_from_json(const Json& j) {
  return guarded("cohomology", [&] {
    CohomologySummary s;
    s.degree = j.at("degree").get<int>();
    s.invariant_factors = j.at("invariant_factors").get<std::vector<int>>();
    const AbelianAction base = abelian_action_from_json(j.at("base"));
    for (const auto& r : j.at("representatives")) {
      std::vector<int> table;
      if (s.degree == 2) {
        for (const auto& row : r)
          for (const auto& v : row) table.push_back(element_from(base.module, v));
      } else {
        for (const auto& v : r) table.push_back(element_from(base.module, v));
      }
      s.representatives.push_back(std::move(table));
    }
    return s;
  });
}

Json twisted_data_to_json(const TwistedData& d) {
  Json j;
  j["gamma"] = group_to_json(d.gamma);
  j["g"] = group_to_json(d.g);
  j["theta"] = rows_of(d.theta.act, d.gamma.order(), d.g.order());
  j["c"] = rows_of(d.c, d.gamma.order(), d.gamma.order());
  return j;
}

TwistedData twisted_data_from_json(const Json& j) {
  return guarded("twisted group", [&] {
    TwistedData d;
    d.gamma = group_from_json(j.at("gamma"));
    d.g = group_from_json(j.at("g"));
    d.theta.actor = d.gamma;
    d.theta.module = d.g;
    if (j.contains("theta"))
      d.theta.act = act_rows_from_json(j.at("theta"), d.gamma.order(), d.g.order());
    else
      d.theta = trivial_action(d.gamma, d.g);
    if (j.contains("c")) {
      d.c = flatten(j.at("c"), d.gamma.order(), d.gamma.order(), "c");
    } else {
      d.c.assign(static_cast<std::size_t>(d.gamma.order()) * d.gamma.order(), d.g.identity());
    }
    return d;
  });
}

Json local_types_to_json(const std::vector<LocalTypeClass>& classes, LocalTypeMode mode) {
  Json j;
  j["mode"] = mode == LocalTypeMode::kFinite ? "finite" : "sl";
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(class_json(c));
  j["classes"] = arr;
  return j;
}

std::vector<LocalTypeClass> local_types_from_json(const Json& j) {
  return guarded("local types", [&] {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "finite" && mode != "sl") throw validation_error("mode must be finite or sl");
    std::vector<LocalTypeClass> out;
    for (const auto& c : j.at("classes"))
      out.push_back(class_from(c, mode == "sl" ? LocalTypeMode::kSl : LocalTypeMode::kFinite));
    return out;
  });
}

Json structure_group_to_json(const StructureGroupData& d) {
  Json j;
  j["name"] = d.name;
  j["center"] = d.center.invariant_factors();
  j["out"] = group_to_json(d.out);
  j["out_on_center"] = rows_of(d.out_on_center.act, d.out.order(), d.center.order());
  j["source"] = d.source;
  return j;
}

StructureGroupData structure_group_from_json(const Json& j) {
  return guarded("structure group", [&] {
    StructureGroupData d;
    d.name = j.at("name").get<std::string>();
    d.center = FiniteAbelianGroup(j.at("center").get<std::vector<int>>());
    d.out = group_from_json(j.at("out"));
    const Json& act = j.at("out_on_center");
    const Json& rows = act.is_object() ? act.at("act") : act;
    d.out_on_center = AbelianAction{d.out, d.center,
                                    act_rows_from_json(rows, d.out.order(), d.center.order())};
    d.source = j.value("source", std::string("user"));
    return d;
  });
}

Json surface_action_to_json(const SurfaceAction& sa) {
  Json j;
  j["genus"] = sa.genus;
  j["group"] = group_to_json(sa.group);
  j["quotient_genus"] = sa.quotient_genus;
  Json branch = Json::array();
  for (const auto& [id, m] : sa.branch) branch.push_back({id, m});
  j["branch"] = branch;
  j["boundary_images"] = sa.boundary_images;
  if (!sa.kernel.empty()) j["kernel"] = sa.kernel;
  return j;
}

SurfaceAction surface_action_from_json(const Json& j) {
  return guarded("surface action", [&] {
    SurfaceAction sa;
    sa.genus = j.at("genus").get<int>();
    sa.group = group_from_json(j.at("group"));
    sa.quotient_genus = j.at("quotient_genus").get<int>();
    for (const auto& b : j.at("branch")) {
      if (!b.is_array() || b.size() != 2) throw validation_error("branch entries are [id, m]");
      sa.branch.emplace_back(b[0].get<int>(), b[1].get<int>());
    }
    sa.boundary_images = j.at("boundary_images").get<std::vector<int>>();
    if (j.contains("kernel")) sa.kernel = j.at("kernel").get<std::vector<int>>();
    return sa;
  });
}

Json presentation_to_json(const EquivariantPresentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["relators"] = p.relators;
  j["target"] = group_to_json(p.target);
  j["epi"] = p.epi;
  j["orbifold_generators"] = p.orbifold_generators;
  return j;
}

EquivariantPresentation presentation_from_json(const Json& j) {
  return guarded("presentation", [&] {
    EquivariantPresentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    p.relators = j.at("relators").get<std::vector<Word>>();
    p.target = group_from_json(j.at("target"));
    p.epi = j.at("epi").get<std::vector<int>>();
    p.orbifold_generators = j.value("orbifold_generators", static_cast<int>(p.generators.size()));
    const int n = static_cast<int>(p.generators.size());
    if (static_cast<int>(p.epi.size()) != n)
      throw validation_error("epi must have one entry per generator");
    for (int x : p.epi)
      if (x < 0 || x >= p.target.order()) throw validation_error("epi value out of range");
    for (const Word& w : p.relators)
      for (int l : w)
        if (l == 0 || std::abs(l) > n) throw validation_error("relator letter out of range");
    return p;
  });
}

Json report_to_json(const ClassificationReport& r, const SurfaceAction& surface) {
  Json input;
  input["structure"] = r.structure;
  input["gamma_order"] = r.gamma_order;
  input["a"] = r.a_map;
  input["chi"] = r.chi;
  input["surface"] = surface_action_to_json(surface);

  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json jb;
    jb["coords"] = b.coords;
    jb["cocycle"] = b.cocycle;
    Json branches = Json::array();
    for (const auto& br : b.branches) {
      Json x;
      x["branch_id"] = br.branch_id;
      x["isotropy"] = br.isotropy;
      x["generator"] = br.generator;
      x["resolved"] = br.resolved;
      if (br.central_charge >= 0) x["central_charge"] = br.central_charge;
      if (br.resolved) {
        const LocalTypeMode mode =
            br.central_charge >= 0 ? LocalTypeMode::kSl : LocalTypeMode::kFinite;
        x["local_types"] = local_types_to_json(br.classes, mode);
      }
      branches.push_back(x);
    }
    jb["branches"] = branches;
    jb["label_count"] = b.label_count;
    blocks.push_back(jb);
  }
  Json h2;
  h2["invariant_factors"] = r.h2_factors;
  h2["blocks"] = blocks;

  Json labels = Json::array();
  for (const auto& l : r.labels) {
    Json x;
    x["c_class"] = l.c_class;
    x["local_types"] = l.local_types;
    x["theta_class"] = l.theta_class;
    labels.push_back(x);
  }
  Json j;
  j["input"] = input;
  j["h2"] = h2;
  j["theta_classes"] = r.theta_classes;
  j["label_count"] = r.label_count;
  j["labels"] = labels;
  j["caveats"] = r.caveats;
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    ClassificationReport r;
    const Json& input = j.at("input");
    r.structure = input.at("structure").get<std::string>();
    r.gamma_order = input.at("gamma_order").get<int>();
    r.a_map = input.at("a").get<std::vector<int>>();
    r.chi = input.at("chi").get<std::vector<int>>();
    r.h2_factors = j.at("h2").at("invariant_factors").get<std::vector<int>>();
    for (const auto& jb : j.at("h2").at("blocks")) {
      CClassBlock b;
      b.coords = jb.at("coords").get<std::vector<int>>();
      b.cocycle = jb.at("cocycle").get<std::vector<int>>();
      b.label_count = jb.at("label_count").get<long long>();
      for (const auto& x : jb.at("branches")) {
        BranchLocalTypes br;
        br.branch_id = x.at("branch_id").get<int>();
        br.isotropy = x.at("isotropy").get<std::vector<int>>();
        br.generator = x.at("generator").get<int>();
        br.resolved = x.at("resolved").get<bool>();
        br.central_charge = x.value("central_charge", -1);
        if (br.resolved) br.classes = local_types_from_json(x.at("local_types"));
        b.branches.push_back(std::move(br));
      }
      r.blocks.push_back(std::move(b));
    }
    r.theta_classes = j.at("theta_classes").get<std::vector<std::string>>();
    r.label_count = j.at("label_count").get<long long>();
    for (const auto& x : j.at("labels"))
      r.labels.push_back({x.at("c_class").get<std::vector<int>>(),
                          x.at("local_types").get<std::vector<int>>(),
                          x.at("theta_class").get<std::string>()});
    r.caveats = j.at("caveats").get<std::vector<std::string>>();
    return r;
  });
}

Json rep_count_to_json(const RepCount& r) {
  Json j;
  j["count"] = r.count;
  if (!r.classes.empty()) {
    Json arr = Json::array();
    for (const auto& c : r.classes) {
      Json x;
      x["representative"] = c.representative;
      x["size"] = c.size;
      arr.push_back(x);
    }
    j["classes"] = arr;
  }
  return j;
}

RepCount rep_count_from_json(const Json& j) {
  return guarded("representation count", [&] {
    RepCount r;
    r.count = j.at("count").get<long long>();
    if (j.contains("classes"))
      for (const auto& x : j.at("classes"))
        r.classes.push_back({x.at("representative").get<std::vector<int>>(),
                             x.at("size").get<long long>()});
    return r;
  });
}

Json examples_to_json(const std::vector<ExampleRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json x;
    x["source"] = row.source;
    x["description"] = row.description;
    x["expected"] = row.expected;
    x["computed"] = row.computed;
    x["match"] = row.match;
    arr.push_back(x);
  }
  Json j;
  j["rows"] = arr;
  return j;
}

}  // namespace tweq::io
