// Command-line front end. Exit codes: 0 success, 1 validation, 2 capacity,
// 3 I/O.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <unistd.h>

#include "CLI11.hpp"
#include "tweq/classifier.hpp"
#include "tweq/error.hpp"
#include "tweq/io.hpp"

using namespace tweq;
using io::Json;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCapacity:
      return 2;
    case ErrorKind::kIo:
      return 3;
    default:
      return 1;
  }
}

// Inline JSON text or a path to a JSON file.
Json json_arg(const std::string& value, const std::string& what) {
  if (std::filesystem::is_regular_file(value)) return io::read_json_file(value);
  return io::parse_json(value, what);
}

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

struct Options {
  std::string output = "-";
  std::string action, spec, structure, theta, gamma, a, chi, surface, presentation,
      twisted;
  int degree = 2;
  bool cyclic_norm = false;
  bool classes = false;
  int threads = 1;
  int max_actor_order = 24;
  int max_module_order = 64;
  long long max_labels = 100'000;
  long long max_search = 100'000'000;
  long long max_candidates = 10'000'000;
};

int run_cohomology(const Options& o) {
  const AbelianAction action = io::abelian_action_from_json(io::read_json_file(o.action));
  CohomologyLimits limits;
  limits.max_actor_order = o.max_actor_order;
  limits.max_module_order = o.max_module_order;
  if (o.cyclic_norm && o.degree != 2)
    throw invalid_parameter("--cyclic-norm computes degree 2 only");
  const CohomologyGroup h = o.cyclic_norm ? h2_cyclic_norm(action)
                            : o.degree == 1 ? h1(action, limits)
                                            : h2(action, limits);
  io::write_json(io::cohomology_to_json(h), o.output);
  return 0;
}

int run_twisted_group(const Options& o) {
  const TwistedData d = io::twisted_data_from_json(io::read_json_file(o.spec));
  Json out;
  try {
    const TwistedGroup e = build_twisted_group(d);
    out["valid"] = true;
    out["group"] = io::group_to_json(e.derived());
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kInvalidParameter) throw;
    out["valid"] = false;
    out["error"] = err.what();
    io::write_json(out, o.output);
    std::cerr << err.what() << "\n";
    return 1;
  }
  io::write_json(out, o.output);
  return 0;
}

int run_local_types(const Options& o) {
  const Json spec = io::read_json_file(o.spec);
  const std::string mode = spec.value("mode", std::string("finite"));
  if (mode == "sl") {
    const auto classes =
        sl_local_types(spec.at("n").get<int>(), spec.at("m").get<int>(),
                       spec.value("central_charge", 0), spec.value("inner", true));
    io::write_json(io::local_types_to_json(classes, LocalTypeMode::kSl), o.output);
  } else if (mode == "finite") {
    const auto classes = h1_twisted(io::twisted_data_from_json(spec), o.max_candidates);
    io::write_json(io::local_types_to_json(classes, LocalTypeMode::kFinite), o.output);
  } else {
    throw validation_error("mode must be finite or sl");
  }
  return 0;
}

int run_classify(const Options& o) {
  ClassifierInput in;
  in.max_labels = o.max_labels;
  in.surface = io::surface_action_from_json(io::read_json_file(o.surface));
  const FiniteGroup gamma =
      o.gamma.empty() ? in.surface.group : io::group_from_json(json_arg(o.gamma, "--gamma"));
  if (!o.structure.empty()) {
    LieRegistry registry;
    std::string name = o.structure;
    if (std::filesystem::is_regular_file(o.structure)) {
      StructureGroupData d = io::structure_group_from_json(io::read_json_file(o.structure));
      name = d.name;
      registry.add(std::move(d));
    }
    in.structure = registry.lookup(name);
    GroupHom a{gamma, in.structure->out, {}};
    if (o.a.empty()) a = trivial_hom(gamma, in.structure->out);
    else a.map = json_arg(o.a, "--a").get<std::vector<int>>();
    if (static_cast<int>(a.map.size()) != gamma.order())
      throw validation_error("--a must list one Out element per element of Gamma");
    for (int x : a.map)
      if (x < 0 || x >= a.target.order()) throw validation_error("--a value out of range");
    in.a = a;
  } else if (!o.theta.empty()) {
    in.finite_theta = io::group_action_from_json(io::read_json_file(o.theta));
  } else {
    throw invalid_parameter("classify needs --structure or --theta");
  }
  if (!o.chi.empty()) in.chi = json_arg(o.chi, "--chi").get<std::vector<int>>();
  const ClassificationReport r = enumerate_labels(in);
  io::write_json(io::report_to_json(r, in.surface), o.output);
  return 0;
}

int run_reps(const Options& o) {
  const Json pj = io::read_json_file(o.presentation);
  const EquivariantPresentation pres =
      pj.contains("relators") ? io::presentation_from_json(pj)
                              : presentation(io::surface_action_from_json(pj));
  const TwistedGroup e = build_twisted_group(io::twisted_data_from_json(io::read_json_file(o.twisted)));
  RepCountOptions opt;
  opt.threads = o.threads;
  opt.classes = o.classes;
  opt.max_search = o.max_search;
  io::write_json(io::rep_count_to_json(count_twisted_reps(pres, e, opt)), o.output);
  return 0;
}

std::string list_text(const std::vector<int>& f) { return factors_text(f); }

int run_examples(const Options& o, bool output_given) {
  const auto rows = reproduce_examples();
  bool all = true;
  for (const auto& r : rows) all &= r.match;
  if (output_given) {
    io::write_json(io::examples_to_json(rows), o.output);
    if (o.output == "-") return all ? 0 : 1;
  }
  const bool color = use_color();
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  for (const auto& r : rows) {
    const bool counted = r.description.find("classes") != std::string::npos ||
                         r.description.find("labels") != std::string::npos;
    const std::string exp = counted ? std::to_string(r.expected.at(0)) : list_text(r.expected);
    const std::string got = counted ? std::to_string(r.computed.at(0)) : list_text(r.computed);
    std::printf("%s%-5s%s %-34s %-68s expected %-8s computed %s\n", r.match ? green : red,
                r.match ? "ok" : "FAIL", reset, r.source.c_str(), r.description.c_str(),
                exp.c_str(), got.c_str());
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted equivariant structures: cohomology, local types, labels"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  std::uint64_t seed = 0x5eed;
  app.add_option("--seed", seed, "seed for sampled associativity checks on large groups");

  auto out_opt = [&](CLI::App* sub) {
    return sub->add_option("--output,-o", o.output, "output path, - for stdout");
  };

  auto* coh = app.add_subcommand("cohomology", "H^1 or H^2 of an abelian action");
  coh->add_option("--action", o.action, "action.json")->required();
  coh->add_option("--degree", o.degree)->check(CLI::IsMember({1, 2}));
  coh->add_flag("--cyclic-norm", o.cyclic_norm, "fixed points modulo norms (cyclic actor)");
  coh->add_option("--max-actor-order", o.max_actor_order)->check(CLI::PositiveNumber);
  coh->add_option("--max-module-order", o.max_module_order)->check(CLI::PositiveNumber);
  out_opt(coh);

  auto* tg = app.add_subcommand("twisted-group", "build the twisted group G x_c Gamma");
  tg->add_option("--spec", o.spec, "twisted_group.json")->required();
  out_opt(tg);

  auto* lt = app.add_subcommand("local-types", "classes of twisted 1-cocycles");
  lt->add_option("--spec", o.spec, "local-types spec")->required();
  lt->add_option("--max-candidates", o.max_candidates)->check(CLI::PositiveNumber);
  out_opt(lt);

  auto* cl = app.add_subcommand("classify", "fixed-point component labels");
  auto* st = cl->add_option("--structure", o.structure, "registry name or structure_group.json");
  auto* th = cl->add_option("--theta", o.theta, "finite G: action.json of Gamma on G");
  st->excludes(th);
  cl->add_option("--gamma", o.gamma, "group JSON, reference or file (default: surface group)");
  cl->add_option("--a", o.a, "a: Gamma -> Out as a JSON list or file");
  cl->add_option("--chi", o.chi, "character values mod exp(Gamma) as a JSON list");
  cl->add_option("--surface", o.surface, "surface_action.json")->required();
  cl->add_option("--max-labels", o.max_labels)->check(CLI::PositiveNumber);
  out_opt(cl);

  auto* rp = app.add_subcommand("reps", "count twisted equivariant representations");
  rp->add_option("--presentation", o.presentation, "presentation or surface_action JSON")
      ->required();
  rp->add_option("--twisted-group", o.twisted, "twisted_group.json")
      ->required();
  rp->add_flag("--classes", o.classes, "also list conjugation classes");
  rp->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  rp->add_option("--max-search", o.max_search)->check(CLI::PositiveNumber);
  out_opt(rp);

  auto* ex = app.add_subcommand("examples", "reproduce the reference value table");
  auto* ex_out = out_opt(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  FiniteGroup::set_sampling_seed(seed);
  try {
    if (*coh) return run_cohomology(o);
    if (*tg) return run_twisted_group(o);
    if (*lt) return run_local_types(o);
    if (*cl) return run_classify(o);
    if (*rp) return run_reps(o);
    if (*ex) return run_examples(o, ex_out->count() > 0);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
