#include "tweq/lie_data.hpp"

#include <algorithm>
#include <optional>
#include <regex>

#include "tweq/error.hpp"

namespace tweq {

namespace {

StructureGroupData make_entry(const std::string& name, FiniteAbelianGroup center,
                              FiniteGroup out, std::vector<int> act) {
  AbelianAction a{out, center, std::move(act)};
  return StructureGroupData{name, std::move(center), std::move(out), std::move(a),
                            "builtin"};
}

StructureGroupData inversion_entry(const std::string& name, int n) {
  FiniteAbelianGroup z({n});
  std::vector<int> act(2 * n);
  for (int x = 0; x < n; ++x) {
    act[x] = x;
    act[n + x] = z.neg(x);
  }
  return make_entry(name, z, build_cyclic(2), std::move(act));
}

StructureGroupData spin8() {
  // S3 permutes the three involutions (1,0), (0,1), (1,1) of Z/2 x Z/2,
  // which have indices 1, 2, 3. Permutation [p0,p1,p2] sends i+1 to p_i+1.
  FiniteGroup s3 = build_symmetric(3);
  FiniteAbelianGroup z({2, 2});
  std::vector<int> act(24);
  std::vector<int> p{0, 1, 2};
  int g = 0;
  do {
    act[g * 4] = 0;
    for (int i = 0; i < 3; ++i) act[g * 4 + i + 1] = p[i] + 1;
    ++g;
  } while (std::next_permutation(p.begin(), p.end()));
  return make_entry("Spin8", z, s3, std::move(act));
}

std::optional<StructureGroupData> builtin(const std::string& name) {
  if (name == "SL2") return make_entry("SL2", FiniteAbelianGroup({2}), FiniteGroup(), {0, 1});
  if (name == "Spin8") return spin8();
  if (name == "E6") return inversion_entry("E6", 3);
  static const std::regex sln(R"(SLn\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, sln)) {
    const std::string digits = m[1].str();
    if (digits.size() > 4) throw lookup_error("rank in '" + name + "' is too large");
    const int n = std::stoi(digits);
    if (n == 2)
      throw lookup_error("SLn(2) is not in the SLn family (Out is trivial); use SL2");
    if (n < 2) throw lookup_error("SLn(n) needs n > 2, got '" + name + "'");
    return inversion_entry(name, n);
  }
  return std::nullopt;
}

bool builtin_name(const std::string& name) {
  static const std::regex sln(R"(SLn\(\d+\))");
  return name == "SL2" || name == "Spin8" || name == "E6" ||
         std::regex_match(name, sln);
}

}  // namespace

StructureGroupData LieRegistry::lookup(const std::string& name) const {
  if (auto b = builtin(name)) return *b;
  auto it = user_.find(name);
  if (it != user_.end()) return it->second;
  std::string list;
  for (const auto& n : names()) list += (list.empty() ? "" : ", ") + n;
  throw lookup_error("unknown structure group '" + name + "'; registered: " + list);
}

void LieRegistry::add(StructureGroupData data) {
  if (data.name.empty()) throw invalid_parameter("structure group needs a name");
  if (builtin_name(data.name) || user_.count(data.name))
    throw invalid_parameter("structure group '" + data.name + "' is already registered");
  if (!(data.out_on_center.actor == data.out) ||
      !(data.out_on_center.module == data.center))
    throw invalid_parameter("out_on_center must be Out acting on the center");
  const ValidationReport rep = validate_action(data.out_on_center);
  if (!rep) throw invalid_parameter("out_on_center: " + rep.message);
  data.source = "user";
  user_.emplace(data.name, std::move(data));
}

std::vector<std::string> LieRegistry::names() const {
  std::vector<std::string> out{"SL2", "SLn(n) for n > 2", "Spin8", "E6"};
  for (const auto& [n, d] : user_) out.push_back(n);
  return out;
}

StructureGroupData lookup_structure_group(const std::string& name) {
  return LieRegistry().lookup(name);
}

AbelianAction center_action(const StructureGroupData& data, const GroupHom& a) {
  if (!(a.target == data.out))
    throw invalid_parameter("homomorphism target is not Out(" + data.name + ")");
  a.validate();
  const int z = data.center.order();
  AbelianAction out{a.source, data.center,
                    std::vector<int>(static_cast<std::size_t>(a.source.order()) * z)};
  for (int g = 0; g < a.source.order(); ++g)
    for (int x = 0; x < z; ++x) out.act[g * z + x] = data.out_on_center(a(g), x);
  return out;
}

}  // namespace tweq
