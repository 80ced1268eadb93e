#ifndef TWEQ_LIE_DATA_HPP_
#define TWEQ_LIE_DATA_HPP_

#include <map>
#include <string>
#include <vector>

#include "tweq/groups.hpp"

namespace tweq {

// Center Z of a structure group G, its outer automorphism group, and the
// action of Out(G) on Z.
struct StructureGroupData {
  std::string name;
  FiniteAbelianGroup center;
  FiniteGroup out;
  AbelianAction out_on_center;
  std::string source;  // "builtin" or "user"
};

// Built-in entries are SL2, SLn(n) for n > 2, Spin8 and E6. User entries are
// added before any lookups are shared across threads.
class LieRegistry {
 public:
  LieRegistry() = default;

  // Throws kLookup for unknown names, listing what is registered.
  StructureGroupData lookup(const std::string& name) const;
  // Throws kInvalidParameter when the action is invalid or the name clashes
  // with a built-in family or an earlier user entry.
  void add(StructureGroupData data);
  std::vector<std::string> names() const;

 private:
  std::map<std::string, StructureGroupData> user_;
};

StructureGroupData lookup_structure_group(const std::string& name);

// Gamma acting on Z through a: Gamma -> Out(G).
AbelianAction center_action(const StructureGroupData& data, const GroupHom& a);

}  // namespace tweq

#endif  // TWEQ_LIE_DATA_HPP_
