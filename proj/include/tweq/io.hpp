#ifndef TWEQ_IO_HPP_
#define TWEQ_IO_HPP_

#include <string>

#include "json.hpp"
#include "tweq/classifier.hpp"
#include "tweq/cohomology.hpp"
#include "tweq/lie_data.hpp"
#include "tweq/orbifold.hpp"
#include "tweq/twisted.hpp"

namespace tweq::io {

using Json = nlohmann::ordered_json;

// Reads a file and parses it; parse failures become kIo errors carrying the
// byte position.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& origin);
// Writes `j` (indented, trailing newline) to `path`, or to stdout for "-".
void write_json(const Json& j, const std::string& path);

// A group is either a table object {"order", "identity", "mul", "labels"} or
// a reference string: "trivial", "cyclic(n)", "symmetric(n)",
// "abelian(d1,...,dk)".
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json abelian_to_json(const FiniteAbelianGroup& a);
FiniteAbelianGroup abelian_from_json(const Json& j);

// {"actor", "module", "act": [[...]]}; the abelian form has a module
// {"invariant_factors": [...]}.
Json action_to_json(const AbelianAction& a);
AbelianAction abelian_action_from_json(const Json& j);
Json action_to_json(const GroupAction& a);
GroupAction group_action_from_json(const Json& j);
std::vector<int> act_rows_from_json(const Json& rows, int actor_order, int module_order);

// Entries are coordinate tuples; plain element indices are accepted on input.
Json cocycle_to_json(const Cocycle2& c);
Cocycle2 cocycle_from_json(const Json& j);
Json cochain_to_json(const Cochain1& f);

struct CohomologySummary {
  int degree = 2;
  std::vector<int> invariant_factors;
  std::vector<std::vector<int>> representatives;
};
Json cohomology_to_json(const CohomologyGroup& h);
CohomologySummary cohomology_from_json(const Json& j);

// {"gamma", "g", "theta": [[...]], "c": [[...]]}
Json twisted_data_to_json(const TwistedData& d);
TwistedData twisted_data_from_json(const Json& j);

Json local_types_to_json(const std::vector<LocalTypeClass>& classes, LocalTypeMode mode);
std::vector<LocalTypeClass> local_types_from_json(const Json& j);

Json structure_group_to_json(const StructureGroupData& d);
StructureGroupData structure_group_from_json(const Json& j);

Json surface_action_to_json(const SurfaceAction& sa);
SurfaceAction surface_action_from_json(const Json& j);

Json presentation_to_json(const EquivariantPresentation& p);
EquivariantPresentation presentation_from_json(const Json& j);

Json report_to_json(const ClassificationReport& r, const SurfaceAction& surface);
ClassificationReport report_from_json(const Json& j);

Json rep_count_to_json(const RepCount& r);
RepCount rep_count_from_json(const Json& j);

Json examples_to_json(const std::vector<ExampleRow>& rows);

}  // namespace tweq::io

#endif  // TWEQ_IO_HPP_
