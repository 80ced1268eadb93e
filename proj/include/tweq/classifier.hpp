#ifndef TWEQ_CLASSIFIER_HPP_
#define TWEQ_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tweq/cohomology.hpp"
#include "tweq/lie_data.hpp"
#include "tweq/orbifold.hpp"
#include "tweq/twisted.hpp"

namespace tweq {

// Either a structure group from the registry together with a: Gamma -> Out,
// or a finite group G with Gamma acting on it directly.
struct ClassifierInput {
  std::optional<StructureGroupData> structure;
  std::optional<GroupHom> a;
  std::optional<GroupAction> finite_theta;  // Gamma acting on a finite G
  // chi(g) = exp(2 pi i chi[g] / m), m the exponent of Gamma
  std::vector<int> chi;
  SurfaceAction surface;
  long long max_labels = 100'000;
};

// Local types available at one branch point for one c-class.
struct BranchLocalTypes {
  int branch_id = 0;
  std::vector<int> isotropy;  // sorted elements of Gamma
  int generator = 0;
  bool resolved = false;
  std::vector<LocalTypeClass> classes;
  int central_charge = -1;  // SL mode: k with z = exp(2 pi i k / n)
};

struct CClassBlock {
  std::vector<int> coords;
  std::vector<int> cocycle;  // normalized representative table
  std::vector<BranchLocalTypes> branches;
  long long label_count = 0;
};

// Unresolved factors enter labels as the single marker -1 (or "unresolved"
// for the theta class); caveats list every such factor.
struct FixedComponentLabel {
  std::vector<int> c_class;
  std::vector<int> local_types;  // class id per branch point, -1 unresolved
  std::string theta_class;
};

struct ClassificationReport {
  std::string structure;
  int gamma_order = 0;
  std::vector<int> a_map;
  std::vector<int> chi;
  std::vector<int> h2_factors;
  std::vector<CClassBlock> blocks;
  std::vector<std::string> theta_classes;  // {"unresolved"} outside finite mode
  long long label_count = 0;
  std::vector<FixedComponentLabel> labels;  // empty when above max_labels
  std::vector<std::string> caveats;
};

ClassificationReport enumerate_labels(const ClassifierInput& input);

struct RepCountOptions {
  int threads = 1;
  bool classes = false;
  long long max_search = 100'000'000;
  long long max_solutions = 1'000'000;  // stored when classes are requested
};

struct RepClass {
  std::vector<int> representative;  // derived-group element per generator
  long long size = 0;
};

struct RepCount {
  long long count = 0;
  std::vector<RepClass> classes;
};

// Maps generator u -> (g_u, epi(u)) in E satisfying every relator.
RepCount count_twisted_reps(const EquivariantPresentation& pres,
                            const TwistedGroup& e,
                            const RepCountOptions& options = {});

struct ExampleRow {
  std::string source;
  std::string description;
  std::vector<int> expected;
  std::vector<int> computed;
  bool match = false;
};

std::vector<ExampleRow> reproduce_examples();

// "Z/2 x Z/4", or "0" for the trivial group.
std::string factors_text(const std::vector<int>& invariant_factors);

}  // namespace tweq

#endif  // TWEQ_CLASSIFIER_HPP_
