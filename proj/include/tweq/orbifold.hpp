#ifndef TWEQ_ORBIFOLD_HPP_
#define TWEQ_ORBIFOLD_HPP_

#include <string>
#include <utility>
#include <vector>

#include "tweq/groups.hpp"

namespace tweq {

// Combinatorial datum of a finite group acting on a compact Riemann surface
// X of genus `genus` with quotient of genus `quotient_genus`.
// boundary_images lists the images of a_1, b_1, ..., a_h, b_h, x_1, ..., x_r.
// `kernel` is the sorted normal subgroup acting trivially on X; empty means
// the action is faithful.
struct SurfaceAction {
  int genus = 0;
  FiniteGroup group;
  int quotient_genus = 0;
  std::vector<std::pair<int, int>> branch;  // (branch point id, order m_j)
  std::vector<int> boundary_images;
  std::vector<int> kernel;

  int branch_count() const { return static_cast<int>(branch.size()); }
  int a_image(int i) const { return boundary_images[2 * i]; }
  int b_image(int i) const { return boundary_images[2 * i + 1]; }
  int x_image(int j) const { return boundary_images[2 * quotient_genus + j]; }
};

struct SurfaceReport {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const noexcept { return ok; }
};

SurfaceReport validate_surface_action(const SurfaceAction& sa);

// Hyperelliptic involution on genus g: Gamma = Z/2, h = 0, 2g+2 branch
// points of order 2 with every x_j mapped to the involution. `branch_points`
// overrides the number of branch points (used to build invalid data).
SurfaceAction hyperelliptic_action(int genus, int branch_points = -1);
// Gamma trivial acting on a surface of genus g.
SurfaceAction trivial_surface_action(int genus);

// A word is a list of letters: generator i is i+1, its inverse -(i+1).
using Word = std::vector<int>;

struct EquivariantPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  FiniteGroup target;
  std::vector<int> epi;  // generator -> target element
  // Number of leading generators that come from the quotient orbifold; the
  // rest are elements of the kernel of the action.
  int orbifold_generators = 0;
};

// Throws kValidation naming the violations when `sa` is invalid.
EquivariantPresentation presentation(const SurfaceAction& sa);

// Evaluate a word in a group given generator images.
int evaluate(const FiniteGroup& group, const std::vector<int>& images,
             const Word& word);

struct IsotropyClass {
  int branch_id = 0;
  std::vector<int> subgroup;  // sorted elements of Gamma
  int generator = 0;          // image of x_j
};

std::vector<IsotropyClass> isotropy_classes(const SurfaceAction& sa);

// Invariant factors of the abelianized presented group; 0 marks a free
// factor, factors equal to 1 are dropped.
std::vector<long long> abelianization(const EquivariantPresentation& p);

}  // namespace tweq

#endif  // TWEQ_ORBIFOLD_HPP_
