#ifndef TWEQ_COHOMOLOGY_HPP_
#define TWEQ_COHOMOLOGY_HPP_

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "tweq/groups.hpp"

namespace tweq {

// Cochains carry abelian-group element indices; all arithmetic is written
// additively in the module.
struct Cochain1 {
  AbelianAction base;
  std::vector<int> map;  // actor element -> module element
};

struct Cocycle2 {
  AbelianAction base;
  std::vector<int> table;  // table[g1 * |actor| + g2]

  int operator()(int g1, int g2) const {
    return table[g1 * base.actor.order() + g2];
  }
};

struct CocycleCheck {
  bool ok = true;
  std::array<int, 3> triple{};  // first violating (g1, g2, g3) when !ok

  explicit operator bool() const noexcept { return ok; }
};

struct CohomologyLimits {
  int max_actor_order = 24;
  int max_module_order = 64;
  // are_cohomologous switches from exhaustive search to linear solving above
  // this many candidate maps.
  long long max_exhaustive_maps = 1'000'000;
};

class CohomologyGroup {
 public:
  struct Impl;

  CohomologyGroup(int degree, std::vector<int> invariant_factors,
                  std::vector<std::vector<int>> representatives,
                  AbelianAction base, std::shared_ptr<const Impl> impl);

  int degree() const noexcept { return degree_; }
  const std::vector<int>& invariant_factors() const noexcept {
    return factors_;
  }
  long long order() const;
  const AbelianAction& base() const noexcept { return base_; }
  // Tables of the generator representatives: length |actor| for degree 1,
  // |actor|^2 for degree 2.
  const std::vector<std::vector<int>>& representatives() const noexcept {
    return reps_;
  }
  Cocycle2 representative2(std::size_t i) const;
  Cochain1 representative1(std::size_t i) const;

  // Coordinates with respect to the representatives; coordinate i lies in
  // [0, invariant_factors()[i]). The argument must be a cocycle of the
  // matching degree on the same base action.
  std::vector<int> classify(const std::vector<int>& cocycle_table) const;
  std::vector<int> classify(const Cocycle2& c) const { return classify(c.table); }
  std::vector<int> classify(const Cochain1& f) const { return classify(f.map); }

  // Cocycle table for an arbitrary coordinate tuple (sum of multiples of the
  // representatives).
  std::vector<int> combine(const std::vector<int>& coords) const;

 private:
  int degree_;
  std::vector<int> factors_;
  std::vector<std::vector<int>> reps_;
  AbelianAction base_;
  std::shared_ptr<const Impl> impl_;
};

CocycleCheck is_cocycle2(const Cocycle2& c);
bool is_cocycle1(const Cochain1& f);
Cocycle2 coboundary_of(const Cochain1& f);
// c'(g1,g2) = c(g1,g2) + (df)(g1,g2)
Cocycle2 add_coboundary(const Cocycle2& c, const Cochain1& f);
// Cohomologous representative with c(1,g) = c(g,1) = 0.
Cocycle2 normalize(const Cocycle2& c);
Cocycle2 trivial_cocycle(const AbelianAction& base);

// f with c2 = c1 + df, when one exists.
std::optional<Cochain1> are_cohomologous(const Cocycle2& c1, const Cocycle2& c2,
                                         const CohomologyLimits& limits = {});

CohomologyGroup h1(const AbelianAction& action,
                   const CohomologyLimits& limits = {});
CohomologyGroup h2(const AbelianAction& action,
                   const CohomologyLimits& limits = {});

// H^2 of a cyclic group as fixed points modulo norms. The generator is the
// lowest-index element of maximal order unless given.
CohomologyGroup h2_cyclic_norm(const AbelianAction& action,
                               std::optional<int> generator = std::nullopt);

}  // namespace tweq

#endif  // TWEQ_COHOMOLOGY_HPP_
