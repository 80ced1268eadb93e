#ifndef TWEQ_GROUPS_HPP_
#define TWEQ_GROUPS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tweq {

// A finite group given by its multiplication table. Elements are the
// indices 0..order-1. Immutable after construction.
class FiniteGroup {
 public:
  // Above this order associativity is checked on 10*order^2 sampled triples
  // instead of exhaustively.
  static constexpr int kExhaustiveAssociativityLimit = 256;
  // Seed for the sampled check; applies to groups constructed afterwards.
  static void set_sampling_seed(std::uint64_t seed);

  FiniteGroup();  // trivial group

  // `mul` is row-major: mul[a * order + b] = a*b. Throws Error
  // (kInvalidParameter) when any group axiom fails.
  FiniteGroup(int order, std::vector<int> mul, int identity,
              std::vector<std::string> labels = {});

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  int pow(int a, long long e) const;
  int conjugate(int g, int x) const { return mul(mul(inverse(g), x), g); }

  const std::vector<int>& table() const noexcept { return mul_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(int a) const;

  bool is_abelian() const;
  int exponent() const;

  // Elements of the subgroup generated by `gens`, sorted.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  // A small generating set, chosen greedily in index order.
  std::vector<int> generating_set() const;
  // Sorted list of central elements.
  std::vector<int> center() const;

  // Subgroup on the sorted element list `elements` (must be closed), with
  // elements renumbered by position in that list.
  FiniteGroup subgroup(const std::vector<int>& elements) const;
  // Quotient by a normal subgroup; `coset_of[x]` receives the coset index.
  FiniteGroup quotient(const std::vector<int>& normal,
                       std::vector<int>* coset_of = nullptr) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ &&
           a.mul_ == b.mul_;
  }

 private:
  int order_;
  int identity_;
  std::vector<int> mul_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

// Z/d1 x ... x Z/dk with d1 | d2 | ... | dk, each >= 2. Element index is the
// mixed-radix number sum_i x_i * (d_0 * ... * d_{i-1}).
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> invariant_factors);

  const std::vector<int>& invariant_factors() const noexcept {
    return factors_;
  }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const noexcept { return order_; }
  int exponent() const noexcept {
    return factors_.empty() ? 1 : factors_.back();
  }

  std::vector<int> coords(int index) const;
  int index(const std::vector<int>& coords) const;  // reduces mod d_i
  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int scale(int a, long long k) const;
  int zero() const noexcept { return 0; }

  FiniteGroup as_group() const;

  friend bool operator==(const FiniteAbelianGroup& a,
                         const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

// Homomorphism between two tabled groups.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  // Throws kInvalidParameter if `map` is not a homomorphism.
  void validate() const;
  GroupHom compose_after(const GroupHom& first) const;  // this o first
};

GroupHom trivial_hom(const FiniteGroup& source, const FiniteGroup& target);

// Left action of `actor` on `module` by automorphisms.
// act[g * module.order() + m] = g . m
struct GroupAction {
  FiniteGroup actor;
  FiniteGroup module;
  std::vector<int> act;

  int operator()(int g, int m) const { return act[g * module.order() + m]; }
};

// Same as GroupAction with the module recorded as an abelian group, so that
// cohomology can use its invariant-factor coordinates.
struct AbelianAction {
  FiniteGroup actor;
  FiniteAbelianGroup module;
  std::vector<int> act;

  int operator()(int g, int m) const { return act[g * module.order() + m]; }
  GroupAction as_group_action() const;
};

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& module);
AbelianAction trivial_action(const FiniteGroup& actor,
                             const FiniteAbelianGroup& module);
// Action in which every actor element g acts as auto^{k(g)} where `auto` is
// an automorphism of the module and k: actor -> Z/r a homomorphism given as
// its table. Used for the cyclic actions that dominate the examples.
AbelianAction power_action(const FiniteGroup& actor,
                           const FiniteAbelianGroup& module,
                           const std::vector<int>& automorphism,
                           const std::vector<int>& exponent_of);
// Restriction of an action to the subgroup given by sorted element list.
GroupAction restrict_action(const GroupAction& action,
                            const std::vector<int>& subgroup_elements);
AbelianAction restrict_action(const AbelianAction& action,
                              const std::vector<int>& subgroup_elements);

struct ValidationReport {
  bool ok = true;
  std::string message;
  // Offending elements (actor element, and module elements where relevant).
  std::vector<int> witness;

  explicit operator bool() const noexcept { return ok; }
};

ValidationReport validate_action(const GroupAction& action);
ValidationReport validate_action(const AbelianAction& action);

FiniteGroup build_cyclic(int n);
// Permutations of {0..n-1} in lexicographic order of one-line notation;
// mul(a, b) is the composite a o b (apply b first).
FiniteGroup build_symmetric(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& group);

// Isomorphism search between two small groups; returns the element map
// a -> b when one exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b);

// Recognize a finite abelian group presented as a tabled group. Returns the
// abelian group and `iso[i]` = element of `group` matching abelian index i.
std::pair<FiniteAbelianGroup, std::vector<int>> recognize_abelian(
    const FiniteGroup& group);

}  // namespace tweq

#endif  // TWEQ_GROUPS_HPP_
