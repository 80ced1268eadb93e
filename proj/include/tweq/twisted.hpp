#ifndef TWEQ_TWISTED_HPP_
#define TWEQ_TWISTED_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tweq/groups.hpp"

namespace tweq {

// The data (Gamma, G, theta, c) shared by twisted groups and twisted
// 1-cocycles. c is written multiplicatively in G: c[g1 * |Gamma| + g2] is a
// central element of G.
struct TwistedData {
  FiniteGroup gamma;
  FiniteGroup g;
  GroupAction theta;  // gamma acting on g
  std::vector<int> c;

  int cocycle(int g1, int g2) const { return c[g1 * gamma.order() + g2]; }
};

// Constant cocycle with value the identity of G.
TwistedData untwisted_data(const FiniteGroup& gamma, const FiniteGroup& g,
                           const GroupAction& theta);

// The center of G as an abelian Gamma-module under theta.
// to_g[abelian index] = element of G; from_g[element of G] = abelian index or -1.
struct CenterModule {
  AbelianAction action;
  std::vector<int> to_g;
  std::vector<int> from_g;
};

CenterModule center_module(const FiniteGroup& gamma, const GroupAction& theta);

// The group G x Gamma with law
//   (g1,y1)(g2,y2) = (c(y1,y2) g1 theta_{y1}(g2), y1 y2).
// Element (g, y) has index g + |G| * y.
class TwistedGroup {
 public:
  explicit TwistedGroup(TwistedData data);

  const TwistedData& data() const noexcept { return data_; }
  const FiniteGroup& derived() const noexcept { return derived_; }
  int element(int g, int y) const { return g + data_.g.order() * y; }
  int g_part(int x) const { return x % data_.g.order(); }
  int gamma_part(int x) const { return x / data_.g.order(); }

 private:
  TwistedData data_;
  FiniteGroup derived_;
};

// Throws kInvalidParameter when theta is not an action, c is not central, or
// c fails the cocycle identity; the message names the offending triple.
TwistedGroup build_twisted_group(TwistedData data);

// An isomorphism E -> E' of the form (g, y) -> (g f(y)^-1, y), as a map on
// derived-group indices, when c and c' are cohomologous in the center.
std::optional<std::vector<int>> extension_equivalent(const TwistedGroup& e,
                                                     const TwistedGroup& e2);

struct TwistedCocycle1 {
  std::vector<int> map;  // Gamma element -> G element
};

// Maps rho with rho(y1 y2) = c(y1,y2) rho(y1) theta_{y1}(rho(y2)), enumerated
// from the images of a generating set of Gamma. Sorted lexicographically.
std::vector<TwistedCocycle1> z1_twisted(const TwistedData& data,
                                        long long max_candidates = 10'000'000);
bool is_twisted_cocycle1(const TwistedData& data, const std::vector<int>& rho);

enum class LocalTypeMode { kFinite, kSl };

struct LocalTypeClass {
  int id = 0;
  LocalTypeMode mode = LocalTypeMode::kFinite;
  // Finite mode: the lexicographically least cocycle in the class.
  // SL mode: sorted eigenvalue exponents e, eigenvalue exp(2 pi i e / denominator).
  std::vector<int> representative;
  long long orbit_size = 0;  // finite mode
  int denominator = 0;       // SL mode
};

// Classes of z1_twisted under rho'(y) = g^-1 rho(y) theta_y(g), ordered by
// representative.
std::vector<LocalTypeClass> h1_twisted(const TwistedData& data,
                                       long long max_candidates = 10'000'000);

// Conjugacy classes of g in SL(n, C) with g^m = z^-1, where z = exp(2 pi i k/n)
// is the central charge. `inner` must be true: the twisting automorphism is
// trivial on the isotropy group.
std::vector<LocalTypeClass> sl_local_types(int n, int m, int k,
                                           bool inner = true);

std::string describe(const LocalTypeClass& cls);

}  // namespace tweq

#endif  // TWEQ_TWISTED_HPP_
