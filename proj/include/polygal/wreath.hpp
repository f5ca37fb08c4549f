#ifndef POLYGAL_WREATH_HPP
#define POLYGAL_WREATH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polygal/action.hpp"
#include "polygal/perm.hpp"

namespace polygal {

/// An element (tau, rho) of S_m wr S_r: an r-tuple of permutations of [m]
/// together with a permutation of [r].
struct WreathElement {
  std::vector<Perm> tau;  // r permutations of [m]
  Perm rho;               // permutation of [r]

  std::size_t m() const { return tau.empty() ? 0 : tau[0].degree(); }
  std::size_t r() const { return tau.size(); }

  static WreathElement identity(std::size_t m, std::size_t r);

  // (tau1, rho1)(tau2, rho2) = (tau1 * (rho1 . tau2), rho1 rho2),
  // where (rho . tau)_i = tau_{rho^{-1}(i)} and products are componentwise.
  WreathElement operator*(const WreathElement& other) const;
  WreathElement inverse() const;
  bool operator==(const WreathElement& other) const = default;

  // Serializes as (rho; tau_1,...,tau_r) in 1-based cycle notation.
  std::string to_string() const;
};

enum class WreathActionKind { top, primitive, imprimitive };

/// A subgroup of S_m wr S_r, stored by wreath-element generators and closed
/// through the faithful imprimitive action on [r] x [m].
class WreathGroup {
 public:
  // Full wreath product when generators is empty and full = true.
  static WreathGroup full(std::size_t m, std::size_t r,
                          std::size_t cap = PermGroup::kDefaultCap);
  static WreathGroup generated(std::size_t m, std::size_t r,
                               std::vector<WreathElement> generators,
                               std::size_t cap = PermGroup::kDefaultCap);
  // The base subgroup S_m^r (all rho trivial).
  static WreathGroup base(std::size_t m, std::size_t r,
                          std::size_t cap = PermGroup::kDefaultCap);

  std::size_t m() const { return m_; }
  std::size_t r() const { return r_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WreathElement>& elements() const { return elements_; }
  const std::vector<WreathElement>& generators() const { return generators_; }

  // The closure as a permutation group in the imprimitive representation;
  // element i of imprimitive_group() corresponds to elements()[i].
  const PermGroup& imprimitive_group() const { return imprim_; }

  // Point (i,j) of the imprimitive action as a 0-based flat index i*m + j.
  GroupAction action(WreathActionKind kind, std::size_t k = 1) const;

 private:
  std::size_t m_ = 0, r_ = 0;
  std::vector<WreathElement> generators_;
  std::vector<WreathElement> elements_;  // aligned with imprim_.elements()
  PermGroup imprim_;
};

// Encoding between wreath elements and imprimitive permutations of [r]x[m].
Perm imprimitive_perm(const WreathElement& w);
WreathElement decode_imprimitive(const Perm& p, std::size_t m, std::size_t r);

/// Orbit decomposition of the imprimitive action for a group whose
/// primitive (k=1) action is transitive; each orbit is verified to be the
/// product of a top orbit with [m]. Throws PrimitiveNotTransitive.
std::vector<std::vector<Point>> imprimitive_orbits_from_primitive_transitivity(
    const WreathGroup& g);

/// The induced transitive wreath group on one top orbit.
struct InducedBlockGroup {
  GroupAction restricted;   // (G_l, (G.i_l) x [m]) as a faithful action
  WreathGroup gamma;        // Gamma_l <= S_m wr S_{r_l}
  GroupAction gamma_action; // (Gamma_l, Omega^I(m, r_l)), transitive
  ActionIso iso;            // restricted -> gamma_action, verified
};
InducedBlockGroup induced_block_group(const WreathGroup& g,
                                      const std::vector<Point>& top_orbit);

/// The coordinate-fiber family Lambda_{(i,j)} = {v : v_i = j} over the
/// primitive k=1 action, together with the verified isomorphism from the
/// imprimitive action.
struct PrimitiveStabilizerFamily {
  SetFamily family;
  GroupAction primitive_action;
  GroupAction imprimitive_action;
  FamilyActionResult result;  // (G, Lambda) with iso from the imprimitive action
};
PrimitiveStabilizerFamily primitive_stabilizer_family(const WreathGroup& g);

}  // namespace polygal

#endif
