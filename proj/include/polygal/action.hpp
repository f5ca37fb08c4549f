#ifndef POLYGAL_ACTION_HPP
#define POLYGAL_ACTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polygal/perm.hpp"

namespace polygal {

/// A deduplicated family of subsets of an action's point set.
/// Members are stored as sorted point vectors, ordered lexicographically.
struct SetFamily {
  std::vector<std::vector<Point>> members;

  static SetFamily from_members(std::vector<std::vector<Point>> members);
  std::size_t size() const { return members.size(); }
  // Position of a sorted member set, or size() if absent.
  std::size_t find(const std::vector<Point>& member) const;
};

/// A finite group acting on a labeled point set. The label order is the
/// point order; every operation that emits points or point sets does so
/// in ascending point order, which keeps outputs deterministic.
///
/// The full |G| x |Omega| action table is stored; group orders here are
/// desk scale, and the table makes every downstream check exact and cheap.
class GroupAction {
 public:
  GroupAction() = default;

  // Builds the action table from a callback and verifies the action
  // axioms exhaustively (identity and compatibility on all pairs).
  static GroupAction build(PermGroup group, std::vector<std::string> labels,
                           const std::function<Point(const Perm&, Point)>& act);

  static GroupAction natural(PermGroup group);
  static GroupAction regular(const PermGroup& group);
  static GroupAction on_k_subsets(const PermGroup& group, std::size_t k);
  static GroupAction on_k_tuples(const PermGroup& group, std::size_t k);

  const PermGroup& group() const { return group_; }
  std::size_t num_points() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Point p) const { return labels_[p]; }

  Point apply(std::size_t elem_index, Point p) const { return table_[elem_index][p]; }
  Point apply(const Perm& sigma, Point p) const;
  const std::vector<Point>& row(std::size_t elem_index) const { return table_[elem_index]; }
  // Sorted image of a sorted subset.
  std::vector<Point> image_of_set(std::size_t elem_index, const std::vector<Point>& subset) const;

  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit_of(Point p) const;
  bool is_transitive() const;

  PermGroup setwise_stabilizer(const std::vector<Point>& subset) const;
  PermGroup pointwise_fixer(const std::vector<Point>& subset) const;
  PermGroup point_stabilizer(Point p) const;
  std::pair<PermGroup, bool> kernel_and_faithfulness() const;
  bool is_faithful() const;

  // The permutation representation (image in Sym(points)).
  PermGroup image() const;

  // Distinct images of a subset under the group, sorted.
  std::vector<std::vector<Point>> orbit_of_set(const std::vector<Point>& subset) const;

 private:
  PermGroup group_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Point>> table_;
};

/// Witness for an isomorphism of group actions: a group isomorphism given
/// elementwise plus a point bijection satisfying the intertwining identity.
struct ActionIso {
  std::vector<std::size_t> elem_map;  // a1 element index -> a2 element index
  std::vector<Point> point_map;       // a1 point -> a2 point
};

// Exhaustive check of the intertwining identity, bijectivity of both maps,
// and the homomorphism property of the element map.
bool is_action_isomorphism(const GroupAction& a1, const GroupAction& a2,
                           const ActionIso& iso);

// Deterministic backtracking search, pruned by order, orbit-size multiset,
// cycle-type multiset of the action image, and point-stabilizer orders.
// Both actions must be faithful. Absence of an isomorphism returns nullopt.
std::optional<ActionIso> action_isomorphism(const GroupAction& a1,
                                            const GroupAction& a2);

// Transitivity of the induced action on k-subsets or k-tuples of [m].
enum class HomogeneityMode { subsets, tuples };
bool homogeneity_test(const PermGroup& g, std::size_t k, HomogeneityMode mode);

/// Result of indexing a stable family by another action of the same group.
struct FamilyActionResult {
  GroupAction family_action;  // (G, Lambda); point i is family member i
  ActionIso iso;              // from the indexing action onto the family action
};

// Verifies that index is a bijection from the indexing action's points onto
// the family, that sigma(Lambda_delta) is contained in Lambda_{sigma(delta)}
// for every element and point, and that the reverse inclusion holds as well.
// Returns the induced action (G, Lambda) together with the isomorphism.
FamilyActionResult stable_family_action(const GroupAction& ambient,
                                        const GroupAction& indexing,
                                        const SetFamily& family,
                                        const std::vector<Point>& index);

// Lexicographically ordered k-subsets and injective k-tuples of {0..m-1}.
std::vector<std::vector<Point>> combinations(std::size_t m, std::size_t k);
std::vector<std::vector<Point>> injective_tuples(std::size_t m, std::size_t k);

std::string set_label(const std::vector<Point>& subset,
                      const std::vector<std::string>& labels);

}  // namespace polygal

#endif
