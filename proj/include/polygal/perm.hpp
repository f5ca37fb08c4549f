#ifndef POLYGAL_PERM_HPP
#define POLYGAL_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polygal {

using Point = std::uint16_t;

/// A permutation of {0,...,d-1}, stored as its image list.
/// All I/O uses 1-based points; internals are 0-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t degree);

  // Parses "(1 2 3)(4 5)", "id", or an image list "[2,1,3]".
  static Perm parse(const std::string& text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  // (a*b)(x) = a(b(x)): apply b first.
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  // Multiset of cycle lengths, sorted descending.
  std::vector<std::size_t> cycle_type() const;

  std::string to_cycle_string() const;  // 1-based, e.g. "(1 2 3)"

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> img_;
};

/// A finitely generated permutation group with its fully enumerated,
/// sorted element list.
class PermGroup {
 public:
  PermGroup() = default;

  static constexpr std::size_t kDefaultCap = 100000;

  // Enumerates <generators>. Throws ClosureExceedsCap if the order
  // would exceed cap. An empty generator list yields the trivial group.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::size_t cap = kDefaultCap);

  // Wraps an already closed, sorted element list (unchecked beyond asserts).
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree, std::size_t cap = kDefaultCap);
  static PermGroup alternating(std::size_t degree, std::size_t cap = kDefaultCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  // Index of p in the sorted element list; order() if absent.
  std::size_t index_of(const Perm& p) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool same_elements(const PermGroup& g) const;

  // Greedy small generating sequence drawn from the element list.
  std::vector<Perm> small_generating_set() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

}  // namespace polygal

#endif
