#include "polygal/action.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "polygal/errors.hpp"

namespace polygal {

SetFamily SetFamily::from_members(std::vector<std::vector<Point>> members) {
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily{std::move(members)};
}

std::size_t SetFamily::find(const std::vector<Point>& member) const {
  auto it = std::lower_bound(members.begin(), members.end(), member);
  if (it == members.end() || *it != member) return members.size();
  return static_cast<std::size_t>(it - members.begin());
}

GroupAction GroupAction::build(PermGroup group, std::vector<std::string> labels,
                               const std::function<Point(const Perm&, Point)>& act) {
  {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size()) throw Error("action labels must be unique");
  }
  GroupAction a;
  const std::size_t n = labels.size();
  a.labels_ = std::move(labels);
  a.table_.reserve(group.order());
  for (const Perm& sigma : group.elements()) {
    std::vector<Point> row(n);
    std::vector<bool> seen(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      Point q = act(sigma, static_cast<Point>(p));
      if (q >= n || seen[q]) throw Error("action callback is not a bijection");
      seen[q] = true;
      row[p] = q;
    }
    a.table_.push_back(std::move(row));
  }
  a.group_ = std::move(group);
  // Action axioms: identity acts trivially, composition is respected.
  const std::size_t id_idx = a.group_.index_of(Perm::identity(a.group_.degree()));
  assert(id_idx < a.group_.order());
  for (std::size_t p = 0; p < n; ++p)
    if (a.table_[id_idx][p] != p) throw Error("identity does not act trivially");
  const auto& elems = a.group_.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      std::size_t k = a.group_.index_of(elems[i] * elems[j]);
      for (std::size_t p = 0; p < n; ++p)
        if (a.table_[k][p] != a.table_[i][a.table_[j][p]])
          throw Error("action is not compatible with the group operation");
    }
  }
  return a;
}

GroupAction GroupAction::natural(PermGroup group) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < group.degree(); ++i) labels.push_back(std::to_string(i + 1));
  return build(std::move(group), std::move(labels),
               [](const Perm& s, Point p) { return s(p); });
}

GroupAction GroupAction::regular(const PermGroup& group) {
  std::vector<std::string> labels;
  for (const Perm& e : group.elements()) labels.push_back(e.to_cycle_string());
  const PermGroup& g = group;
  return build(group, std::move(labels), [&g](const Perm& s, Point p) {
    std::size_t idx = g.index_of(s * g.elements()[p]);
    return static_cast<Point>(idx);
  });
}

GroupAction GroupAction::on_k_subsets(const PermGroup& group, std::size_t k) {
  auto subs = combinations(group.degree(), k);
  std::vector<std::string> labels;
  std::vector<std::string> pt_labels;
  for (std::size_t i = 0; i < group.degree(); ++i) pt_labels.push_back(std::to_string(i + 1));
  for (const auto& s : subs) labels.push_back(set_label(s, pt_labels));
  return build(group, std::move(labels), [subs](const Perm& s, Point p) {
    std::vector<Point> img;
    img.reserve(subs[p].size());
    for (Point x : subs[p]) img.push_back(s(x));
    std::sort(img.begin(), img.end());
    auto it = std::lower_bound(subs.begin(), subs.end(), img);
    return static_cast<Point>(it - subs.begin());
  });
}

GroupAction GroupAction::on_k_tuples(const PermGroup& group, std::size_t k) {
  auto tups = injective_tuples(group.degree(), k);
  std::vector<std::string> labels;
  for (const auto& t : tups) {
    std::string l = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) l += ",";
      l += std::to_string(t[i] + 1);
    }
    l += ")";
    labels.push_back(std::move(l));
  }
  return build(group, std::move(labels), [tups](const Perm& s, Point p) {
    std::vector<Point> img;
    img.reserve(tups[p].size());
    for (Point x : tups[p]) img.push_back(s(x));
    auto it = std::lower_bound(tups.begin(), tups.end(), img);
    return static_cast<Point>(it - tups.begin());
  });
}

Point GroupAction::apply(const Perm& sigma, Point p) const {
  std::size_t idx = group_.index_of(sigma);
  if (idx >= group_.order()) throw Error("element not in acting group");
  return table_[idx][p];
}

std::vector<Point> GroupAction::image_of_set(std::size_t elem_index,
                                             const std::vector<Point>& subset) const {
  std::vector<Point> img;
  img.reserve(subset.size());
  for (Point p : subset) img.push_back(table_[elem_index][p]);
  std::sort(img.begin(), img.end());
  return img;
}

std::vector<std::vector<Point>> GroupAction::orbits() const {
  std::vector<bool> seen(num_points(), false);
  std::vector<std::vector<Point>> out;
  for (std::size_t p = 0; p < num_points(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit;
    std::vector<Point> stack = {static_cast<Point>(p)};
    seen[p] = true;
    while (!stack.empty()) {
      Point q = stack.back();
      stack.pop_back();
      orbit.push_back(q);
      for (const auto& row : table_) {
        Point r = row[q];
        if (!seen[r]) {
          seen[r] = true;
          stack.push_back(r);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Point> GroupAction::orbit_of(Point p) const {
  for (auto& orb : orbits())
    if (std::binary_search(orb.begin(), orb.end(), p)) return orb;
  return {};
}

bool GroupAction::is_transitive() const {
  return num_points() > 0 && orbit_of(0).size() == num_points();
}

PermGroup GroupAction::setwise_stabilizer(const std::vector<Point>& subset) const {
  std::vector<Point> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> stab;
  for (std::size_t e = 0; e < table_.size(); ++e)
    if (image_of_set(e, sorted) == sorted) stab.push_back(group_.elements()[e]);
  return PermGroup::from_elements(group_.degree(), std::move(stab));
}

PermGroup GroupAction::pointwise_fixer(const std::vector<Point>& subset) const {
  std::vector<Perm> fix;
  for (std::size_t e = 0; e < table_.size(); ++e) {
    bool ok = true;
    for (Point p : subset)
      if (table_[e][p] != p) {
        ok = false;
        break;
      }
    if (ok) fix.push_back(group_.elements()[e]);
  }
  return PermGroup::from_elements(group_.degree(), std::move(fix));
}

PermGroup GroupAction::point_stabilizer(Point p) const {
  return pointwise_fixer({p});
}

std::pair<PermGroup, bool> GroupAction::kernel_and_faithfulness() const {
  std::vector<Point> all(num_points());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Point>(i);
  PermGroup ker = pointwise_fixer(all);
  return {ker, ker.order() == 1};
}

bool GroupAction::is_faithful() const { return kernel_and_faithfulness().second; }

PermGroup GroupAction::image() const {
  std::vector<Perm> perms;
  perms.reserve(table_.size());
  for (const auto& row : table_) perms.emplace_back(row);
  return PermGroup::from_elements(num_points(), std::move(perms));
}

std::vector<std::vector<Point>> GroupAction::orbit_of_set(
    const std::vector<Point>& subset) const {
  std::vector<Point> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::set<std::vector<Point>> images;
  for (std::size_t e = 0; e < table_.size(); ++e) images.insert(image_of_set(e, sorted));
  return {images.begin(), images.end()};
}

bool is_action_isomorphism(const GroupAction& a1, const GroupAction& a2,
                           const ActionIso& iso) {
  const std::size_t n1 = a1.group().order();
  if (n1 != a2.group().order()) return false;
  if (a1.num_points() != a2.num_points()) return false;
  if (iso.elem_map.size() != n1 || iso.point_map.size() != a1.num_points()) return false;
  // Bijectivity of both maps.
  {
    std::vector<bool> seen(n1, false);
    for (std::size_t x : iso.elem_map) {
      if (x >= n1 || seen[x]) return false;
      seen[x] = true;
    }
  }
  {
    std::vector<bool> seen(a2.num_points(), false);
    for (Point x : iso.point_map) {
      if (x >= a2.num_points() || seen[x]) return false;
      seen[x] = true;
    }
  }
  // Homomorphism property on all pairs.
  const auto& e1 = a1.group().elements();
  const auto& e2 = a2.group().elements();
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      std::size_t k = a1.group().index_of(e1[i] * e1[j]);
      std::size_t k2 = a2.group().index_of(e2[iso.elem_map[i]] * e2[iso.elem_map[j]]);
      if (iso.elem_map[k] != k2) return false;
    }
  }
  // Intertwining identity on every (element, point) pair.
  for (std::size_t e = 0; e < n1; ++e)
    for (std::size_t p = 0; p < a1.num_points(); ++p)
      if (a2.apply(iso.elem_map[e], iso.point_map[p]) != iso.point_map[a1.apply(e, static_cast<Point>(p))])
        return false;
  return true;
}

namespace {

// Sorted multiset helpers for the invariant prefilters.
template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> stabilizer_orders(const GroupAction& a) {
  std::vector<std::size_t> orders;
  for (std::size_t p = 0; p < a.num_points(); ++p)
    orders.push_back(a.point_stabilizer(static_cast<Point>(p)).order());
  return sorted(orders);
}

std::vector<std::vector<std::size_t>> action_cycle_types(const GroupAction& a) {
  std::vector<std::vector<std::size_t>> types;
  for (std::size_t e = 0; e < a.group().order(); ++e)
    types.push_back(Perm(a.row(e)).cycle_type());
  return sorted(types);
}

// Extends the partial generator assignment to a homomorphism on all of G1,
// returning the element map or nullopt on conflict.
std::optional<std::vector<std::size_t>> extend_hom(
    const PermGroup& g1, const PermGroup& g2,
    const std::vector<std::size_t>& gen_idx, const std::vector<std::size_t>& img_idx) {
  const std::size_t n = g1.order();
  const std::size_t undef = n;
  std::vector<std::size_t> m(n, undef);
  std::size_t id1 = g1.index_of(Perm::identity(g1.degree()));
  std::size_t id2 = g2.index_of(Perm::identity(g2.degree()));
  m[id1] = id2;
  std::vector<std::size_t> work = {id1};
  std::size_t defined = 1;
  while (!work.empty()) {
    std::size_t x = work.back();
    work.pop_back();
    for (std::size_t gi = 0; gi < gen_idx.size(); ++gi) {
      std::size_t xg = g1.index_of(g1.elements()[x] * g1.elements()[gen_idx[gi]]);
      std::size_t img = g2.index_of(g2.elements()[m[x]] * g2.elements()[img_idx[gi]]);
      if (m[xg] == undef) {
        m[xg] = img;
        ++defined;
        work.push_back(xg);
      } else if (m[xg] != img) {
        return std::nullopt;
      }
    }
  }
  if (defined != n) return std::nullopt;  // gens must generate all of G1
  std::vector<bool> seen(n, false);
  for (std::size_t x : m) {
    if (seen[x]) return std::nullopt;
    seen[x] = true;
  }
  return m;
}

struct IsoSearch {
  const GroupAction& a1;
  const GroupAction& a2;
  std::vector<std::size_t> gen_idx;
  std::vector<std::vector<Point>> orbits1, orbits2;
  std::vector<std::vector<std::size_t>> stab1, stab2;  // per point: sorted fixing-element indices

  std::optional<ActionIso> result;

  void precompute() {
    orbits1 = a1.orbits();
    orbits2 = a2.orbits();
    auto stabs = [](const GroupAction& a) {
      std::vector<std::vector<std::size_t>> s(a.num_points());
      for (std::size_t e = 0; e < a.group().order(); ++e)
        for (std::size_t p = 0; p < a.num_points(); ++p)
          if (a.apply(e, static_cast<Point>(p)) == p) s[p].push_back(e);
      return s;
    };
    stab1 = stabs(a1);
    stab2 = stabs(a2);
  }

  // Assign generator images one by one, then try to build the point map.
  bool assign(std::size_t i, std::vector<std::size_t>& img_idx) {
    const PermGroup& g1 = a1.group();
    const PermGroup& g2 = a2.group();
    if (i == gen_idx.size()) {
      auto m = extend_hom(g1, g2, gen_idx, img_idx);
      if (!m) return false;
      return build_point_map(*m);
    }
    const Perm& gen = g1.elements()[gen_idx[i]];
    const std::size_t ord = gen.order();
    for (std::size_t c = 0; c < g2.order(); ++c) {
      if (g2.elements()[c].order() != ord) continue;
      img_idx.push_back(c);
      // Partial consistency: the subgroup generated so far must extend.
      std::vector<std::size_t> partial_gens(gen_idx.begin(), gen_idx.begin() + i + 1);
      bool viable = true;
      {
        // Quick check on the partial subgroup only when it is proper.
        auto sub = PermGroup::closure(
            g1.degree(),
            [&] {
              std::vector<Perm> ps;
              for (std::size_t gi : partial_gens) ps.push_back(g1.elements()[gi]);
              return ps;
            }(),
            g1.order());
        std::vector<std::size_t> sub_gen_idx, sub_img_idx;
        for (std::size_t t = 0; t <= i; ++t) {
          sub_gen_idx.push_back(sub.index_of(g1.elements()[gen_idx[t]]));
          sub_img_idx.push_back(img_idx[t]);
        }
        // Map within the subgroup: reuse extend_hom with g1 replaced by sub.
        viable = extend_hom(sub, g2, sub_gen_idx, sub_img_idx).has_value();
      }
      if (viable && assign(i + 1, img_idx)) return true;
      img_idx.pop_back();
    }
    return false;
  }

  bool build_point_map(const std::vector<std::size_t>& elem_map) {
    std::vector<Point> point_map(a1.num_points(), static_cast<Point>(a2.num_points()));
    std::vector<bool> orbit2_used(orbits2.size(), false);
    if (place_orbit(0, elem_map, point_map, orbit2_used)) {
      ActionIso iso{elem_map, point_map};
      if (is_action_isomorphism(a1, a2, iso)) {
        result = iso;
        return true;
      }
    }
    return false;
  }

  bool place_orbit(std::size_t oi, const std::vector<std::size_t>& elem_map,
                   std::vector<Point>& point_map, std::vector<bool>& used) {
    if (oi == orbits1.size()) return true;
    const auto& orb = orbits1[oi];
    const Point rep = orb[0];
    // Image of the representative's stabilizer under the element map.
    std::vector<std::size_t> mapped_stab;
    mapped_stab.reserve(stab1[rep].size());
    for (std::size_t e : stab1[rep]) mapped_stab.push_back(elem_map[e]);
    std::sort(mapped_stab.begin(), mapped_stab.end());
    for (std::size_t oj = 0; oj < orbits2.size(); ++oj) {
      if (used[oj] || orbits2[oj].size() != orb.size()) continue;
      for (Point cand : orbits2[oj]) {
        if (stab2[cand] != mapped_stab) continue;
        // Propagate over the orbit; well-defined by the stabilizer match.
        for (std::size_t e = 0; e < a1.group().order(); ++e)
          point_map[a1.apply(e, rep)] = a2.apply(elem_map[e], cand);
        used[oj] = true;
        if (place_orbit(oi + 1, elem_map, point_map, used)) return true;
        used[oj] = false;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<ActionIso> action_isomorphism(const GroupAction& a1,
                                            const GroupAction& a2) {
  if (!a1.is_faithful() || !a2.is_faithful())
    throw Error("action_isomorphism requires faithful actions");
  if (a1.group().order() != a2.group().order()) return std::nullopt;
  if (a1.num_points() != a2.num_points()) return std::nullopt;
  auto orbit_sizes = [](const GroupAction& a) {
    std::vector<std::size_t> s;
    for (const auto& o : a.orbits()) s.push_back(o.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (orbit_sizes(a1) != orbit_sizes(a2)) return std::nullopt;
  if (action_cycle_types(a1) != action_cycle_types(a2)) return std::nullopt;
  if (stabilizer_orders(a1) != stabilizer_orders(a2)) return std::nullopt;

  IsoSearch search{a1, a2};
  search.precompute();
  std::vector<Perm> gens = a1.group().small_generating_set();
  for (const Perm& g : gens) search.gen_idx.push_back(a1.group().index_of(g));
  std::vector<std::size_t> img_idx;
  if (search.gen_idx.empty()) {
    // Trivial group: match points by orbit structure (all fixed).
    std::vector<std::size_t> elem_map = {0};
    search.build_point_map(elem_map);
  } else {
    search.assign(0, img_idx);
  }
  return search.result;
}

bool homogeneity_test(const PermGroup& g, std::size_t k, HomogeneityMode mode) {
  if (k < 1 || k > g.degree()) throw Error("homogeneity_test requires 1 <= k <= m");
  GroupAction a = (mode == HomogeneityMode::subsets) ? GroupAction::on_k_subsets(g, k)
                                                     : GroupAction::on_k_tuples(g, k);
  return a.is_transitive();
}

FamilyActionResult stable_family_action(const GroupAction& ambient,
                                        const GroupAction& indexing,
                                        const SetFamily& family,
                                        const std::vector<Point>& index) {
  if (!ambient.group().same_elements(indexing.group()))
    throw Error("ambient and indexing actions must share one group");
  if (index.size() != indexing.num_points())
    throw Error("index must cover the indexing action's points");
  // Injectivity onto the family.
  {
    std::vector<bool> seen(family.size(), false);
    for (Point m : index) {
      if (m >= family.size() || seen[m])
        throw NotInjective("two indices map to one family member");
      seen[m] = true;
    }
    if (index.size() != family.size())
      throw NotInjective("index is not a bijection onto the family");
  }
  const std::size_t n_elems = ambient.group().order();
  // Forward inclusion sigma(Lambda_delta) subset of Lambda_{sigma(delta)},
  // checked exhaustively, then the reverse inclusion (equality).
  for (std::size_t e = 0; e < n_elems; ++e) {
    for (std::size_t d = 0; d < index.size(); ++d) {
      const auto& member = family.members[index[d]];
      const auto& target = family.members[index[indexing.apply(e, static_cast<Point>(d))]];
      std::vector<Point> img = ambient.image_of_set(e, member);
      if (!std::includes(target.begin(), target.end(), img.begin(), img.end()))
        throw NotEquivariant("family is not equivariantly indexed");
      if (img != target)
        throw NotEquivariant("family image inclusion is strict");
    }
  }
  // The induced action on the family, defined directly through the ambient
  // action on member sets.
  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (const auto& m : family.members) labels.push_back(set_label(m, ambient.labels()));
  const GroupAction& amb = ambient;
  const SetFamily& fam = family;
  GroupAction fam_action = GroupAction::build(
      ambient.group(), std::move(labels), [&amb, &fam](const Perm& s, Point p) {
        std::size_t e = amb.group().index_of(s);
        std::vector<Point> img = amb.image_of_set(e, fam.members[p]);
        std::size_t q = fam.find(img);
        if (q == fam.size()) throw NotEquivariant("family is not stable");
        return static_cast<Point>(q);
      });
  ActionIso iso;
  iso.elem_map.resize(n_elems);
  for (std::size_t e = 0; e < n_elems; ++e) iso.elem_map[e] = e;
  iso.point_map = index;
  if (!is_action_isomorphism(indexing, fam_action, iso))
    throw NotEquivariant("index map is not an action isomorphism");
  return FamilyActionResult{std::move(fam_action), std::move(iso)};
}

std::vector<std::vector<Point>> combinations(std::size_t m, std::size_t k) {
  std::vector<std::vector<Point>> out;
  if (k > m) return out;
  std::vector<Point> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Point>(i);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = static_cast<Point>(cur[j - 1] + 1);
  }
  return out;
}

std::vector<std::vector<Point>> injective_tuples(std::size_t m, std::size_t k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur;
  std::vector<bool> used(m, false);
  std::function<void()> rec = [&]() {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(static_cast<Point>(i));
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  if (k <= m) rec();
  return out;
}

std::string set_label(const std::vector<Point>& subset,
                      const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += labels[subset[i]];
  }
  out += "}";
  return out;
}

}  // namespace polygal
