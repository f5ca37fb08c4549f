#include "polygal/wreath.hpp"

#include <algorithm>
#include <cassert>

#include "polygal/errors.hpp"

namespace polygal {

WreathElement WreathElement::identity(std::size_t m, std::size_t r) {
  WreathElement w;
  w.tau.assign(r, Perm::identity(m));
  w.rho = Perm::identity(r);
  return w;
}

WreathElement WreathElement::operator*(const WreathElement& other) const {
  assert(m() == other.m() && r() == other.r());
  WreathElement out;
  out.rho = rho * other.rho;
  out.tau.resize(r());
  // (rho1 . tau2)_i = tau2_{rho1^{-1}(i)}
  Perm rho_inv = rho.inverse();
  for (std::size_t i = 0; i < r(); ++i)
    out.tau[i] = tau[i] * other.tau[rho_inv(static_cast<Point>(i))];
  return out;
}

WreathElement WreathElement::inverse() const {
  WreathElement out;
  out.rho = rho.inverse();
  out.tau.resize(r());
  for (std::size_t i = 0; i < r(); ++i)
    out.tau[i] = tau[rho(static_cast<Point>(i))].inverse();
  return out;
}

std::string WreathElement::to_string() const {
  std::string s = "(" + rho.to_cycle_string() + ";";
  for (std::size_t i = 0; i < r(); ++i) {
    if (i) s += ",";
    s += tau[i].to_cycle_string();
  }
  s += ")";
  return s;
}

Perm imprimitive_perm(const WreathElement& w) {
  const std::size_t m = w.m(), r = w.r();
  std::vector<Point> img(m * r);
  for (std::size_t i = 0; i < r; ++i) {
    Point i2 = w.rho(static_cast<Point>(i));
    for (std::size_t j = 0; j < m; ++j)
      img[i * m + j] = static_cast<Point>(i2 * m + w.tau[i2](static_cast<Point>(j)));
  }
  return Perm(std::move(img));
}

WreathElement decode_imprimitive(const Perm& p, std::size_t m, std::size_t r) {
  assert(p.degree() == m * r);
  WreathElement w;
  w.tau.assign(r, Perm::identity(m));
  std::vector<Point> rho_img(r);
  for (std::size_t i = 0; i < r; ++i) {
    Point block = static_cast<Point>(p(static_cast<Point>(i * m)) / m);
    rho_img[i] = block;
    std::vector<Point> t(m);
    for (std::size_t j = 0; j < m; ++j) {
      Point q = p(static_cast<Point>(i * m + j));
      assert(q / m == block && "permutation does not respect the block system");
      t[j] = static_cast<Point>(q % m);
    }
    w.tau[block] = Perm(std::move(t));
  }
  w.rho = Perm(std::move(rho_img));
  return w;
}

WreathGroup WreathGroup::generated(std::size_t m, std::size_t r,
                                   std::vector<WreathElement> generators,
                                   std::size_t cap) {
  if (m < 2 || r < 1) throw Error("wreath product requires m >= 2, r >= 1");
  for (const auto& g : generators)
    if (g.m() != m || g.r() != r) throw Error("wreath generator shape mismatch");
  std::vector<Perm> perm_gens;
  perm_gens.reserve(generators.size());
  for (const auto& g : generators) perm_gens.push_back(imprimitive_perm(g));
  WreathGroup w;
  w.m_ = m;
  w.r_ = r;
  w.generators_ = std::move(generators);
  w.imprim_ = PermGroup::closure(m * r, std::move(perm_gens), cap);
  w.elements_.reserve(w.imprim_.order());
  for (const Perm& p : w.imprim_.elements())
    w.elements_.push_back(decode_imprimitive(p, m, r));
  return w;
}

WreathGroup WreathGroup::full(std::size_t m, std::size_t r, std::size_t cap) {
  std::vector<WreathElement> gens;
  // S_m in the first coordinate.
  {
    PermGroup sm = PermGroup::symmetric(m);
    for (const Perm& g : sm.generators()) {
      WreathElement w = WreathElement::identity(m, r);
      w.tau[0] = g;
      gens.push_back(std::move(w));
    }
  }
  // S_r on top.
  if (r >= 2) {
    PermGroup sr = PermGroup::symmetric(r);
    for (const Perm& g : sr.generators()) {
      WreathElement w = WreathElement::identity(m, r);
      w.rho = g;
      gens.push_back(std::move(w));
    }
  }
  return generated(m, r, std::move(gens), cap);
}

WreathGroup WreathGroup::base(std::size_t m, std::size_t r, std::size_t cap) {
  std::vector<WreathElement> gens;
  PermGroup sm = PermGroup::symmetric(m);
  for (std::size_t i = 0; i < r; ++i) {
    for (const Perm& g : sm.generators()) {
      WreathElement w = WreathElement::identity(m, r);
      w.tau[i] = g;
      gens.push_back(std::move(w));
    }
  }
  return generated(m, r, std::move(gens), cap);
}

GroupAction WreathGroup::action(WreathActionKind kind, std::size_t k) const {
  const std::size_t m = m_, r = r_;
  switch (kind) {
    case WreathActionKind::top: {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < r; ++i) labels.push_back(std::to_string(i + 1));
      return GroupAction::build(imprim_, std::move(labels),
                                [m, r](const Perm& p, Point i) {
                                  WreathElement w = decode_imprimitive(p, m, r);
                                  return w.rho(i);
                                });
    }
    case WreathActionKind::imprimitive: {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j)
          labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      return GroupAction::build(imprim_, std::move(labels),
                                [](const Perm& p, Point x) { return p(x); });
    }
    case WreathActionKind::primitive: {
      if (k < 1 || 2 * k > m) throw Error("primitive action requires 1 <= k <= m/2");
      // Coordinates run over k-subsets of [m]; k = 1 is the plain alphabet.
      auto subs = combinations(m, k);
      const std::size_t N = subs.size();
      // Points are r-tuples over [N] in lexicographic order, flat index
      // v_1 * N^(r-1) + ... + v_r.
      std::size_t npoints = 1;
      for (std::size_t i = 0; i < r; ++i) npoints *= N;
      std::vector<std::string> labels;
      labels.reserve(npoints);
      std::vector<std::string> alphabet;
      for (const auto& s : subs) {
        if (k == 1) {
          alphabet.push_back(std::to_string(s[0] + 1));
        } else {
          std::string l = "{";
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) l += ",";
            l += std::to_string(s[i] + 1);
          }
          l += "}";
          alphabet.push_back(std::move(l));
        }
      }
      for (std::size_t x = 0; x < npoints; ++x) {
        std::string l = "(";
        std::size_t rest = x;
        std::vector<std::size_t> digits(r);
        for (std::size_t i = r; i-- > 0;) {
          digits[i] = rest % N;
          rest /= N;
        }
        for (std::size_t i = 0; i < r; ++i) {
          if (i) l += ",";
          l += alphabet[digits[i]];
        }
        l += ")";
        labels.push_back(std::move(l));
      }
      // tau_t acts on the subset alphabet through the subset action.
      auto subset_apply = [subs](const Perm& t, std::size_t s) {
        std::vector<Point> img;
        img.reserve(subs[s].size());
        for (Point x : subs[s]) img.push_back(t(x));
        std::sort(img.begin(), img.end());
        auto it = std::lower_bound(subs.begin(), subs.end(), img);
        return static_cast<std::size_t>(it - subs.begin());
      };
      return GroupAction::build(
          imprim_, std::move(labels),
          [m, r, N, subset_apply](const Perm& p, Point x) {
            WreathElement w = decode_imprimitive(p, m, r);
            std::vector<std::size_t> v(r);
            std::size_t rest = x;
            for (std::size_t i = r; i-- > 0;) {
              v[i] = rest % N;
              rest /= N;
            }
            Perm rho_inv = w.rho.inverse();
            std::size_t out = 0;
            for (std::size_t t = 0; t < r; ++t)
              out = out * N + subset_apply(w.tau[t], v[rho_inv(static_cast<Point>(t))]);
            return static_cast<Point>(out);
          });
    }
  }
  throw Error("unknown wreath action kind");
}

std::vector<std::vector<Point>> imprimitive_orbits_from_primitive_transitivity(
    const WreathGroup& g) {
  GroupAction prim = g.action(WreathActionKind::primitive, 1);
  if (!prim.is_transitive())
    throw PrimitiveNotTransitive("primitive action is not transitive");
  GroupAction imprim = g.action(WreathActionKind::imprimitive);
  GroupAction top = g.action(WreathActionKind::top);
  auto orbits = imprim.orbits();
  auto top_orbits = top.orbits();
  const std::size_t m = g.m();
  // Each imprimitive orbit must be (top orbit) x [m].
  for (const auto& orbit : orbits) {
    Point i0 = static_cast<Point>(orbit[0] / m);
    const std::vector<Point>* top_orbit = nullptr;
    for (const auto& t : top_orbits)
      if (std::binary_search(t.begin(), t.end(), i0)) {
        top_orbit = &t;
        break;
      }
    assert(top_orbit);
    std::vector<Point> expected;
    for (Point i : *top_orbit)
      for (std::size_t j = 0; j < m; ++j)
        expected.push_back(static_cast<Point>(i * m + j));
    std::sort(expected.begin(), expected.end());
    if (orbit != expected)
      throw Error("imprimitive orbit is not a product of a top orbit with [m]");
  }
  return orbits;
}

InducedBlockGroup induced_block_group(const WreathGroup& g,
                                      const std::vector<Point>& top_orbit) {
  GroupAction prim = g.action(WreathActionKind::primitive, 1);
  if (!prim.is_transitive())
    throw PrimitiveNotTransitive("primitive action is not transitive");
  GroupAction top = g.action(WreathActionKind::top);
  std::vector<Point> orbit = top_orbit;
  std::sort(orbit.begin(), orbit.end());
  {
    auto orb = top.orbit_of(orbit[0]);
    if (orb != orbit) throw Error("given set is not a top orbit");
  }
  const std::size_t m = g.m();
  const std::size_t rl = orbit.size();

  // Restriction of the imprimitive action to the stable subset, followed by
  // the permutation representation on those points.
  std::vector<Point> sub_points;
  std::vector<std::string> sub_labels;
  for (std::size_t t = 0; t < rl; ++t)
    for (std::size_t j = 0; j < m; ++j) {
      sub_points.push_back(static_cast<Point>(orbit[t] * m + j));
      sub_labels.push_back("(" + std::to_string(orbit[t] + 1) + "," +
                           std::to_string(j + 1) + ")");
    }
  std::vector<Point> flat_to_sub(g.m() * g.r(), 0);
  for (std::size_t s = 0; s < sub_points.size(); ++s) flat_to_sub[sub_points[s]] = static_cast<Point>(s);
  std::vector<Perm> restricted_perms;
  restricted_perms.reserve(g.order());
  for (const Perm& p : g.imprimitive_group().elements()) {
    std::vector<Point> img(sub_points.size());
    for (std::size_t s = 0; s < sub_points.size(); ++s)
      img[s] = flat_to_sub[p(sub_points[s])];
    restricted_perms.emplace_back(std::move(img));
  }
  PermGroup image = PermGroup::from_elements(sub_points.size(), restricted_perms);
  GroupAction restricted = GroupAction::build(
      image, sub_labels, [](const Perm& p, Point x) { return p(x); });

  // Gamma: rewrite each generator in coordinates of the orbit blocks,
  // ordered by least block label.
  std::vector<Point> rank(g.r(), 0);
  for (std::size_t t = 0; t < rl; ++t) rank[orbit[t]] = static_cast<Point>(t);
  std::vector<WreathElement> gamma_gens;
  for (const WreathElement& w : g.generators()) {
    WreathElement ge;
    ge.tau.resize(rl);
    std::vector<Point> rho_img(rl);
    for (std::size_t t = 0; t < rl; ++t) {
      rho_img[t] = rank[w.rho(orbit[t])];
      ge.tau[t] = w.tau[orbit[t]];
    }
    ge.rho = Perm(std::move(rho_img));
    gamma_gens.push_back(std::move(ge));
  }
  WreathGroup gamma = WreathGroup::generated(m, rl, std::move(gamma_gens));
  GroupAction gamma_action = gamma.action(WreathActionKind::imprimitive);
  if (!gamma_action.is_transitive())
    throw Error("induced block group is not transitive");

  // The point relabeling (i,j) -> (rank(i), j) conjugates each restricted
  // permutation onto the corresponding element of gamma.
  ActionIso iso;
  iso.point_map.resize(sub_points.size());
  for (std::size_t s = 0; s < sub_points.size(); ++s) {
    Point i = static_cast<Point>(sub_points[s] / m);
    Point j = static_cast<Point>(sub_points[s] % m);
    iso.point_map[s] = static_cast<Point>(rank[i] * m + j);
  }
  iso.elem_map.resize(image.order());
  for (std::size_t e = 0; e < image.order(); ++e) {
    const Perm& p = image.elements()[e];
    std::vector<Point> img(rl * m);
    for (std::size_t s = 0; s < sub_points.size(); ++s)
      img[iso.point_map[s]] = iso.point_map[p(static_cast<Point>(s))];
    std::size_t idx = gamma.imprimitive_group().index_of(Perm(std::move(img)));
    if (idx >= gamma.order()) throw Error("restricted element missing from gamma");
    iso.elem_map[e] = idx;
  }
  if (!is_action_isomorphism(restricted, gamma_action, iso))
    throw Error("induced block isomorphism failed verification");
  return InducedBlockGroup{std::move(restricted), std::move(gamma),
                           std::move(gamma_action), std::move(iso)};
}

PrimitiveStabilizerFamily primitive_stabilizer_family(const WreathGroup& g) {
  const std::size_t m = g.m(), r = g.r();
  GroupAction prim = g.action(WreathActionKind::primitive, 1);
  GroupAction imprim = g.action(WreathActionKind::imprimitive);
  // Lambda_{(i,j)} = {v : v_i = j}, enumerated over flat tuple indices.
  std::size_t npoints = prim.num_points();
  std::vector<std::vector<Point>> members(r * m);
  for (std::size_t x = 0; x < npoints; ++x) {
    std::size_t rest = x;
    for (std::size_t i = r; i-- > 0;) {
      std::size_t digit = rest % m;
      rest /= m;
      members[i * m + digit].push_back(static_cast<Point>(x));
    }
  }
  SetFamily family = SetFamily::from_members(members);
  if (family.size() != r * m)
    throw Error("coordinate-fiber family members are not distinct");
  std::vector<Point> index(r * m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Point> member = members[i * m + j];
      std::sort(member.begin(), member.end());
      std::size_t pos = family.find(member);
      assert(pos < family.size());
      index[i * m + j] = static_cast<Point>(pos);
    }
  FamilyActionResult result = stable_family_action(prim, imprim, family, index);
  return PrimitiveStabilizerFamily{std::move(family), std::move(prim),
                                   std::move(imprim), std::move(result)};
}

}  // namespace polygal
