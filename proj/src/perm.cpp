#include "polygal/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

#include "polygal/errors.hpp"

namespace polygal {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
#ifndef NDEBUG
  std::vector<bool> seen(img_.size(), false);
  for (Point p : img_) {
    assert(p < img_.size() && !seen[p] && "images must form a bijection");
    seen[p] = true;
  }
#endif
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text, std::size_t degree) {
  const std::string& s = text;
  // Image-list form: [2,1,3]
  auto first_nonspace = s.find_first_not_of(" \t");
  if (first_nonspace != std::string::npos && s[first_nonspace] == '[') {
    std::vector<Point> img;
    std::string body = s.substr(first_nonspace + 1);
    auto close = body.find(']');
    if (close == std::string::npos) throw Error("unterminated image list: " + text);
    body = body.substr(0, close);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      long v = std::stol(tok);
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw Error("point out of range in: " + text);
      img.push_back(static_cast<Point>(v - 1));
    }
    if (img.size() != degree) throw Error("image list has wrong length: " + text);
    return Perm(std::move(img));
  }
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i + 1 < s.size() && (s.compare(i, 2, "id") == 0 || s.compare(i, 2, "()") == 0))
    return Perm(std::move(img));
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '(') throw Error("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cyc;
    while (true) {
      skip_ws();
      if (i >= s.size()) throw Error("unterminated cycle in: " + text);
      if (s[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])))) ++j;
      if (j == i) throw Error("expected point in cycle: " + text);
      long v = std::stol(s.substr(i, j - i));
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw Error("point out of range in: " + text);
      cyc.push_back(static_cast<Point>(v - 1));
      i = j;
      skip_ws();
      if (i < s.size() && s[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& other) const {
  assert(degree() == other.degree());
  std::vector<Point> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[i] = img_[other.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<Point> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[img_[i]] = static_cast<Point>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<bool> seen(degree(), false);
  std::vector<std::size_t> type;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Perm::to_cycle_string() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out.push_back('(');
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out.push_back(' ');
      out += std::to_string(j + 1);
      first = false;
    }
    out.push_back(')');
  }
  return out.empty() ? "id" : out;
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators,
                             std::size_t cap) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  std::vector<Perm> elems = {Perm::identity(degree)};
  std::vector<Perm> frontier = elems;
  // BFS over right multiplication by generators.
  auto insert_sorted = [&](const Perm& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it != elems.end() && *it == p) return false;
    elems.insert(it, p);
    return true;
  };
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& g : generators) {
        Perm p = e * g;
        if (insert_sorted(p)) {
          if (elems.size() > cap)
            throw ClosureExceedsCap("closure exceeds cap " + std::to_string(cap));
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_ = std::move(elems);
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  g.generators_ = g.small_generating_set();
  return g;
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return closure(degree, {});
}

PermGroup PermGroup::symmetric(std::size_t degree, std::size_t cap) {
  if (degree <= 1) return trivial(degree);
  std::vector<Perm> gens;
  {
    std::vector<Point> t(degree);
    std::iota(t.begin(), t.end(), Point{0});
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (degree > 2) {
    std::vector<Point> c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = static_cast<Point>((i + 1) % degree);
    gens.emplace_back(std::move(c));
  }
  return closure(degree, std::move(gens), cap);
}

PermGroup PermGroup::alternating(std::size_t degree, std::size_t cap) {
  if (degree <= 2) return trivial(degree);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 2 < degree; ++i) {
    std::vector<Point> t(degree);
    std::iota(t.begin(), t.end(), Point{0});
    // 3-cycle (1 i+2 i+3) in 1-based terms
    t[0] = static_cast<Point>(i + 1);
    t[i + 1] = static_cast<Point>(i + 2);
    t[i + 2] = 0;
    gens.emplace_back(std::move(t));
  }
  return closure(degree, std::move(gens), cap);
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return order();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const Perm& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

bool PermGroup::same_elements(const PermGroup& g) const {
  return degree_ == g.degree_ && elements_ == g.elements_;
}

std::vector<Perm> PermGroup::small_generating_set() const {
  std::vector<Perm> gens;
  if (elements_.size() <= 1) return gens;
  PermGroup sub = trivial(degree_);
  for (const Perm& e : elements_) {
    if (sub.contains(e)) continue;
    gens.push_back(e);
    std::vector<Perm> g2 = gens;
    sub = closure(degree_, std::move(g2), elements_.size());
    if (sub.order() == elements_.size()) break;
  }
  return gens;
}

}  // namespace polygal
