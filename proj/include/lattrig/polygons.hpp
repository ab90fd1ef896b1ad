#pragma once
/**
 * @file polygons.hpp
 * @brief Convex lattice polygons: the 2π criterion, separator extraction, synthesis and toric applications.
 */

#include "angles.hpp"
#include "expanded.hpp"
#include "triangles.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lattrig {

/// Strictly convex polygon with vertices stored counterclockwise.
class Polygon {
 public:
  explicit Polygon(std::vector<LPoint> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw std::domain_error("polygon needs at least three vertices");
    Int twice = 0;
    for (size_t i = 0; i < v_.size(); ++i) twice += det(as_vec(v_[i]), as_vec(v_[(i + 1) % v_.size()]));
    if (twice < 0) std::reverse(v_.begin(), v_.end());
    size_t n = v_.size();
    for (size_t i = 0; i < n; ++i)
      if (det(v_[(i + 1) % n] - v_[i], v_[(i + 2) % n] - v_[(i + 1) % n]) <= 0)
        throw std::domain_error("polygon is not strictly convex at vertex " + std::to_string((i + 1) % n));
  }

  const std::vector<LPoint>& vertices() const { return v_; }
  size_t size() const { return v_.size(); }
  const LPoint& operator[](size_t i) const { return v_[i % v_.size()]; }

 private:
  std::vector<LPoint> v_;
};

/// Angle at vertex i: rays to the next and to the previous vertex.
inline std::vector<OrdinaryAngle> angles_of(const Polygon& p) {
  std::vector<OrdinaryAngle> out;
  size_t n = p.size();
  for (size_t i = 0; i < n; ++i) out.push_back(angle_of(p[i + 1], p[i], p[i + n - 1]));
  return out;
}

inline std::vector<Rat> tans_of(const Polygon& p) {
  std::vector<Rat> out;
  for (const auto& a : angles_of(p)) out.push_back(itan(a));
  return out;
}

/// The normal forms of π - α_i.
inline std::vector<NormalForm> exterior_terms(std::span<const Rat> tans) {
  std::vector<NormalForm> out;
  for (const Rat& t : tans) {
    if (t < 1) throw std::domain_error("tangent below one");
    out.push_back(ordinary(adjacent_tan(t)));
  }
  return out;
}

namespace detail {

/// Position of the first element after each term's characteristic sequence.
inline std::vector<size_t> junctions(std::span<const NormalForm> terms) {
  std::vector<size_t> out;
  size_t pos = 0;
  for (const auto& t : terms) {
    pos += characteristic(t).size();
    out.push_back(pos);
    ++pos;
  }
  out.pop_back();
  return out;
}

/// Ray directions at the ends of the terms of a reconstructed M-sum line, starting with A0.
inline std::vector<LVec> term_directions(std::span<const NormalForm> terms, std::span<const Int> seps) {
  auto seq = msum_sequence(terms, seps);
  auto pts = reconstruct_points(seq);
  std::vector<LVec> dirs{as_vec(pts.front())};
  size_t edge = 0;
  for (const auto& t : terms) {
    edge += characteristic(t).size() / 2 + 1;
    dirs.push_back(as_vec(pts[edge]));
  }
  return dirs;
}

/// True when the counterclockwise arc (from, to], shorter than π, contains the direction d.
inline bool arc_contains(const LVec& from, const LVec& to, const LVec& d) {
  return det(from, d) > 0 && det(d, to) >= 0;
}

}  // namespace detail

/// Separators read off the union of the sails of the angles between consecutive edge vectors.
inline std::vector<Int> extract_M(const Polygon& p) {
  size_t n = p.size();
  std::vector<LVec> dirs;
  for (size_t i = 0; i < n; ++i) dirs.push_back(prim(p[i] - p[i + n - 1]));
  std::vector<LPoint> line{as_point(dirs[0])};
  for (size_t i = 0; i < n; ++i) {
    Sail s = sail(OrdinaryAngle(kOrigin, dirs[i], dirs[(i + 1) % n]));
    line.insert(line.end(), s.vertices.begin() + 1, s.vertices.end());
  }
  auto seq = signed_lls(BrokenLine::relaxed(kOrigin, line));
  auto terms = exterior_terms(tans_of(p));
  std::vector<Int> m;
  for (size_t j : detail::junctions(terms)) m.push_back(seq.at(j));
  return m;
}

/// Positive integers a with Σ a_i d_i = 0 for directions turning once counterclockwise.
inline std::vector<Int> positive_combination(std::span<const LVec> d) {
  size_t n = d.size();
  LVec s{0, 0};
  for (const auto& v : d) s = s + v;
  std::vector<Rat> a(n, Rat(1));
  if (!s.is_zero()) {
    LVec t = -s;
    bool found = false;
    for (size_t i = 0; i < n && !found; ++i) {
      const LVec& u = d[i];
      const LVec& w = d[(i + 1) % n];
      Int dd = det(u, w);
      if (dd <= 0) continue;
      Rat x = Rat(det(t, w)) / Rat(dd), y = Rat(det(u, t)) / Rat(dd);
      if (x < 0 || y < 0) continue;
      a[i] += x;
      a[(i + 1) % n] += y;
      found = true;
    }
    if (!found) throw std::logic_error("no positive combination of the edge directions");
  }
  Int l = 1;
  for (const Rat& x : a) l = l / gcd(l, den(x)) * den(x);
  std::vector<Int> out;
  Int g = 0;
  for (const Rat& x : a) {
    out.push_back(num(x * l));
    g = gcd(g, out.back());
  }
  for (auto& x : out) x /= g;
  return out;
}

/// Convex polygon whose i-th angle is arctan(tans[i]), given separators M with Σ_M (π - α_i) = 2π.
inline Polygon synthesize_polygon(std::span<const Rat> tans, std::span<const Int> seps) {
  auto terms = exterior_terms(tans);
  auto seq = msum_sequence(terms, seps);
  if (normalize(seq) != NormalForm{2, 0}) throw std::domain_error("exterior angles do not sum to 2pi");
  auto dirs = detail::term_directions(terms, seps);
  dirs.pop_back();
  auto a = positive_combination(dirs);
  std::vector<LPoint> v;
  LPoint p = kOrigin;
  for (size_t i = 0; i < dirs.size(); ++i) {
    p = p + a[i] * dirs[i];
    v.push_back(p);
  }
  return Polygon(std::move(v));
}

/// Bounded search for M with Σ_M (π - α_i) = 2π; boxes [-b, b] are tried for b = 0, ..., bound.
inline std::optional<std::vector<Int>> polygon_criterion(std::span<const Rat> tans, const Int& bound = 4) {
  size_t n = tans.size();
  if (n < 3) throw std::domain_error("polygon needs at least three angles");
  auto terms = exterior_terms(tans);
  std::vector<Int> m;
  std::optional<std::vector<Int>> found;
  Int box = 0;
  auto dfs = [&](auto&& self, size_t j) -> void {
    if (found) return;
    std::span<const NormalForm> head(terms.data(), j + 1);
    auto dirs = detail::term_directions(head, m);
    for (size_t i = 1; i + 1 < dirs.size(); ++i)
      if (detail::arc_contains(dirs[i], dirs[i + 1], dirs[0]) && !(j + 1 == n && i + 2 == dirs.size())) return;
    if (j + 1 == n) {
      if (prim(dirs.back()) == prim(dirs.front()) && normalize(msum_sequence(terms, m)) == NormalForm{2, 0}) found = m;
      return;
    }
    for (Int s = -box; s <= box && !found; ++s) {
      m.push_back(s);
      self(self, j + 1);
      m.pop_back();
    }
  };
  for (box = 0; box <= bound && !found; ++box) dfs(dfs, 0);
  return found;
}

/// Unordered pair (tan α, tan αᵗ) naming a cyclic quotient singularity.
class SingularityPair {
 public:
  SingularityPair(const Rat& a, const Rat& b) : a_(a), b_(b) {
    if (a < 1 || b < 1) throw std::domain_error("tangent below one");
    if (transpose_tan(a) != b) throw std::domain_error("not a transpose pair");
    if (b_ < a_) std::swap(a_, b_);
  }
  static SingularityPair of(const Rat& a) { return SingularityPair(a, transpose_tan(a)); }

  const Rat& first() const { return a_; }
  const Rat& second() const { return b_; }
  bool smooth() const { return a_ == 1; }

  friend bool operator==(const SingularityPair&, const SingularityPair&) = default;
  friend bool operator<(const SingularityPair& x, const SingularityPair& y) {
    return x.a_ < y.a_ || (x.a_ == y.a_ && x.b_ < y.b_);
  }

 private:
  Rat a_, b_;
};

struct ToricTriangleWitness {
  std::array<int, 3> permutation;
  std::array<Rat, 3> tans;
};

/// Some permutation and choice c_i ∈ {a_i, b_i} for which (c_1, c_2, c_3) are angles of a triangle.
inline std::optional<ToricTriangleWitness> toric_triangle_check(const std::array<SingularityPair, 3>& pairs) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      std::array<Rat, 3> c;
      for (int i = 0; i < 3; ++i) {
        const auto& p = pairs[perm[i]];
        c[i] = (mask >> i) & 1 ? p.second() : p.first();
      }
      if (detail::sum_conditions(c[0], c[1], c[2])) return ToricTriangleWitness{perm, c};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

struct ToricPolygon {
  std::vector<Rat> tans;
  std::vector<Int> seps;
  Polygon polygon;
};

/// Polygon whose singular angles are exactly the given pairs; the remaining angles are arctan 1.
inline ToricPolygon toric_polygon_build(std::span<const SingularityPair> pairs) {
  if (pairs.empty()) throw std::domain_error("empty singularity collection");
  std::vector<Rat> tans;
  for (const auto& p : pairs) tans.push_back(p.first());
  auto terms = exterior_terms(tans);
  std::vector<Int> ones(terms.size() - 1, Int(1));
  auto head = msum_sequence(terms, ones);
  auto pts = reconstruct_points(head);
  LPoint b = pts.back();

  std::vector<LPoint> line = pts;
  Sail rest = sail(OrdinaryAngle(kOrigin, as_vec(b), {-1, 0}));
  for (size_t i = 0; i + 1 < rest.vertices.size(); ++i) {
    LVec step = rest.vertices[i + 1] - rest.vertices[i];
    auto [u, len] = primitive(step);
    for (Int k = 1; k <= len; ++k) line.push_back(rest.vertices[i] + k * u);
  }
  size_t chain_edges = line.size() - pts.size();
  line.push_back({0, -1});
  line.push_back({1, 0});
  auto seq = signed_lls(BrokenLine::relaxed(kOrigin, line));

  std::vector<Rat> all = tans;
  for (size_t i = 0; i < chain_edges + 2; ++i) all.push_back(1);
  auto all_terms = exterior_terms(all);
  std::vector<Int> seps;
  for (size_t j : detail::junctions(all_terms)) seps.push_back(seq.at(j));
  Polygon poly = synthesize_polygon(all, seps);
  return {all, seps, std::move(poly)};
}

}  // namespace lattrig
