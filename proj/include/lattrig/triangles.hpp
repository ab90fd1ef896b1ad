#pragma once
/**
 * @file triangles.hpp
 * @brief Lattice triangles: sine formula, tangent triples, separators, shapes and congruence classes.
 */

#include "angles.hpp"
#include "expanded.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace lattrig {

/// Non-degenerate triangle with vertices stored clockwise.
class Triangle {
 public:
  Triangle(LPoint a, LPoint b, LPoint c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    Int d = det(b_ - a_, c_ - a_);
    if (d == 0) throw std::domain_error("degenerate triangle");
    if (d > 0) std::swap(b_, c_);
  }

  const LPoint& A() const { return a_; }
  const LPoint& B() const { return b_; }
  const LPoint& C() const { return c_; }
  std::array<LPoint, 3> vertices() const { return {a_, b_, c_}; }

  /// Lattice area, i.e. |det(B - A, C - A)|.
  Int area() const { return abs_int(det(b_ - a_, c_ - a_)); }

 private:
  LPoint a_, b_, c_;
};

/// ∠CAB, ∠ABC, ∠BCA.
inline std::array<OrdinaryAngle, 3> angles_of(const Triangle& t) {
  return {angle_of(t.C(), t.A(), t.B()), angle_of(t.A(), t.B(), t.C()), angle_of(t.B(), t.C(), t.A())};
}

inline std::array<Rat, 3> tans_of(const Triangle& t) {
  auto a = angles_of(t);
  return {itan(a[0]), itan(a[1]), itan(a[2])};
}

/// Common value of il(AB)/isin∠BCA = il(BC)/isin∠CAB = il(CA)/isin∠ABC = il(AB)il(BC)il(CA)/iS.
inline Rat sine_formula_check(const Triangle& t) {
  auto ang = angles_of(t);
  Int ab = lattice_length(t.A(), t.B()), bc = lattice_length(t.B(), t.C()), ca = lattice_length(t.C(), t.A());
  Rat r1 = Rat(ab) / Rat(isin(ang[2]));
  Rat r2 = Rat(bc) / Rat(isin(ang[0]));
  Rat r3 = Rat(ca) / Rat(isin(ang[1]));
  Rat r4 = Rat(ab * bc * ca) / Rat(t.area());
  if (r1 != r2 || r2 != r3 || r3 != r4) throw std::logic_error("sine formula violated");
  return r1;
}

struct SasCompletion {
  OrdinaryAngle bca;
  OrdinaryAngle abc;
  Int il_cb;
};

/// Remaining angles and edge of the triangle with il(AB) = c, il(AC) = b and ∠CAB ≅ alpha.
inline SasCompletion complete_sas(const Int& c, const Int& b, const OrdinaryAngle& alpha) {
  if (b < 1 || c < 1) throw std::domain_error("edge lengths must be positive");
  if (alpha.zero()) throw std::domain_error("zero angle");
  Trig tr = trig(alpha);
  LPoint d{b, 0}, o{0, 0}, e{tr.cos * c, tr.sin * c};
  return {angle_of(e, d, o), angle_of(o, e, d), lattice_length(d, e)};
}

namespace detail {

inline bool sum_conditions(const Rat& a, const Rat& b, const Rat& c) {
  std::array<Rat, 3> two{a, Rat(-1), b};
  ExtRat v = concat_rationals(std::span<const Rat>(two));
  bool first = v.is_inf() || v.value() < 0 || v.value() > a;
  if (!first) return false;
  std::array<Rat, 5> all{a, Rat(-1), b, Rat(-1), c};
  return concat_rationals(std::span<const Rat>(all)) == ExtRat(0);
}

}  // namespace detail

/// Index i such that (t_i, t_i+1, t_i+2) are consecutive angles of a lattice triangle.
inline std::optional<int> exists_from_tans(const Rat& t1, const Rat& t2, const Rat& t3) {
  std::array<Rat, 3> t{t1, t2, t3};
  for (const Rat& x : t)
    if (x < 1) throw std::domain_error("tangent below one");
  for (int i = 0; i < 3; ++i)
    if (detail::sum_conditions(t[i], t[(i + 1) % 3], t[(i + 2) % 3])) return i;
  return std::nullopt;
}

/// Minimal triangle with consecutive angles arctan(alpha), arctan(beta), arctan(gamma).
inline Triangle canonical_triangle(const Rat& alpha, const Rat& beta, const Rat& gamma) {
  if (alpha < 1 || beta < 1 || gamma < 1) throw std::domain_error("tangent below one");
  if (!detail::sum_conditions(alpha, beta, gamma)) throw std::domain_error("no triangle with these angles");
  Int sa = num(alpha), sb = num(beta), sc = num(gamma);
  Int g = gcd(gcd(sa, sb), sc);
  Int l1 = sb / g, l2 = sc / g;
  return Triangle({0, 0}, {l2 * den(alpha), l2 * sa}, {l1, 0});
}

/// Triangle B'OC' realizing ᾱ +_u β̄ +_v γ̄ = π.
inline Triangle triangle_from_sum(const Rat& alpha, const Rat& beta, const Rat& gamma, const Int& u, const Int& v) {
  std::array<NormalForm, 3> terms{ordinary(alpha), ordinary(beta), ordinary(gamma)};
  std::array<Int, 2> seps{u, v};
  auto seq = msum_sequence(terms, seps);
  if (normalize(seq) != NormalForm{1, 0}) throw std::domain_error("angle sum is not pi");
  auto pts = reconstruct_points(seq);
  size_t nb = to_odd_cf(alpha).size() / 2 + 1;
  size_t nc = nb + to_odd_cf(beta).size() / 2 + 1;
  const LPoint& b = pts[nb];
  const LPoint& c = pts[nc];
  return Triangle({b.x * c.y, b.y * c.y}, {0, 0}, {c.x * b.y, b.y * c.y});
}

/// Lattice points at unit distance from AB on the side of C, inside the closed triangle.
inline Int il1(const LPoint& a, const LPoint& b, const LPoint& c) {
  LVec u = prim(b - a);
  int orient = sign(det(b - a, c - a));
  if (orient == 0) throw std::domain_error("degenerate triangle");
  LVec w = AffMap::to_x_axis(u).inverse()(LVec{0, 1});
  LPoint p0 = a + (orient > 0 ? w : -w);
  Int lo, hi;
  bool has_lo = false, has_hi = false;
  auto bound = [&](const LPoint& from, const LPoint& to) {
    Int g0 = orient * det(to - from, p0 - from);
    Int g1 = orient * det(to - from, u);
    if (g1 == 0) return g0 >= 0;
    if (g1 > 0) {
      Int t = -floor_div(g0, g1);
      if (!has_lo || t > lo) lo = t;
      has_lo = true;
    } else {
      Int t = floor_div(g0, -g1);
      if (!has_hi || t < hi) hi = t;
      has_hi = true;
    }
    return true;
  };
  if (!bound(b, c) || !bound(c, a)) return 0;
  if (!has_lo || !has_hi) throw std::logic_error("unbounded unit-distance segment");
  return hi >= lo ? Int(hi - lo + 1) : Int(0);
}

/// (il(AB) - il1(AB;C) - 1, il(BC) - il1(BC;A) - 1, il(CA) - il1(CA;B) - 1).
inline std::array<Int, 3> edge_separators(const Triangle& t) {
  auto sep = [](const LPoint& p, const LPoint& q, const LPoint& r) { return lattice_length(p, q) - il1(p, q, r) - 1; };
  return {sep(t.A(), t.B(), t.C()), sep(t.B(), t.C(), t.A()), sep(t.C(), t.A(), t.B())};
}

enum class Shape { acute, right, obtuse };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::acute: return "acute";
    case Shape::right: return "right";
    case Shape::obtuse: return "obtuse";
  }
  return "";
}

inline Shape classify_shape(const Triangle& t) {
  auto s = edge_separators(t);
  if (std::any_of(s.begin(), s.end(), [](const Int& x) { return x > 0; })) return Shape::obtuse;
  if (std::any_of(s.begin(), s.end(), [](const Int& x) { return x == 0; })) return Shape::right;
  return Shape::acute;
}

/// Area and the lexicographically least rotation of the clockwise tangent triple.
struct TriangleClass {
  Int area;
  std::array<Rat, 3> tans;

  friend bool operator==(const TriangleClass&, const TriangleClass&) = default;
  friend bool operator<(const TriangleClass& a, const TriangleClass& b) {
    if (a.area != b.area) return a.area < b.area;
    return a.tans < b.tans;
  }
};

inline std::array<Rat, 3> least_rotation(const std::array<Rat, 3>& t) {
  std::array<Rat, 3> best = t;
  for (int i = 1; i < 3; ++i) {
    std::array<Rat, 3> r{t[i], t[(i + 1) % 3], t[(i + 2) % 3]};
    if (r < best) best = r;
  }
  return best;
}

inline TriangleClass class_of(const Triangle& t) { return {t.area(), least_rotation(tans_of(t))}; }

inline bool congruent_tri(const Triangle& a, const Triangle& b) { return class_of(a) == class_of(b); }

/// Class of the mirror image: order reversed, tangents transposed.
inline TriangleClass dual(const TriangleClass& c) {
  return {c.area, least_rotation({transpose_tan(c.tans[0]), transpose_tan(c.tans[2]), transpose_tan(c.tans[1])})};
}

struct ClassInfo {
  TriangleClass cls;
  Triangle representative;
  Shape shape;
  bool self_dual;
  bool pseudo_isosceles;
  bool isosceles;
  bool pseudo_regular;
  bool regular;
};

inline ClassInfo describe(const Triangle& t) {
  TriangleClass c = class_of(t);
  const auto& x = c.tans;
  bool sd = dual(c) == c;
  bool pi = x[0] == x[1] || x[1] == x[2] || x[0] == x[2];
  bool pr = x[0] == x[1] && x[1] == x[2];
  return {c, t, classify_shape(t), sd, pi, pi && sd, pr, pr && sd};
}

/// One entry per congruence class of area at most max_area, ordered by class.
inline std::vector<ClassInfo> enumerate_classes(const Int& max_area) {
  if (max_area < 1) throw std::domain_error("max_area must be positive");
  std::set<TriangleClass> seen;
  std::vector<ClassInfo> out;
  for (Int p = 1; p <= max_area; ++p)
    for (Int r = 1; p * r <= max_area; ++r)
      for (Int q = 0; q < p * r; ++q) {
        Triangle t({0, 0}, {p, 0}, {q, r});
        TriangleClass c = class_of(t);
        if (seen.insert(c).second) out.push_back(describe(t));
      }
  std::sort(out.begin(), out.end(), [](const ClassInfo& a, const ClassInfo& b) { return a.cls < b.cls; });
  return out;
}

}  // namespace lattrig
