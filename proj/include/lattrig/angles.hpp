#pragma once
/**
 * @file angles.hpp
 * @brief Ordinary lattice angles: trigonometry, sails and the elementary identities.
 */

#include "contfrac.hpp"
#include "plane.hpp"

#include <stdexcept>
#include <vector>

namespace lattrig {

/// Angle with a lattice vertex and two rays with lattice directions. Rays are stored primitive.
class OrdinaryAngle {
 public:
  OrdinaryAngle(LPoint vertex, const LVec& r1, const LVec& r2)
      : vertex_(std::move(vertex)), ray1_(prim(r1)), ray2_(prim(r2)) {
    if (ray1_ == -ray2_) throw std::domain_error("straight angle is not ordinary");
  }

  const LPoint& vertex() const { return vertex_; }
  const LVec& ray1() const { return ray1_; }
  const LVec& ray2() const { return ray2_; }
  bool zero() const { return ray1_ == ray2_; }

 private:
  LPoint vertex_;
  LVec ray1_, ray2_;
};

struct Trig {
  Int sin;
  Int cos;
  Rat tan;
};

namespace detail {

/// Linear map F with F(ray1) = (1, 0) and F(ray2) = (c', sin), sin > 0.
inline AffMap upper_frame(const OrdinaryAngle& a) {
  AffMap f = AffMap::to_x_axis(a.ray1());
  if (f(a.ray2()).y < 0) f = AffMap(1, 0, 0, -1).compose(f);
  return f;
}

}  // namespace detail

inline Trig trig(const OrdinaryAngle& a) {
  if (a.zero()) return {0, 1, Rat(0)};
  LVec w = detail::upper_frame(a)(a.ray2());
  Int s = w.y;
  Int c = floor_mod(w.x - 1, s) + 1;
  return {s, c, Rat(s) / Rat(c)};
}

inline Int isin(const OrdinaryAngle& a) { return trig(a).sin; }
inline Int icos(const OrdinaryAngle& a) { return trig(a).cos; }
inline Rat itan(const OrdinaryAngle& a) { return trig(a).tan; }

/// Map F with F(vertex) = O, F(ray1) = (1, 0), F(ray2) = (cos, sin).
inline AffMap canonical_frame(const OrdinaryAngle& a) {
  AffMap f = detail::upper_frame(a);
  if (!a.zero()) {
    Trig t = trig(a);
    LVec w = f(a.ray2());
    Int k = (w.x - t.cos) / t.sin;
    f = AffMap(1, -k, 0, 1).compose(f);
  }
  return f.compose(AffMap::translation(kOrigin - a.vertex()));
}

/// ∠((1,0), (n, m)) for q = m/n >= 1; q = 0 gives the zero angle.
inline OrdinaryAngle arctan(const Rat& q) {
  if (q == 0) return OrdinaryAngle(kOrigin, {1, 0}, {1, 0});
  if (q < 1) throw std::domain_error("tangent below one");
  return OrdinaryAngle(kOrigin, {1, 0}, {den(q), num(q)});
}

inline bool congruent(const OrdinaryAngle& a, const OrdinaryAngle& b) { return itan(a) == itan(b); }

inline bool is_right(const OrdinaryAngle& a) {
  Rat t = itan(a);
  return t == 1 || t == 2;
}

/// Swap of the two rays.
inline OrdinaryAngle transpose(const OrdinaryAngle& a) { return OrdinaryAngle(a.vertex(), a.ray2(), a.ray1()); }

/// ∠BOA' for ∠AOB, where A' is the reflection of A in O.
inline OrdinaryAngle adjacent(const OrdinaryAngle& a) { return OrdinaryAngle(a.vertex(), a.ray2(), -a.ray1()); }

/// ∠AOB.
inline OrdinaryAngle angle_of(const LPoint& a, const LPoint& o, const LPoint& b) { return OrdinaryAngle(o, a - o, b - o); }

/// Tangent of the transposed angle, via sin/cos -> sin/cos^{-1} mod sin.
inline Rat transpose_tan(const Rat& t) {
  if (t == 0) return t;
  if (t < 1) throw std::domain_error("tangent below one");
  return Rat(num(t)) / Rat(mod_inverse(den(t), num(t)));
}

/// Tangent of the adjacent angle, via sin/cos -> sin/(-cos)^{-1} mod sin.
inline Rat adjacent_tan(const Rat& t) {
  if (t < 1) throw std::domain_error("tangent below one");
  return Rat(num(t)) / Rat(mod_inverse(-den(t), num(t)));
}

/// Tangent of ∠A'OB for ∠AOB, i.e. s/(s - c); the transpose of the adjacent angle.
inline Rat supplement_tan(const Rat& t) {
  if (t < 1) throw std::domain_error("tangent below one");
  if (num(t) == 1) return 1;
  return Rat(num(t)) / Rat(num(t) - den(t));
}

/// Boundary of the convex hull of the nonzero lattice points of the angle.
struct Sail {
  std::vector<LPoint> vertices;
  std::vector<Int> lls;
};

/// Sail from the odd expansion of the tangent: V0 = (1,0), then (q_2i, p_2i).
inline Sail sail(const OrdinaryAngle& a) {
  if (a.zero()) throw std::domain_error("no sail");
  Rat t = itan(a);
  auto cf = to_odd_cf(t);
  auto conv = convergents(cf);
  AffMap back = canonical_frame(a).inverse();
  Sail s;
  s.vertices.push_back(back(LPoint{1, 0}));
  for (size_t i = 0; i < conv.size(); i += 2) s.vertices.push_back(back(LPoint{conv[i].second, conv[i].first}));
  s.lls = cf;
  return s;
}

}  // namespace lattrig
