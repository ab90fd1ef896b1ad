#pragma once
/**
 * @file plane.hpp
 * @brief Lattice points, vectors, unimodular affine maps and integer invariants.
 */

#include "numbers.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lattrig {

struct LVec {
  Int x, y;

  friend LVec operator+(const LVec& a, const LVec& b) { return {a.x + b.x, a.y + b.y}; }
  friend LVec operator-(const LVec& a, const LVec& b) { return {a.x - b.x, a.y - b.y}; }
  friend LVec operator-(const LVec& a) { return {-a.x, -a.y}; }
  friend LVec operator*(const Int& k, const LVec& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const LVec&, const LVec&) = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

struct LPoint {
  Int x, y;

  friend LPoint operator+(const LPoint& p, const LVec& v) { return {p.x + v.x, p.y + v.y}; }
  friend LPoint operator-(const LPoint& p, const LVec& v) { return {p.x - v.x, p.y - v.y}; }
  friend LVec operator-(const LPoint& a, const LPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const LPoint&, const LPoint&) = default;
  friend bool operator<(const LPoint& a, const LPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

inline const LPoint kOrigin{0, 0};

inline LVec as_vec(const LPoint& p) { return {p.x, p.y}; }
inline LPoint as_point(const LVec& v) { return {v.x, v.y}; }

inline Int det(const LVec& a, const LVec& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const LVec& a, const LVec& b) { return a.x * b.x + a.y * b.y; }

/// v = g * w with w primitive and g = gcd of the coordinates.
inline std::pair<LVec, Int> primitive(const LVec& v) {
  if (v.is_zero()) throw std::domain_error("zero vector has no primitive direction");
  Int g = gcd(v.x, v.y);
  return {{v.x / g, v.y / g}, g};
}

inline LVec prim(const LVec& v) { return primitive(v).first; }

/// Number of lattice segments in AB.
inline Int lattice_length(const LPoint& a, const LPoint& b) {
  if (a == b) throw std::domain_error("degenerate segment");
  return primitive(b - a).second;
}

/// Signed doubled area det(B - A, C - A).
inline Int lattice_area2x(const LPoint& a, const LPoint& b, const LPoint& c) { return det(b - a, c - a); }

/// Orientation of the couple (BA, BC).
inline int sgn3(const LPoint& a, const LPoint& b, const LPoint& c) { return sign(det(a - b, c - b)); }

/// Lattice distance from C to the line AB equals one.
inline bool unit_distance(const LPoint& a, const LPoint& b, const LPoint& c) {
  return abs_int(det(prim(b - a), c - a)) == 1;
}

/// Absolute doubled shoelace area.
inline Int polygon_area2x(std::span<const LPoint> pts) {
  Int s = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const LPoint& p = pts[i];
    const LPoint& q = pts[(i + 1) % pts.size()];
    s += p.x * q.y - p.y * q.x;
  }
  return abs_int(s);
}

/// x -> L x + shift with det L = ±1.
class AffMap {
 public:
  AffMap() : a_(1), b_(0), c_(0), d_(1), shift_{0, 0} {}
  AffMap(Int a, Int b, Int c, Int d, LVec shift = {0, 0})
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), shift_(std::move(shift)) {
    Int dt = a_ * d_ - b_ * c_;
    if (dt != 1 && dt != -1) throw std::domain_error("map is not unimodular");
  }

  LVec operator()(const LVec& v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }
  LPoint operator()(const LPoint& p) const {
    LVec v = (*this)(as_vec(p));
    return {v.x + shift_.x, v.y + shift_.y};
  }

  Int det() const { return a_ * d_ - b_ * c_; }
  bool proper() const { return det() == 1; }

  /// (this ∘ g)(x) = this(g(x)).
  AffMap compose(const AffMap& g) const {
    AffMap r;
    r.a_ = a_ * g.a_ + b_ * g.c_;
    r.b_ = a_ * g.b_ + b_ * g.d_;
    r.c_ = c_ * g.a_ + d_ * g.c_;
    r.d_ = c_ * g.b_ + d_ * g.d_;
    r.shift_ = (*this)(g.shift_) + shift_;
    return r;
  }

  AffMap inverse() const {
    Int dt = det();
    AffMap r;
    r.a_ = d_ * dt;
    r.b_ = -b_ * dt;
    r.c_ = -c_ * dt;
    r.d_ = a_ * dt;
    r.shift_ = -r(shift_);
    return r;
  }

  static AffMap translation(const LVec& v) { return AffMap(1, 0, 0, 1, v); }

  /// Proper linear map sending the primitive vector v to (1, 0).
  static AffMap to_x_axis(const LVec& v) {
    auto [g, u, w] = ext_gcd(v.x, v.y);
    if (g != 1) throw std::domain_error("vector is not primitive");
    return AffMap(u, w, -v.y, v.x);
  }

 private:
  Int a_, b_, c_, d_;
  LVec shift_;
};

inline std::string to_string(const LPoint& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }
inline std::string to_string(const LVec& v) { return "(" + v.x.str() + "," + v.y.str() + ")"; }

/// "x,y;x,y;..."
inline std::vector<LPoint> parse_points(std::string_view s) {
  std::vector<LPoint> out;
  for (auto part : split(s, ';')) {
    auto xy = parse_int_list(part, ',');
    if (xy.size() != 2) throw std::invalid_argument("malformed point '" + std::string(part) + "'");
    out.push_back({xy[0], xy[1]});
  }
  return out;
}

}  // namespace lattrig
