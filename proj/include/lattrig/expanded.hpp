#pragma once
/**
 * @file expanded.hpp
 * @brief Expanded lattice angles: broken lines, signed LLS sequences, normal forms and sums.
 */

#include "angles.hpp"
#include "contfrac.hpp"
#include "plane.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattrig {

/// Oriented broken line A0 ... An whose edges lie at unit distance from the vertex V.
class BrokenLine {
 public:
  BrokenLine(LPoint vertex, std::vector<LPoint> points) : vertex_(std::move(vertex)), points_(std::move(points)) {
    validate(true);
  }

  /// Same, but tolerates consecutive collinear edges.
  static BrokenLine relaxed(LPoint vertex, std::vector<LPoint> points) {
    BrokenLine b;
    b.vertex_ = std::move(vertex);
    b.points_ = std::move(points);
    b.validate(false);
    return b;
  }

  const LPoint& vertex() const { return vertex_; }
  const std::vector<LPoint>& points() const { return points_; }
  size_t edges() const { return points_.size() - 1; }

  /// The same points traversed backwards.
  BrokenLine inverse() const {
    BrokenLine b = *this;
    std::reverse(b.points_.begin(), b.points_.end());
    return b;
  }

 private:
  BrokenLine() = default;

  void validate(bool strict) const {
    if (points_.size() < 2) throw std::invalid_argument("broken line needs at least one edge");
    for (size_t i = 0; i + 1 < points_.size(); ++i) {
      if (points_[i] == points_[i + 1]) throw std::domain_error("zero edge at index " + std::to_string(i));
      if (!unit_distance(points_[i], points_[i + 1], vertex_))
        throw std::domain_error("edge " + std::to_string(i) + " is not at unit distance from the vertex");
    }
    if (!strict) return;
    for (size_t i = 1; i + 1 < points_.size(); ++i)
      if (sgn3(points_[i - 1], points_[i], points_[i + 1]) == 0)
        throw std::domain_error("collinear edges at index " + std::to_string(i));
  }

  LPoint vertex_;
  std::vector<LPoint> points_;
};

/// Signed lengths at even positions, signed sines at odd positions.
inline std::vector<Int> signed_lls(const BrokenLine& b) {
  const auto& a = b.points();
  const LPoint& v = b.vertex();
  std::vector<Int> out;
  auto edge_sign = [&](size_t i) { return sgn3(a[i], v, a[i + 1]); };
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    if (i > 0) {
      int turn = sgn3(a[i - 1], a[i], a[i + 1]);
      Int s = turn == 0 ? Int(0) : abs_int(det(prim(a[i - 1] - a[i]), prim(a[i + 1] - a[i])));
      out.push_back(edge_sign(i - 1) * edge_sign(i) * turn * s);
    }
    out.push_back(edge_sign(i) * lattice_length(a[i], a[i + 1]));
  }
  return out;
}

/// Points of the frame-normalized line with A0 = (1,0), A1 = (1,a0); zero sines give collinear edges.
inline std::vector<LPoint> reconstruct_points(std::span<const Int> seq) {
  if (seq.empty() || seq.size() % 2 == 0) throw std::invalid_argument("sequence length must be odd");
  for (size_t i = 0; i < seq.size(); i += 2)
    if (seq[i] == 0) throw std::domain_error("zero length at index " + std::to_string(i));
  std::vector<LPoint> pts{{1, 0}, {1, seq[0]}};
  for (size_t k = 1; 2 * k < seq.size(); ++k) {
    const LPoint& ak = pts[k];
    const LPoint& prev = pts[k - 1];
    LVec av = as_vec(ak);
    LVec w = prim(ak - prev);
    int sigma = sign(det(as_vec(prev), av));
    const Int& len = seq[2 * k];
    Int r1 = len;
    Int r2 = det(w, av) - sigma * seq[2 * k - 1] * len;
    Int d = det(av, w);
    pts.push_back({(w.x * r1 - av.x * r2) * d, (w.y * r1 - av.y * r2) * d});
  }
  return pts;
}

inline BrokenLine reconstruct(std::span<const Int> seq) {
  for (size_t i = 1; i < seq.size(); i += 2)
    if (seq[i] == 0) throw std::domain_error("zero sine at index " + std::to_string(i));
  return BrokenLine(kOrigin, reconstruct_points(seq));
}

inline BrokenLine reconstruct(std::initializer_list<Int> seq) {
  std::vector<Int> v(seq);
  return reconstruct(std::span<const Int>(v));
}

/// Proper map taking V to O, A0 to (1,0) and A1 to (1,a0).
inline AffMap line_frame(const BrokenLine& b) {
  const auto& a = b.points();
  AffMap f = AffMap::to_x_axis(a[0] - b.vertex()).compose(AffMap::translation(kOrigin - b.vertex()));
  LPoint p1 = f(a[1]);
  Int k = (p1.x - 1) / p1.y;
  return AffMap(1, -k, 0, 1).compose(f);
}

/// y/x of the endpoint in the normalized frame.
inline ExtRat cf_value(const BrokenLine& b) {
  LPoint e = line_frame(b)(b.points().back());
  if (e.x == 0) return ExtRat::infinity();
  return ExtRat(Rat(e.y) / Rat(e.x));
}

namespace detail {

/// Doubled intersection count of the polyline with the ray V + t d, t > 0; counterclockwise crossings count positive.
inline Int doubled_crossings(const LPoint& v, std::span<const LPoint> pts, const LVec& d) {
  Int total = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    LVec a = pts[i] - v, b = pts[i + 1] - v;
    Int da = det(d, a), db = det(d, b);
    int dir = sign(db - da);
    if (da == 0 && db == 0) throw std::domain_error("edge lies on a ray through the vertex");
    if (da == 0) {
      if (dot(a, d) > 0) total += dir;
    } else if (db == 0) {
      if (dot(b, d) > 0) total += dir;
    } else if (sign(da) != sign(db)) {
      Int s = (da - db) * dot(a, d) + da * dot(b - a, d);
      if (sign(s) * sign(da - db) > 0) total += 2 * dir;
    }
  }
  return total;
}

}  // namespace detail

/// ½(#(r+) + #(r-)) with r± = ±(A0 - V).
inline Rat revolution_points(const LPoint& v, std::span<const LPoint> pts) {
  LVec d = pts.front() - v;
  Int c = detail::doubled_crossings(v, pts, d) + detail::doubled_crossings(v, pts, -d);
  return Rat(c) / 4;
}

inline Rat revolution(const BrokenLine& b) { return revolution_points(b.vertex(), b.points()); }

/// kπ + φ with φ the zero angle or arctan(phi_tan), phi_tan >= 1.
struct NormalForm {
  Int k = 0;
  Rat phi_tan = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

inline std::string to_string(const NormalForm& n) {
  if (n.phi_tan == 0) return n.k.str() + "*pi";
  return n.k.str() + "*pi + arctan(" + to_string(n.phi_tan) + ")";
}

inline NormalForm ordinary(const Rat& tan) {
  if (tan != 0 && tan < 1) throw std::domain_error("tangent below one");
  return {0, tan};
}

/// Tangent of φ from the endpoint ratio q/p of the normalized line.
inline Rat phi_tan_of_value(const ExtRat& v) {
  if (v.is_inf()) return 1;
  const Rat& x = v.value();
  if (x == 0) return 0;
  auto reduce = [](const Int& p, const Int& q) {
    return Rat(q) / Rat(p - floor_div(p - 1, q) * q);
  };
  if (x >= 1) return x;
  if (x > 0) return reduce(den(x), num(x));
  if (x > -1) return supplement_tan(reduce(den(x), -num(x)));
  return supplement_tan(-x);
}

inline NormalForm normal_form_of(const Rat& rev, const ExtRat& v) {
  Rat r4 = rev * 4;
  if (den(r4) != 1) throw std::logic_error("revolution number is not a multiple of 1/4");
  Int n = num(r4);
  if (floor_mod(n, 2) == 0) {
    if (v != ExtRat(0)) throw std::logic_error("half-turn revolution with endpoint off the axis");
    return {n / 2, 0};
  }
  return {(n - 1) / 2, phi_tan_of_value(v)};
}

inline NormalForm normalize(const BrokenLine& b) { return normal_form_of(revolution(b), cf_value(b)); }

/// Proper congruence of expanded angles: equal revolution and equal last ray in the normalized frame.
inline bool equivalent(const BrokenLine& a, const BrokenLine& b) {
  if (revolution(a) != revolution(b)) return false;
  LPoint ea = line_frame(a)(a.points().back()), eb = line_frame(b)(b.points().back());
  LVec da = prim(as_vec(ea)), db = prim(as_vec(eb));
  if (da.y != db.y) return false;
  if (da.y == 0) return da.x == db.x;
  return floor_mod(da.x - db.x, abs_int(da.y)) == 0;
}

/// Replaces (x, 0, y) by (x + y); a lone 0 becomes the empty sequence.
inline std::vector<Int> contract_zeros(std::vector<Int> s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] != 0) continue;
      s[i - 1] += s[i + 1];
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      changed = true;
      break;
    }
  }
  if (s.size() == 1 && s[0] == 0) return {};
  if (!s.empty() && (s.front() == 0 || s.back() == 0)) throw std::domain_error("degenerate sequence");
  return s;
}

/// Normal form of the expanded angle with signed LLS `seq`; zero sines are allowed.
inline NormalForm normalize(std::span<const Int> seq) {
  auto s = contract_zeros(std::vector<Int>(seq.begin(), seq.end()));
  if (s.empty()) return {0, 0};
  if (s.size() % 2 == 0) throw std::invalid_argument("sequence length must be odd");
  auto pts = reconstruct_points(s);
  return normal_form_of(revolution_points(kOrigin, pts), eval_signed(s));
}

inline NormalForm normalize(std::initializer_list<Int> seq) {
  std::vector<Int> v(seq);
  return normalize(std::span<const Int>(v));
}

/// Signed LLS of the standard representative of the normal form.
inline std::vector<Int> characteristic(const NormalForm& n) {
  std::vector<Int> out;
  Int m = abs_int(n.k);
  int s = n.k < 0 ? -1 : 1;
  if (n.phi_tan == 0) {
    if (n.k == 0) return out;
    for (Int i = 1; i < m; ++i) out.insert(out.end(), {Int(s), Int(-2 * s), Int(s), Int(-2 * s)});
    out.insert(out.end(), {Int(s), Int(-2 * s), Int(s)});
    return out;
  }
  if (n.phi_tan < 1) throw std::domain_error("tangent below one");
  for (Int i = 0; i < m; ++i) out.insert(out.end(), {Int(s), Int(-2 * s), Int(s), Int(-2 * s)});
  auto cf = to_odd_cf(n.phi_tan);
  out.insert(out.end(), cf.begin(), cf.end());
  return out;
}

/// Concatenation of characteristic sequences with the separators between them.
inline std::vector<Int> msum_sequence(std::span<const NormalForm> terms, std::span<const Int> seps) {
  if (terms.empty()) throw std::invalid_argument("empty sum");
  if (seps.size() + 1 != terms.size()) throw std::invalid_argument("separator count must be one less than the term count");
  std::vector<Int> seq;
  for (size_t i = 0; i < terms.size(); ++i) {
    auto c = characteristic(terms[i]);
    if (c.empty() && terms.size() > 1) throw std::domain_error("empty characteristic sequence");
    if (i > 0) seq.push_back(seps[i - 1]);
    seq.insert(seq.end(), c.begin(), c.end());
  }
  return seq;
}

/// M-sum of expanded angles.
inline NormalForm msum(std::span<const NormalForm> terms, std::span<const Int> seps) {
  return normalize(msum_sequence(terms, seps));
}

inline NormalForm msum(std::initializer_list<NormalForm> terms, std::initializer_list<Int> seps) {
  std::vector<NormalForm> t(terms);
  std::vector<Int> s(seps);
  return msum(std::span<const NormalForm>(t), std::span<const Int>(s));
}

/// -(kπ + φ) = (-k-1)π + (π - φ).
inline NormalForm opposite(const NormalForm& n) {
  if (n.phi_tan == 0) return {-n.k, 0};
  return {-n.k - 1, adjacent_tan(n.phi_tan)};
}

}  // namespace lattrig
