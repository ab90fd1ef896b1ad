#pragma once
/**
 * @file svg.hpp
 * @brief Deterministic SVG figures over the integer lattice. One lattice unit is 32 px, y points up.
 */

#include "lattrig/plane.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lattrig::svg {

inline constexpr long long kUnit = 32;

enum class Role { line, hull, ray, edge };

/// Figure in lattice coordinates; the view box is the content bounding box plus one cell.
class Figure {
 public:
  void polyline(std::vector<LPoint> pts, Role role = Role::line) { add_shape({std::move(pts), role, false}); }
  void polygon(std::vector<LPoint> pts, Role role = Role::edge) { add_shape({std::move(pts), role, true}); }

  /// Segment from `from` along `dir`, scaled by `len`.
  void ray(const LPoint& from, const LVec& dir, const Int& len) { add_shape({{from, from + len * dir}, Role::ray, false}); }

  void label(const LPoint& at, std::string text) {
    extend(at);
    labels_.push_back({at, std::move(text)});
  }

  /// Marks a region whose lattice points are drawn as grid dots.
  void grid(const LPoint& lo, const LPoint& hi) {
    extend(lo);
    extend(hi);
    grids_.push_back({lo, hi});
  }

  void caption(std::string text) { captions_.push_back(std::move(text)); }

  std::string str() const {
    if (!has_box_) throw std::logic_error("empty figure");
    Int w = (hi_.x - lo_.x + 2) * kUnit;
    Int h = (hi_.y - lo_.y + 2) * kUnit + Int(captions_.size()) * 18;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\" width=\"" << w
      << "\" height=\"" << h << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& g : grids_)
      for (Int x = g.lo.x; x <= g.hi.x; ++x)
        for (Int y = g.lo.y; y <= g.hi.y; ++y)
          o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"1.5\" fill=\"#999\"/>\n";
    for (const auto& s : shapes_) {
      o << '<' << (s.closed ? "polygon" : "polyline") << " points=\"";
      for (size_t i = 0; i < s.pts.size(); ++i) o << (i ? " " : "") << px(s.pts[i].x) << ',' << py(s.pts[i].y);
      o << "\" fill=\"none\" " << style(s.role) << "/>\n";
      if (s.role != Role::ray)
        for (const auto& p : s.pts) o << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    for (const auto& l : labels_)
      o << "<text x=\"" << px(l.at.x) + 4 << "\" y=\"" << py(l.at.y) - 4 << "\" font-family=\"monospace\" font-size=\"11\">"
        << escape(l.text) << "</text>\n";
    Int base = (hi_.y - lo_.y + 2) * kUnit;
    for (size_t i = 0; i < captions_.size(); ++i)
      o << "<text x=\"4\" y=\"" << base + Int(i + 1) * 18 - 4 << "\" font-family=\"monospace\" font-size=\"12\">"
        << escape(captions_[i]) << "</text>\n";
    o << "</svg>\n";
    return o.str();
  }

  void write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << str();
    if (!f) throw std::runtime_error("cannot write " + path);
  }

 private:
  struct Shape {
    std::vector<LPoint> pts;
    Role role;
    bool closed;
  };
  struct Label {
    LPoint at;
    std::string text;
  };
  struct Grid {
    LPoint lo, hi;
  };

  void add_shape(Shape s) {
    for (const auto& p : s.pts) extend(p);
    shapes_.push_back(std::move(s));
  }

  void extend(const LPoint& p) {
    if (!has_box_) {
      lo_ = hi_ = p;
      has_box_ = true;
      return;
    }
    lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
    hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
  }

  Int px(const Int& x) const { return (x - lo_.x + 1) * kUnit; }
  Int py(const Int& y) const { return (hi_.y - y + 1) * kUnit; }

  static const char* style(Role r) {
    switch (r) {
      case Role::line: return "stroke=\"#1f4e9c\" stroke-width=\"2\"";
      case Role::hull: return "stroke=\"#b03a2e\" stroke-width=\"2\"";
      case Role::ray: return "stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
      case Role::edge: return "stroke=\"black\" stroke-width=\"2\"";
    }
    return "";
  }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else if (c == '&') out += "&amp;";
      else out += c;
    }
    return out;
  }

  bool has_box_ = false;
  LPoint lo_{0, 0}, hi_{0, 0};
  std::vector<Shape> shapes_;
  std::vector<Label> labels_;
  std::vector<Grid> grids_;
  std::vector<std::string> captions_;
};

/// Bounding box of a point set.
inline std::pair<LPoint, LPoint> bbox(std::span<const LPoint> pts) {
  LPoint lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return {lo, hi};
}

}  // namespace lattrig::svg
