#pragma once
/**
 * @file cli.hpp
 * @brief The `lattrig` command line: argument grammar, dispatch, JSON and text output.
 *
 * Exit codes: 0 success, 1 domain error, 2 usage or parse error. Errors print {"error": ...} on stdout.
 */

#include "lattrig/irrational.hpp"
#include "lattrig/polygons.hpp"
#include "lattrig/triangles.hpp"
#include "svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lattrig::cli {

using nlohmann::json;

/// Thrown for malformed arguments that CLI11 itself accepts.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace io {

inline json j(const Int& n) { return n.str(); }
inline json j(const Rat& q) { return to_string(q); }
inline json j(const ExtRat& q) { return to_string(q); }
inline json j(const LPoint& p) { return json::array({p.x.str(), p.y.str()}); }
inline json j(const LVec& v) { return json::array({v.x.str(), v.y.str()}); }

template <class T>
json list(const T& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(j(x));
  return a;
}

inline json j(const OrdinaryAngle& a) { return {{"vertex", j(a.vertex())}, {"ray1", j(a.ray1())}, {"ray2", j(a.ray2())}}; }
inline json j(const NormalForm& n) { return {{"k", j(n.k)}, {"phi_tan", j(n.phi_tan)}}; }
inline json j(const PeriodicCF& c) { return {{"pre", list(c.pre)}, {"period", list(c.period)}}; }
inline json j(const IrrationalNormalForm& n) { return {{"k", j(n.k)}, {"tail", j(n.tail)}, {"side", to_string(n.side)}}; }
inline json j(const Polygon& p) { return {{"vertices", list(p.vertices())}}; }

inline json j(const InfiniteLLS& s) {
  json o{{"side", to_string(s.side)}, {"prefix", list(s.prefix)}};
  if (s.tail_l) o["tail_l"] = j(*s.tail_l);
  if (s.tail_r) o["tail_r"] = j(*s.tail_r);
  return o;
}

inline std::string text(const NormalForm& n) {
  std::string k = n.k.str() + "*pi";
  return n.phi_tan == 0 ? k : k + " + arctan " + to_string(n.phi_tan);
}

inline std::string text(const PeriodicCF& c) { return "[" + join(c.pre) + (c.pre.empty() ? "" : ",") + "(" + join(c.period) + ")]"; }

inline std::string text(const IrrationalNormalForm& n) {
  return n.k.str() + "*pi + " + (n.side == Side::L ? "arctan^t " : "arctan ") + text(n.tail);
}

inline std::string text(const InfiniteLLS& s) {
  std::vector<std::string> parts;
  if (s.tail_l) {
    std::vector<Int> l(s.tail_l->pre.rbegin(), s.tail_l->pre.rend());
    std::vector<Int> p(s.tail_l->period.rbegin(), s.tail_l->period.rend());
    parts.push_back("[(" + join(p) + ")" + (l.empty() ? "" : "," + join(l)) + "]");
  }
  if (!s.prefix.empty()) parts.push_back(join(s.prefix));
  if (s.tail_r) parts.push_back(text(*s.tail_r));
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

inline std::string points(std::span<const LPoint> ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) out += (i ? " " : "") + to_string(ps[i]);
  return out;
}

inline std::string rats(std::span<const Rat> qs, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < qs.size(); ++i) out += (i ? sep : "") + to_string(qs[i]);
  return out;
}

/// "a:b;c:d;..." or single tangents "a;c"; each entry is validated as a transpose pair.
inline std::vector<SingularityPair> pairs(std::string_view s) {
  std::vector<SingularityPair> out;
  for (auto part : split(s, ';')) {
    auto ab = split(part, ':');
    if (ab.size() == 1) out.push_back(SingularityPair::of(parse_rat(ab[0])));
    else if (ab.size() == 2) out.push_back(SingularityPair(parse_rat(ab[0]), parse_rat(ab[1])));
    else throw UsageError("malformed pair '" + std::string(part) + "'");
  }
  return out;
}

inline std::vector<NormalForm> ordinaries(std::string_view s) {
  std::vector<NormalForm> out;
  for (const Rat& q : parse_rat_list(s)) out.push_back(ordinary(q));
  return out;
}

}  // namespace io

namespace draw {

inline void sail(svg::Figure& f, const OrdinaryAngle& a, const Sail& s) {
  std::vector<LPoint> all = s.vertices;
  all.push_back(a.vertex());
  auto [lo, hi] = svg::bbox(all);
  f.grid(lo, hi);
  Int reach = 1;
  for (const auto& p : s.vertices) reach = std::max({reach, abs_int(p.x - a.vertex().x), abs_int(p.y - a.vertex().y)});
  for (const LVec& d : {a.ray1(), a.ray2()}) {
    Int step = std::max(abs_int(d.x), abs_int(d.y));
    f.ray(a.vertex(), d, (reach + step - 1) / step);
  }
  f.polyline(s.vertices, svg::Role::hull);
  for (const auto& v : s.vertices) f.label(v, to_string(v));
  f.caption("LLS " + join(s.lls));
}

inline void broken_line(svg::Figure& f, const BrokenLine& b) {
  std::vector<LPoint> all = b.points();
  all.push_back(b.vertex());
  auto [lo, hi] = svg::bbox(all);
  f.grid(lo, hi);
  for (const auto& p : b.points()) f.polyline({b.vertex(), p}, svg::Role::ray);
  f.polyline(b.points(), svg::Role::line);
  for (size_t i = 0; i < b.points().size(); ++i) f.label(b.points()[i], "A" + std::to_string(i));
  f.label(b.vertex(), "O");
}

inline void polygon(svg::Figure& f, std::span<const LPoint> v, const LVec& offset = {0, 0}) {
  std::vector<LPoint> pts;
  for (const auto& p : v) pts.push_back(p + offset);
  auto [lo, hi] = svg::bbox(pts);
  f.grid(lo, hi);
  f.polygon(pts);
}

}  // namespace draw

struct Context {
  std::ostream& out;
  bool as_json = false;
  std::string svg;

  void emit(const json& payload, const std::string& human) const {
    if (as_json) out << payload.dump() << '\n';
    else out << human << '\n';
  }

  void render(const svg::Figure& f) const {
    if (!svg.empty()) f.write(svg);
  }
};

inline std::string describe_flags(const ClassInfo& c) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(c.self_dual, "self-dual");
  add(c.pseudo_isosceles, "pseudo-isosceles");
  add(c.isosceles, "isosceles");
  add(c.pseudo_regular, "pseudo-regular");
  add(c.regular, "regular");
  return out.empty() ? "-" : out;
}

/// Builds the command tree; handlers run after a successful parse.
class Cli {
 public:
  explicit Cli(std::ostream& out) : ctx_{out, false, {}} {
    app_.name("lattrig");
    app_.description("Lattice trigonometry: angles, sails, expanded angles, triangles, polygons");
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", ctx_.as_json, "Machine-readable JSON output");
    app_.add_option("--svg", ctx_.svg, "Write an SVG figure to PATH (a directory for triangle enumerate)");
    build_cf();
    build_angle();
    build_expanded();
    build_triangle();
    build_polygon();
    build_toric();
    build_irr();
    build_render();
  }

  int run(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(args);
    } catch (const CLI::CallForHelp&) {
      ctx_.out << app_.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      ctx_.out << app_.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      return fail(2, e.what());
    }
    try {
      if (!action_) return fail(2, "missing command");
      if (!ctx_.svg.empty() && !svg_ok_) return fail(2, "--svg is not supported by this command");
      action_();
    } catch (const std::invalid_argument& e) {
      return fail(2, e.what());
    } catch (const std::exception& e) {
      return fail(1, e.what());
    }
    return 0;
  }

 private:
  int fail(int code, const std::string& msg) {
    ctx_.out << json{{"error", msg}}.dump() << '\n';
    return code;
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, std::function<void()> fn,
                 bool draws = false) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([this, draws, fn = std::move(fn)] {
      action_ = fn;
      svg_ok_ = draws;
    });
    return sub;
  }

  CLI::App* group(const std::string& name, const std::string& desc) {
    CLI::App* g = app_.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  }

  void build_cf() {
    auto* g = group("cf", "Continued fractions");
    auto* eval = leaf(g, "eval", "Value of ]a0,...,an[", [this] {
      ExtRat v = eval_signed(parse_int_list(s_seq_));
      ctx_.emit({{"value", io::j(v)}}, to_string(v));
    });
    eval->add_option("seq", s_seq_, "Comma-separated integers")->required();
    auto* odd = leaf(g, "odd", "Odd-length expansion", [this] {
      auto cf = to_odd_cf(parse_rat(s_q_));
      ctx_.emit({{"cf", io::list(cf)}}, join(cf));
    });
    odd->add_option("q", s_q_, "Rational p/q")->required();
    auto* even = leaf(g, "even", "Even-length expansion", [this] {
      auto cf = to_even_cf(parse_rat(s_q_));
      ctx_.emit({{"cf", io::list(cf)}}, join(cf));
    });
    even->add_option("q", s_q_, "Rational p/q")->required();
    auto* concat = leaf(g, "concat", "Value of ]q1,...,qn[ over odd expansions", [this] {
      std::vector<Rat> qs;
      for (const auto& s : s_list_) qs.push_back(parse_rat(s));
      ExtRat v = concat_rationals(qs);
      ctx_.emit({{"value", io::j(v)}}, to_string(v));
    });
    concat->add_option("q", s_list_, "Rationals")->required();
  }

  void build_angle() {
    auto* g = group("angle", "Ordinary lattice angles");
    auto* tan = leaf(g, "tan", "Lattice sine, cosine and tangent", [this] {
      auto rays = parse_points(s_rays_);
      auto v = parse_points(s_vertex_);
      if (rays.size() != 2 || v.size() != 1) throw UsageError("--rays needs two directions and --vertex one point");
      OrdinaryAngle a(v[0], as_vec(rays[0]), as_vec(rays[1]));
      Trig t = trig(a);
      ctx_.emit({{"sin", io::j(t.sin)}, {"cos", io::j(t.cos)}, {"tan", io::j(t.tan)}},
                "sin " + t.sin.str() + "\ncos " + t.cos.str() + "\ntan " + to_string(t.tan));
    });
    tan->add_option("--rays", s_rays_, "Ray directions \"x,y;x,y\"")->required();
    tan->add_option("--vertex", s_vertex_, "Vertex \"x,y\"")->capture_default_str();

    auto* arct = leaf(g, "arctan", "Angle with the given tangent", [this] {
      OrdinaryAngle a = arctan(parse_rat(s_q_));
      ctx_.emit(io::j(a), "vertex " + to_string(a.vertex()) + "\nray1 " + to_string(a.ray1()) + "\nray2 " + to_string(a.ray2()));
    });
    arct->add_option("q", s_q_, "Tangent >= 1")->required();

    auto* sl = leaf(g, "sail", "Sail vertices and LLS sequence", [this] {
      OrdinaryAngle a = arctan(parse_rat(s_q_));
      Sail s = sail(a);
      if (!ctx_.svg.empty()) {
        svg::Figure f;
        draw::sail(f, a, s);
        ctx_.render(f);
      }
      ctx_.emit({{"vertices", io::list(s.vertices)}, {"lls", io::list(s.lls)}},
                "vertices " + io::points(s.vertices) + "\nlls " + join(s.lls));
    }, true);
    sl->add_option("q", s_q_, "Tangent >= 1")->required();

    auto* tr = leaf(g, "transpose", "Tangent of the transposed angle", [this] {
      Rat t = transpose_tan(parse_rat(s_q_));
      ctx_.emit({{"tan", io::j(t)}}, to_string(t));
    });
    tr->add_option("q", s_q_, "Tangent >= 1")->required();
    auto* ad = leaf(g, "adjacent", "Tangent of the adjacent angle", [this] {
      Rat t = adjacent_tan(parse_rat(s_q_));
      ctx_.emit({{"tan", io::j(t)}}, to_string(t));
    });
    ad->add_option("q", s_q_, "Tangent >= 1")->required();
  }

  void build_expanded() {
    auto* g = group("expanded", "Expanded lattice angles");
    auto* nf = leaf(g, "normalize", "Normal form of a signed LLS sequence", [this] {
      NormalForm n = normalize(parse_int_list(s_seq_));
      ctx_.emit(io::j(n), io::text(n));
    });
    nf->add_option("--seq", s_seq_, "Comma-separated integers")->required();

    auto* sum = leaf(g, "sum", "M-sum of ordinary angles", [this] {
      auto terms = io::ordinaries(s_angles_);
      NormalForm n = msum(terms, parse_int_list(s_seps_));
      ctx_.emit(io::j(n), io::text(n));
    });
    sum->add_option("--angles", s_angles_, "Tangents \"a;b;c\"")->required();
    sum->add_option("--seps", s_seps_, "Separators \"m1,m2\"");

    auto* rc = leaf(g, "reconstruct", "Broken line with the given sequence", [this] {
      auto pts = reconstruct_points(parse_int_list(s_seq_));
      ctx_.emit({{"points", io::list(pts)}}, io::points(pts));
    });
    rc->add_option("--seq", s_seq_, "Comma-separated integers")->required();
  }

  void build_triangle() {
    auto* g = group("triangle", "Lattice triangles");
    auto three = [this](CLI::App* a) { a->add_option("tans", s_list_, "Three tangents")->required()->expected(3); };
    auto tans = [this] {
      return std::array<Rat, 3>{parse_rat(s_list_[0]), parse_rat(s_list_[1]), parse_rat(s_list_[2])};
    };

    three(leaf(g, "check", "Do three tangents belong to a triangle", [this, tans] {
      auto t = tans();
      auto r = exists_from_tans(t[0], t[1], t[2]);
      json o{{"exists", r.has_value()}};
      if (r) o["rotation"] = *r;
      ctx_.emit(o, r ? "yes (rotation " + std::to_string(*r) + ")" : std::string("no"));
    }));

    three(leaf(g, "canonical", "Minimal triangle with the given angles", [this, tans] {
      auto t = tans();
      Triangle tri = canonical_triangle(t[0], t[1], t[2]);
      auto v = tri.vertices();
      if (!ctx_.svg.empty()) {
        svg::Figure f;
        draw::polygon(f, v);
        ctx_.render(f);
      }
      ctx_.emit({{"vertices", io::list(v)}, {"area", io::j(tri.area())}},
                "vertices " + io::points(v) + "\narea " + tri.area().str());
    }, true));

    auto* comp = leaf(g, "complete", "Remaining angles from two edges and the angle between them", [this] {
      SasCompletion c = complete_sas(parse_int(s_c_), parse_int(s_b_), arctan(parse_rat(s_alpha_)));
      Rat bca = itan(c.bca), abc = itan(c.abc);
      ctx_.emit({{"bca", io::j(bca)}, {"abc", io::j(abc)}, {"il_cb", io::j(c.il_cb)}},
                "tan BCA " + to_string(bca) + "\ntan ABC " + to_string(abc) + "\nil(CB) " + c.il_cb.str());
    });
    comp->add_option("--c", s_c_, "il(AB)")->required();
    comp->add_option("--b", s_b_, "il(AC)")->required();
    comp->add_option("--alpha", s_alpha_, "Tangent of the angle CAB")->required();

    auto* cls = leaf(g, "classify", "Angles, shape and class of a triangle", [this] {
      auto p = parse_points(s_points_);
      if (p.size() != 3) throw UsageError("--points needs three points");
      Triangle t(p[0], p[1], p[2]);
      ClassInfo c = describe(t);
      auto seps = edge_separators(t);
      auto tn = tans_of(t);
      if (!ctx_.svg.empty()) {
        svg::Figure f;
        auto v = t.vertices();
        draw::polygon(f, v);
        ctx_.render(f);
      }
      json o{{"area", io::j(c.cls.area)},    {"tans", io::list(tn)},          {"separators", io::list(seps)},
             {"shape", to_string(c.shape)}, {"class", io::list(c.cls.tans)}, {"self_dual", c.self_dual},
             {"pseudo_isosceles", c.pseudo_isosceles}, {"isosceles", c.isosceles},
             {"pseudo_regular", c.pseudo_regular},     {"regular", c.regular}};
      ctx_.emit(o, "area " + c.cls.area.str() + "\ntans " + io::rats(tn) + "\nseparators " + join(seps) + "\nshape " +
                       to_string(c.shape) + "\nflags " + describe_flags(c));
    }, true);
    cls->add_option("--points", s_points_, "Vertices \"x,y;x,y;x,y\"")->required();

    auto* en = leaf(g, "enumerate", "Congruence classes of triangles up to an area", [this] {
      auto classes = enumerate_classes(parse_int(s_max_area_));
      if (!ctx_.svg.empty()) sheet(classes);
      if (count_) {
        ctx_.emit({{"count", classes.size()}}, std::to_string(classes.size()));
        return;
      }
      if (ctx_.as_json) {
        json a = json::array();
        for (const auto& c : classes)
          a.push_back({{"area", io::j(c.cls.area)}, {"tans", io::list(c.cls.tans)}, {"shape", to_string(c.shape)},
                       {"vertices", io::list(c.representative.vertices())}, {"self_dual", c.self_dual},
                       {"pseudo_isosceles", c.pseudo_isosceles}, {"isosceles", c.isosceles},
                       {"pseudo_regular", c.pseudo_regular}, {"regular", c.regular}});
        ctx_.out << json{{"count", classes.size()}, {"classes", a}}.dump() << '\n';
        return;
      }
      ctx_.out << "area  tans                 shape   flags\n";
      for (const auto& c : classes) {
        std::string t = io::rats(c.cls.tans, " ");
        ctx_.out << c.cls.area.str() << std::string(6 - std::min<size_t>(5, c.cls.area.str().size()), ' ') << t
                 << std::string(t.size() < 21 ? 21 - t.size() : 1, ' ') << to_string(c.shape)
                 << std::string(8 - std::string(to_string(c.shape)).size(), ' ') << describe_flags(c) << '\n';
      }
    }, true);
    en->add_option("--max-area", s_max_area_, "Largest lattice area")->required();
    auto* modes = en->add_option_group("mode");
    modes->add_flag("--count", count_, "Print only the number of classes");
    modes->add_flag("--table", table_, "Print a text table (default)");
    modes->require_option(0, 1);
  }

  void sheet(const std::vector<ClassInfo>& classes) {
    std::filesystem::create_directories(ctx_.svg);
    svg::Figure f;
    Int cell_w = 0, cell_h = 0;
    for (const auto& c : classes) {
      auto v = c.representative.vertices();
      auto [lo, hi] = svg::bbox(v);
      cell_w = std::max(cell_w, Int(hi.x - lo.x));
      cell_h = std::max(cell_h, Int(hi.y - lo.y));
    }
    const size_t per_row = 6;
    for (size_t i = 0; i < classes.size(); ++i) {
      auto v = classes[i].representative.vertices();
      auto [lo, hi] = svg::bbox(v);
      LVec off{Int(i % per_row) * (cell_w + 3) - lo.x, -Int(i / per_row) * (cell_h + 3) - lo.y};
      draw::polygon(f, v, off);
      f.label(LPoint{lo.x, hi.y + 1} + off, classes[i].cls.area.str() + ": " + io::rats(classes[i].cls.tans, " "));
    }
    f.write((std::filesystem::path(ctx_.svg) / "enumeration.svg").string());
  }

  void build_polygon() {
    auto* g = group("polygon", "Convex lattice polygons");
    auto* chk = leaf(g, "check", "Search separators with exterior angle sum 2pi", [this] {
      auto m = polygon_criterion(parse_rat_list(s_angles_), parse_int(s_bound_));
      ctx_.emit({{"seps", m ? io::list(*m) : json(nullptr)}}, m ? join(*m) : std::string("none"));
    });
    chk->add_option("--angles", s_angles_, "Tangents \"a;b;c\"")->required();
    chk->add_option("--bound", s_bound_, "Largest |separator| searched")->capture_default_str();

    auto* bld = leaf(g, "build", "Polygon with given angles and separators", [this] {
      Polygon p = synthesize_polygon(parse_rat_list(s_angles_), parse_int_list(s_seps_));
      show_polygon(p, {});
    }, true);
    bld->add_option("--angles", s_angles_, "Tangents \"a;b;c\"")->required();
    bld->add_option("--seps", s_seps_, "Separators \"m1,m2\"")->required();

    auto* ext = leaf(g, "extract", "Separators of a polygon", [this] {
      Polygon p(parse_points(s_points_));
      auto m = extract_M(p);
      auto t = tans_of(p);
      if (!ctx_.svg.empty()) {
        svg::Figure f;
        draw::polygon(f, p.vertices());
        ctx_.render(f);
      }
      ctx_.emit({{"vertices", io::list(p.vertices())}, {"tans", io::list(t)}, {"seps", io::list(m)}},
                "tans " + io::rats(t, ";") + "\nseps " + join(m));
    }, true);
    ext->add_option("--points", s_points_, "Vertices \"x,y;x,y;...\"")->required();
  }

  void show_polygon(const Polygon& p, json extra) {
    if (!ctx_.svg.empty()) {
      svg::Figure f;
      draw::polygon(f, p.vertices());
      ctx_.render(f);
    }
    auto t = tans_of(p);
    extra["vertices"] = io::list(p.vertices());
    extra["tans"] = io::list(t);
    ctx_.emit(extra, "vertices " + io::points(p.vertices()) + "\ntans " + io::rats(t, ";"));
  }

  void build_toric() {
    auto* g = group("toric", "Toric singularity collections");
    auto* tri = leaf(g, "triangle", "Is there a triangle with these three singularities", [this] {
      auto ps = io::pairs(s_pairs_);
      if (ps.size() != 3) throw UsageError("--pairs needs three pairs");
      auto w = toric_triangle_check({ps[0], ps[1], ps[2]});
      json o{{"exists", w.has_value()}};
      std::string human = "no";
      if (w) {
        o["permutation"] = w->permutation;
        o["tans"] = io::list(w->tans);
        human = "yes: " + io::rats(w->tans, " ");
      }
      ctx_.emit(o, human);
    });
    tri->add_option("--pairs", s_pairs_, "Pairs \"a:b;c:d;e:f\" or single tangents")->required();

    auto* pol = leaf(g, "polygon", "Polygon with exactly these singularities", [this] {
      auto ps = io::pairs(s_pairs_);
      ToricPolygon t = toric_polygon_build(ps);
      show_polygon(t.polygon, {{"seps", io::list(t.seps)}});
    }, true);
    pol->add_option("--pairs", s_pairs_, "Pairs \"a:b;c:d\" or single tangents")->required();
  }

  PeriodicCF periodic(const std::string& pre, const std::string& period) {
    auto p = parse_int_list(period);
    if (p.empty()) throw UsageError("empty period");
    return PeriodicCF(parse_int_list(pre), p);
  }

  void build_irr() {
    auto* g = group("irr", "Angles with quadratic irrational tangents");
    auto* at = leaf(g, "arctan", "Sail of arctan of a periodic continued fraction", [this] {
      PeriodicCF cf = periodic(s_pre_, s_period_);
      InfiniteLLS s = irr_arctan(cf);
      size_t d = static_cast<size_t>(parse_int(s_depth_));
      if (d == 0) throw UsageError("--depth must be positive");
      auto v = irr_sail_vertices(cf, d);
      Rat t = periodic_eval(cf, d);
      ctx_.emit({{"lls", io::j(s)}, {"vertices", io::list(v)}, {"tangent", io::j(t)}},
                "lls " + io::text(s) + "\nvertices " + io::points(v) + "\ntangent " + to_string(t));
    });
    at->add_option("--pre", s_pre_, "Preperiod \"a,b\"");
    at->add_option("--period", s_period_, "Period \"c,d\"")->required();
    at->add_option("--depth", s_depth_, "Number of elements")->capture_default_str();

    auto* nf = leaf(g, "normalize", "Normal form of an almost positive sequence", [this] {
      InfiniteLLS s;
      s.prefix = parse_int_list(s_prefix_);
      PeriodicCF t = periodic(s_pre_, s_period_);
      if (s_side_ == "R") {
        s.side = Side::R;
        s.tail_r = t;
      } else if (s_side_ == "L") {
        s.side = Side::L;
        s.tail_l = t;
      } else {
        throw UsageError("--side must be R or L");
      }
      IrrationalNormalForm n = irr_normalize(s);
      ctx_.emit(io::j(n), io::text(n));
    });
    nf->add_option("--prefix", s_prefix_, "Finite signed part");
    nf->add_option("--pre", s_pre_, "Tail preperiod");
    nf->add_option("--period", s_period_, "Tail period")->required();
    nf->add_option("--side", s_side_, "R or L")->capture_default_str();

    auto* sm = leaf(g, "sum", "M_R, M_L or M_LR sum", [this] {
      std::optional<IrrationalNormalForm> left, right;
      if (!s_lperiod_.empty()) left = IrrationalNormalForm{parse_int(s_lk_), periodic(s_lpre_, s_lperiod_), Side::L};
      if (!s_rperiod_.empty()) right = IrrationalNormalForm{parse_int(s_rk_), periodic(s_rpre_, s_rperiod_), Side::R};
      auto mids = io::ordinaries(s_angles_);
      IrrationalSum r = irr_sum(left, mids, right, parse_int_list(s_seps_));
      json o{{"sequence", io::j(r.sequence)}};
      std::string human = "sequence " + io::text(r.sequence);
      if (r.normal) {
        o["normal"] = io::j(*r.normal);
        human += "\nnormal " + io::text(*r.normal);
      }
      ctx_.emit(o, human);
    });
    sm->add_option("--angles", s_angles_, "Middle tangents \"a;b\"");
    sm->add_option("--seps", s_seps_, "Separators");
    sm->add_option("--left-k", s_lk_, "Left summand k")->capture_default_str();
    sm->add_option("--left-pre", s_lpre_, "Left tail preperiod, outward");
    sm->add_option("--left-period", s_lperiod_, "Left tail period, outward");
    sm->add_option("--right-k", s_rk_, "Right summand k")->capture_default_str();
    sm->add_option("--right-pre", s_rpre_, "Right tail preperiod");
    sm->add_option("--right-period", s_rperiod_, "Right tail period");
  }

  void build_render() {
    auto* g = group("render", "SVG figures");
    auto* bl = leaf(g, "broken-line", "Broken line with the given sequence", [this] {
      if (ctx_.svg.empty()) throw UsageError("render needs --svg PATH");
      auto seq = parse_int_list(s_seq_);
      BrokenLine b = BrokenLine::relaxed(kOrigin, reconstruct_points(seq));
      svg::Figure f;
      draw::broken_line(f, b);
      f.caption("LLS " + join(seq));
      ctx_.render(f);
      ctx_.emit({{"svg", ctx_.svg}}, ctx_.svg);
    }, true);
    bl->add_option("--seq", s_seq_, "Comma-separated integers")->required();

    auto* pg = leaf(g, "polygon", "Convex polygon", [this] {
      if (ctx_.svg.empty()) throw UsageError("render needs --svg PATH");
      Polygon p(parse_points(s_points_));
      svg::Figure f;
      draw::polygon(f, p.vertices());
      ctx_.render(f);
      ctx_.emit({{"svg", ctx_.svg}}, ctx_.svg);
    }, true);
    pg->add_option("--points", s_points_, "Vertices \"x,y;x,y;...\"")->capture_default_str();

    auto* tr = leaf(g, "triangle", "Triangle", [this] {
      if (ctx_.svg.empty()) throw UsageError("render needs --svg PATH");
      auto p = parse_points(s_points_);
      if (p.size() != 3) throw UsageError("--points needs three points");
      Triangle t(p[0], p[1], p[2]);
      svg::Figure f;
      auto v = t.vertices();
      draw::polygon(f, v);
      ctx_.render(f);
      ctx_.emit({{"svg", ctx_.svg}}, ctx_.svg);
    }, true);
    tr->add_option("--points", s_points_, "Vertices \"x,y;x,y;x,y\"")->required();
  }

  CLI::App app_;
  Context ctx_;
  std::function<void()> action_;
  bool svg_ok_ = false;

  std::string s_seq_, s_q_, s_rays_, s_vertex_ = "0,0", s_angles_, s_seps_, s_c_, s_b_, s_alpha_;
  std::string s_points_ = "0,0;1,0;1,1;0,1", s_max_area_, s_bound_ = "4", s_pairs_;
  std::string s_pre_, s_period_, s_depth_ = "10", s_prefix_, s_side_ = "R";
  std::string s_lk_ = "0", s_lpre_, s_lperiod_, s_rk_ = "0", s_rpre_, s_rperiod_;
  std::vector<std::string> s_list_;
  bool count_ = false, table_ = false;
};

inline int run(std::vector<std::string> args, std::ostream& out) {
  Cli cli(out);
  return cli.run(std::move(args));
}

}  // namespace lattrig::cli
