#include <gtest/gtest.h>

#include "lattrig/triangles.hpp"
#include "oracles.hpp"

#include <map>

using namespace lattrig;

namespace {

/// All triangles (0,0),(p,0),(q,r) with p·r <= max_area and 0 <= q < r; every class has a member here.
std::vector<Triangle> scan(long long max_area) {
  std::vector<Triangle> out;
  for (long long p = 1; p <= max_area; ++p)
    for (long long r = 1; p * r <= max_area; ++r)
      for (long long q = 0; q < r; ++q) out.emplace_back(LPoint{0, 0}, LPoint{p, 0}, LPoint{q, r});
  return out;
}

bool same_cycle(std::array<Rat, 3> a, const std::array<Rat, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

Triangle scaled(const Triangle& t, const Int& m) {
  auto s = [&](const LPoint& p) { return LPoint{m * p.x, m * p.y}; };
  return Triangle(s(t.A()), s(t.B()), s(t.C()));
}

/// Tangent of ∠((1,0), d) by a direct residue computation.
Rat direction_tan(const LVec& d) {
  Int g = oracle::brute_length(d);
  return oracle::upper_tan({d.x / g, d.y / g});
}

}  // namespace

TEST(Triangle, StoredClockwise) {
  Triangle t({0, 0}, {2, 0}, {0, 1});
  EXPECT_LT(det(t.B() - t.A(), t.C() - t.A()), 0);
  EXPECT_EQ(t.area(), 2);
  EXPECT_THROW(Triangle({0, 0}, {1, 1}, {2, 2}), std::domain_error);
}

TEST(Triangle, Angles) {
  for (const auto& t : {Triangle({0, 0}, {1, 0}, {0, 1}), Triangle({0, 0}, {3, 7}, {1, 0})}) {
    auto tans = tans_of(t);
    EXPECT_EQ(tans[0], tans[1]);
    EXPECT_EQ(tans[1], tans[2]);
  }
  EXPECT_EQ(tans_of(Triangle({0, 0}, {3, 7}, {1, 0}))[0], Rat(7, 3));
  // the input order (A, B, C) = (0,0), (2,0), (0,1) is counterclockwise, so B and C trade places
  Triangle r({0, 0}, {2, 0}, {0, 1});
  EXPECT_TRUE(same_cycle(tans_of(r), {Rat(1), Rat(1), Rat(2)}));
}

TEST(SineFormula, Examples) {
  EXPECT_EQ(sine_formula_check(Triangle({0, 0}, {1, 0}, {0, 1})), 1);
  EXPECT_EQ(sine_formula_check(Triangle({0, 0}, {2, 0}, {0, 1})), 1);
  EXPECT_EQ(sine_formula_check(Triangle({0, 0}, {3, 7}, {1, 0})), Rat(1, 7));
}

TEST(SineFormula, AllTrianglesUpToArea20) {
  for (const auto& t : scan(20)) EXPECT_NO_THROW(sine_formula_check(t));
}

TEST(CompleteSas, Examples) {
  auto r = complete_sas(2, 1, arctan(Rat(1)));
  EXPECT_EQ(itan(r.bca), 2);
  EXPECT_EQ(itan(r.abc), 1);
  EXPECT_EQ(r.il_cb, 1);
  // c·cos α = b
  auto e = complete_sas(3, 6, arctan(Rat(5, 2)));
  EXPECT_EQ(itan(e.bca), 1);
  EXPECT_THROW(complete_sas(0, 1, arctan(Rat(2))), std::domain_error);
}

TEST(CompleteSas, MatchesMeasuredTriangles) {
  oracle::Gen g(61);
  for (int i = 0; i < 300; ++i) {
    auto [a, b, c] = g.triangle(15);
    Triangle t(a, b, c);
    auto ang = angles_of(t);
    auto r = complete_sas(lattice_length(t.A(), t.B()), lattice_length(t.A(), t.C()), ang[0]);
    EXPECT_EQ(itan(r.bca), itan(ang[2]));
    EXPECT_EQ(itan(r.abc), itan(ang[1]));
    EXPECT_EQ(r.il_cb, lattice_length(t.C(), t.B()));
  }
}

TEST(CompleteSas, MatchesCaseTable) {
  oracle::Gen g(62);
  for (int i = 0; i < 500; ++i) {
    Rat q = g.rat_at_least_one(30);
    Int c = g.range(1, 8), b = g.range(1, 8);
    OrdinaryAngle alpha = arctan(q);
    Int p = num(q), cs = den(q);
    Int cst = mod_inverse(cs, p);  // cos of the transpose
    Rat bca, abc;
    if (c * cs > b) bca = adjacent_tan(direction_tan({c * cs - b, c * p}));
    else if (c * cs == b) bca = 1;
    else bca = transpose_tan(direction_tan({b - c * cs, c * p}));
    if (b * cst > c) abc = transpose_tan(adjacent_tan(direction_tan({b * cst - c, b * p})));
    else if (b * cst == c) abc = 1;
    else abc = direction_tan({c - b * cst, b * p});
    auto r = complete_sas(c, b, alpha);
    EXPECT_EQ(itan(r.bca), bca) << c << " " << b << " " << q;
    EXPECT_EQ(itan(r.abc), abc) << c << " " << b << " " << q;
    // il(CB)/isin α = b/isin∠ABC = c/isin∠BCA
    EXPECT_EQ(Rat(r.il_cb) / Rat(p), Rat(b) / Rat(isin(r.abc)));
    EXPECT_EQ(Rat(b) / Rat(isin(r.abc)), Rat(c) / Rat(isin(r.bca)));
  }
}

TEST(Il1, MatchesBruteForce) {
  oracle::Gen g(63);
  for (int i = 0; i < 300; ++i) {
    auto [a, b, c] = g.triangle(15);
    EXPECT_EQ(il1(a, b, c), oracle::brute_il1(a, b, c));
    EXPECT_EQ(il1(b, c, a), oracle::brute_il1(b, c, a));
    EXPECT_EQ(il1(c, a, b), oracle::brute_il1(c, a, b));
  }
}

TEST(EdgeSeparators, UnitTriangle) {
  auto s = edge_separators(Triangle({0, 0}, {1, 0}, {0, 1}));
  EXPECT_EQ(s, (std::array<Int, 3>{-1, -1, -1}));
  EXPECT_EQ(classify_shape(Triangle({0, 0}, {1, 0}, {0, 1})), Shape::acute);
  EXPECT_EQ(classify_shape(Triangle({0, 0}, {2, 0}, {0, 1})), Shape::right);
}

TEST(EdgeSeparators, SumIsPi) {
  oracle::Gen g(64);
  for (int i = 0; i < 300; ++i) {
    auto [a, b, c] = g.triangle(15);
    Triangle t(a, b, c);
    auto tans = tans_of(t);
    auto s = edge_separators(t);
    std::array<NormalForm, 3> terms{ordinary(tans[0]), ordinary(tans[1]), ordinary(tans[2])};
    std::array<Int, 2> m{s[0], s[1]};
    EXPECT_EQ(msum(terms, m), (NormalForm{1, 0}));
  }
}

TEST(ExistsFromTans, Examples) {
  EXPECT_TRUE(exists_from_tans(Rat(7, 3), Rat(7, 3), Rat(7, 3)).has_value());
  EXPECT_TRUE(exists_from_tans(1, 1, 1).has_value());
  EXPECT_FALSE(exists_from_tans(2, 2, 2).has_value());
  EXPECT_THROW(exists_from_tans(Rat(1, 2), 1, 1), std::domain_error);
}

TEST(ExistsFromTans, AgreesWithScan) {
  // if angles α, β, γ occur at all, they occur in a triangle of area at most isin α · isin β · isin γ
  std::vector<Rat> pool{1, 2, Rat(3, 2), 3, Rat(5, 2), Rat(5, 3), 4, Rat(4, 3)};
  std::set<std::array<Rat, 3>> seen;
  for (const auto& t : scan(64)) seen.insert(least_rotation(tans_of(t)));
  for (const Rat& x : pool)
    for (const Rat& y : pool)
      for (const Rat& z : pool) {
        std::array<Rat, 3> want{x, y, z};
        bool found = seen.count(least_rotation(want)) > 0;
        auto i = exists_from_tans(x, y, z);
        EXPECT_EQ(i.has_value(), found) << x << " " << y << " " << z;
      }
}

TEST(ExistsFromTans, NoTwoTwoTwoTriangleUpToArea40) {
  for (const auto& t : scan(40)) EXPECT_FALSE(same_cycle(tans_of(t), {Rat(2), Rat(2), Rat(2)}));
}

TEST(ExistsFromTans, EquivalentMsumCheck) {
  oracle::Gen g(65);
  for (int i = 0; i < 400; ++i) {
    Rat a = g.rat_at_least_one(8), b = g.rat_at_least_one(8), c = g.rat_at_least_one(8);
    bool direct = detail::sum_conditions(a, b, c);
    NormalForm ab = msum({ordinary(a), ordinary(b)}, {-1});
    NormalForm abc = msum({ordinary(a), ordinary(b), ordinary(c)}, {-1, -1});
    EXPECT_EQ(direct, ab.k == 0 && abc == (NormalForm{1, 0})) << a << " " << b << " " << c;
  }
}

TEST(CanonicalTriangle, Examples) {
  Triangle t = canonical_triangle(Rat(7, 3), Rat(7, 3), Rat(7, 3));
  EXPECT_EQ(t.vertices(), (std::array<LPoint, 3>{LPoint{0, 0}, LPoint{3, 7}, LPoint{1, 0}}));
  EXPECT_EQ(t.area(), 7);
  EXPECT_EQ(canonical_triangle(1, 1, 1).area(), 1);
  Triangle r({0, 0}, {2, 0}, {0, 1});
  auto tans = tans_of(r);
  EXPECT_TRUE(congruent_tri(canonical_triangle(tans[0], tans[1], tans[2]), r));
  EXPECT_THROW(canonical_triangle(2, 2, 2), std::domain_error);
}

TEST(CanonicalTriangle, EveryTriangleIsAMultiple) {
  oracle::Gen g(66);
  for (int i = 0; i < 300; ++i) {
    auto [a, b, c] = g.triangle(15);
    Triangle t(a, b, c);
    auto tans = tans_of(t);
    auto k = exists_from_tans(tans[0], tans[1], tans[2]);
    ASSERT_TRUE(k.has_value());
    Triangle base = canonical_triangle(tans[*k], tans[(*k + 1) % 3], tans[(*k + 2) % 3]);
    EXPECT_TRUE(same_cycle(tans_of(base), tans));
    Int mu = oracle::brute_gcd(oracle::brute_gcd(lattice_length(t.A(), t.B()), lattice_length(t.B(), t.C())),
                               lattice_length(t.C(), t.A()));
    EXPECT_EQ(t.area(), mu * mu * base.area());
    EXPECT_TRUE(congruent_tri(scaled(base, mu), t));
  }
}

TEST(TriangleFromSum, PrescribedAngles) {
  for (const auto& t : scan(12)) {
    auto tans = tans_of(t);
    auto s = edge_separators(t);
    Triangle r = triangle_from_sum(tans[0], tans[1], tans[2], s[0], s[1]);
    EXPECT_TRUE(same_cycle(tans_of(r), tans));
  }
}

TEST(TriangleFromSum, SearchedSums) {
  std::vector<Rat> pool{1, 2, Rat(3, 2), 3, Rat(5, 2), Rat(7, 3), Rat(7, 5)};
  int built = 0;
  for (const Rat& a : pool)
    for (const Rat& b : pool)
      for (const Rat& c : pool)
        for (int u = -3; u <= 3; ++u)
          for (int v = -3; v <= 3; ++v) {
            if (u == 0 || v == 0) continue;
            if (msum({ordinary(a), ordinary(b), ordinary(c)}, {u, v}) != NormalForm{1, 0}) continue;
            Triangle r = triangle_from_sum(a, b, c, u, v);
            EXPECT_TRUE(same_cycle(tans_of(r), {a, b, c})) << a << " " << b << " " << c << " " << u << " " << v;
            ++built;
          }
  EXPECT_GT(built, 20);
  EXPECT_THROW(triangle_from_sum(2, 2, 2, -1, -1), std::domain_error);
}

TEST(Shape, ObtuseExampleAndAcuteCompanions) {
  std::array<Rat, 3> want{Rat(3, 2), Rat(8, 3), Rat(1)};
  std::vector<Rat> sorted_want(want.begin(), want.end());
  std::sort(sorted_want.begin(), sorted_want.end());
  bool obtuse_found = false;
  std::map<Rat, bool> acute_with;
  for (const auto& t : scan(48)) {
    auto tans = tans_of(t);
    std::vector<Rat> s(tans.begin(), tans.end());
    std::sort(s.begin(), s.end());
    Shape sh = classify_shape(t);
    if (s == sorted_want) {
      EXPECT_EQ(sh, Shape::obtuse);
      obtuse_found = true;
    }
    if (sh == Shape::acute)
      for (const Rat& x : tans) acute_with[x] = true;
  }
  EXPECT_TRUE(obtuse_found);
  for (const Rat& x : want) EXPECT_TRUE(acute_with[x]) << x;
}

TEST(Shape, SeparatorsMatchBruteForce) {
  oracle::Gen g(67);
  for (int i = 0; i < 200; ++i) {
    auto [a, b, c] = g.triangle(12);
    Triangle t(a, b, c);
    auto s = edge_separators(t);
    EXPECT_EQ(s[0], lattice_length(t.A(), t.B()) - oracle::brute_il1(t.A(), t.B(), t.C()) - 1);
    EXPECT_EQ(s[1], lattice_length(t.B(), t.C()) - oracle::brute_il1(t.B(), t.C(), t.A()) - 1);
    EXPECT_EQ(s[2], lattice_length(t.C(), t.A()) - oracle::brute_il1(t.C(), t.A(), t.B()) - 1);
  }
}

TEST(Congruence, InvariantUnderProperMapsAndRelabeling) {
  oracle::Gen g(68);
  for (int i = 0; i < 300; ++i) {
    auto [a, b, c] = g.triangle(12);
    auto m = g.unimodular(false);
    AffMap f(m[0], m[1], m[2], m[3], {g.range(-9, 9), g.range(-9, 9)});
    EXPECT_TRUE(congruent_tri(Triangle(a, b, c), Triangle(f(b), f(c), f(a))));
  }
}

TEST(Congruence, ClassIsCompleteInvariant) {
  std::vector<Triangle> ts;
  for (long long p = 1; p <= 10; ++p)
    for (long long r = 1; p * r <= 10; ++r)
      for (long long q = 0; q < p * r; ++q) ts.emplace_back(LPoint{0, 0}, LPoint{p, 0}, LPoint{q, r});
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i + 1; j < ts.size(); ++j) {
      auto u = ts[i].vertices(), v = ts[j].vertices();
      bool mapped = false;
      for (int k = 0; k < 3 && !mapped; ++k) {
        mapped = oracle::proper_map_exists(u, v);
        std::rotate(v.begin(), v.begin() + 1, v.end());
      }
      EXPECT_EQ(class_of(ts[i]) == class_of(ts[j]), mapped);
    }
}

TEST(Congruence, NotDeterminedByTwoAnglesAndArea) {
  // equal area and two equal angles, different classes
  std::map<std::pair<Int, Rat>, std::vector<TriangleClass>> by;
  int witnesses = 0;
  for (const auto& info : enumerate_classes(10)) {
    const auto& c = info.cls;
    for (int i = 0; i < 3; ++i)
      for (const auto& other : by[{c.area, c.tans[i]}])
        if (!(other == c)) ++witnesses;
    for (int i = 0; i < 3; ++i) by[{c.area, c.tans[i]}].push_back(c);
  }
  EXPECT_GT(witnesses, 0);
}

TEST(Duality, MirrorImage) {
  oracle::Gen g(69);
  for (int i = 0; i < 300; ++i) {
    auto [a, b, c] = g.triangle(12);
    auto flip = [](const LPoint& p) { return LPoint{p.y, p.x}; };
    TriangleClass x = class_of(Triangle(a, b, c));
    EXPECT_EQ(dual(x), class_of(Triangle(flip(a), flip(b), flip(c))));
    EXPECT_EQ(dual(dual(x)), x);
  }
}

TEST(Enumerate, SmallAreas) {
  auto one = enumerate_classes(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].regular);
  EXPECT_EQ(one[0].shape, Shape::acute);
  auto seven = enumerate_classes(7);
  TriangleClass want{7, {Rat(7, 3), Rat(7, 3), Rat(7, 3)}};
  auto it = std::find_if(seven.begin(), seven.end(), [&](const ClassInfo& c) { return c.cls == want; });
  ASSERT_NE(it, seven.end());
  EXPECT_TRUE(it->pseudo_regular);
  EXPECT_FALSE(it->regular);
  EXPECT_THROW(enumerate_classes(0), std::domain_error);
}

TEST(Enumerate, DualityAndFlagsUpToArea10) {
  auto all = enumerate_classes(10);
  EXPECT_EQ(all.size(), 33u);
  std::set<TriangleClass> classes;
  for (const auto& c : all) classes.insert(c.cls);
  int not_self_dual = 0;
  for (const auto& c : all) {
    EXPECT_TRUE(classes.count(dual(c.cls)));
    EXPECT_EQ(c.self_dual, dual(c.cls) == c.cls);
    EXPECT_EQ(c.isosceles, c.pseudo_isosceles && c.self_dual);
    EXPECT_EQ(c.regular, c.pseudo_regular && c.self_dual);
    if (c.pseudo_regular) {
      EXPECT_TRUE(c.pseudo_isosceles);
    }
    not_self_dual += !c.self_dual;
    EXPECT_EQ(class_of(c.representative), c.cls);
  }
  EXPECT_EQ(not_self_dual % 2, 0);
}

TEST(Enumerate, ScanRangeIsComplete) {
  // a wider shear range finds no further classes
  std::set<TriangleClass> wide;
  for (long long p = 1; p <= 10; ++p)
    for (long long r = 1; p * r <= 10; ++r)
      for (long long q = -3 * p * r; q < 3 * p * r; ++q) wide.insert(class_of(Triangle({0, 0}, {p, 0}, {q, r})));
  EXPECT_EQ(wide.size(), enumerate_classes(10).size());
}
