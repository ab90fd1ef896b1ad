// Measures the angles of a lattice triangle, checks that their sum is π,
// and rebuilds the smallest triangle with the same angles.
#include "lattrig/triangles.hpp"

#include <iostream>

using namespace lattrig;

int main() {
  Triangle t({0, 0}, {5, 1}, {2, 6});
  auto tans = tans_of(t);
  auto seps = edge_separators(t);

  std::cout << "vertices";
  for (const auto& v : t.vertices()) std::cout << ' ' << to_string(v);
  std::cout << "\narea " << t.area() << '\n';
  std::cout << "tangents " << to_string(tans[0]) << ' ' << to_string(tans[1]) << ' ' << to_string(tans[2]) << '\n';
  std::cout << "separators " << join(seps) << '\n';

  std::array<NormalForm, 3> terms{ordinary(tans[0]), ordinary(tans[1]), ordinary(tans[2])};
  std::array<Int, 2> m{seps[0], seps[1]};
  std::cout << "sum " << to_string(msum(terms, m)) << '\n';

  auto i = exists_from_tans(tans[0], tans[1], tans[2]);
  if (!i) return 1;
  Triangle c = canonical_triangle(tans[*i], tans[(*i + 1) % 3], tans[(*i + 2) % 3]);
  std::cout << "canonical";
  for (const auto& v : c.vertices()) std::cout << ' ' << to_string(v);
  std::cout << "\ncanonical area " << c.area() << '\n';
  std::cout << "shape " << to_string(classify_shape(t)) << '\n';
}
