// Walk through the A2 fan by hand: rays, counts, one wall relation, and the
// image of a Peterson cell point under psi.

#include <iostream>

#include "cartoric/fan.hpp"
#include "cartoric/peterson.hpp"
#include "cartoric/wall.hpp"

using namespace cartoric;

int main() {
  CartanMatrix cm("A2");
  FanSigma fan(cm);

  std::cout << "fan for " << cm.type() << ": " << fan.cones().size() << " cones\n";
  for (const Ray& r : fan.rays()) {
    std::cout << "  ray " << r.name << " = (";
    for (std::size_t i = 0; i < r.coords.size(); ++i)
      std::cout << (i ? ", " : "") << to_string(r.coords[i]);
    std::cout << ")\n";
  }

  std::cout << "f-vector:";
  for (const Int& x : fan.f_vector()) std::cout << " " << x.get_str();
  std::cout << "\nh-vector:";
  for (const Int& x : fan.h_vector()) std::cout << " " << x.get_str();
  std::cout << "\n\n";

  for (const WallTriple& w : enumerate_walls(fan)) {
    if (!w.codim_one) continue;
    WallRelation rel = wall_relation(fan, w);
    std::cout << "wall J={";
    for (int j : w.wall.J) std::cout << j + 1;
    std::cout << "} K={";
    for (int k : w.wall.K) std::cout << k + 1;
    std::cout << "} crossing direction " << w.ell + 1 << ": x_ell = " << to_string(rel.x_ell)
              << ", y_ell = " << to_string(rel.y_ell) << "\n";
  }

  PetersonPoint p(wJ_dot(2, {}));
  QuotientPoint img = psi(p);
  std::cout << "\npsi of the base point: x = (";
  for (std::size_t i = 0; i < img.x.size(); ++i)
    std::cout << (i ? ", " : "") << to_string(img.x[i]);
  std::cout << "), y = (";
  for (std::size_t i = 0; i < img.y.size(); ++i)
    std::cout << (i ? ", " : "") << to_string(img.y[i]);
  std::cout << ")\n";
  return 0;
}
