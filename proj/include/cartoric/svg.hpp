#pragma once
// Deterministic rank-2 fan picture: four labeled rays from the origin and
// the four maximal cones shaded as sectors.  Fixed canvas, fixed palette,
// fixed number formatting, no external assets.

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "fan.hpp"

namespace cartoric {

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

}  // namespace detail

inline std::string fan_svg(const FanSigma& fan) {
  if (fan.rank() != 2) throw std::invalid_argument("fan_svg: rank must be 2");
  const double cx = 320, cy = 320, len = 240;

  std::vector<Ray> rays = fan.rays();
  std::vector<double> px(4), py(4);
  for (int r = 0; r < 4; ++r) {
    double x = rays[r].coords[0].get_d();
    double y = rays[r].coords[1].get_d();
    double norm = std::sqrt(x * x + y * y);
    px[r] = cx + len * x / norm;
    py[r] = cy - len * y / norm;  // screen y grows downward
  }

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
       "viewBox=\"0 0 640 640\">\n";
  s += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"20\" y=\"36\" font-family=\"monospace\" font-size=\"20\" fill=\"#222222\">" +
       fan.cartan().type() + "</text>\n";

  // Maximal cones sigma_J for J masks 0..3; ray index of -coroot_i is i,
  // of coweight_i is 2 + i.
  const char* fills[4] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#dadaeb"};
  for (std::uint32_t jmask = 0; jmask < 4; ++jmask) {
    ConeJK c = fan.maximal_cone(jmask);
    int a = c.J.size() > 0 ? c.J[0] : 2 + c.K[0];
    int b = c.J.size() > 1 ? c.J[1] : 2 + c.K[c.K.size() - 1];
    s += "<polygon points=\"" + detail::fmt2(cx) + "," + detail::fmt2(cy) + " " +
         detail::fmt2(px[a]) + "," + detail::fmt2(py[a]) + " " + detail::fmt2(px[b]) + "," +
         detail::fmt2(py[b]) + "\" fill=\"" + fills[jmask] + "\" fill-opacity=\"0.55\"/>\n";
  }

  for (int r = 0; r < 4; ++r) {
    s += "<line x1=\"" + detail::fmt2(cx) + "\" y1=\"" + detail::fmt2(cy) + "\" x2=\"" +
         detail::fmt2(px[r]) + "\" y2=\"" + detail::fmt2(py[r]) +
         "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    double lx = cx + (px[r] - cx) * 1.12 - 30;
    double ly = cy + (py[r] - cy) * 1.12 + 5;
    s += "<text x=\"" + detail::fmt2(lx) + "\" y=\"" + detail::fmt2(ly) +
         "\" font-family=\"monospace\" font-size=\"14\" fill=\"#222222\">" + rays[r].name +
         "</text>\n";
  }
  s += "<circle cx=\"" + detail::fmt2(cx) + "\" cy=\"" + detail::fmt2(cy) +
       "\" r=\"3\" fill=\"#222222\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace cartoric
