#include "tww/render.hpp"

#include <algorithm>

namespace tww {

namespace {

constexpr int kSlot = 40;
constexpr int kTop = 40;
constexpr int kBottom = 160;

}  // namespace

std::string render_svg(const Realiser& r) {
  int n = r.size();
  int width = kSlot * (n + 1), height = kBottom + kTop;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
                    std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
                    std::to_string(height) + "\">\n";
  auto line = [&](int x1, int y1, int x2, int y2, const char* cls) {
    out += "  <line class=\"" + std::string(cls) + "\" x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
           "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"black\"/>\n";
  };
  line(kSlot / 2, kTop, width - kSlot / 2, kTop, "axis");
  line(kSlot / 2, kBottom, width - kSlot / 2, kBottom, "axis");
  for (const Segment& s : diagram_layout(r)) {
    line(kSlot * s.top, kTop, kSlot * s.bottom, kBottom, "segment");
    std::string v = std::to_string(s.vertex);
    out += "  <text x=\"" + std::to_string(kSlot * s.top) + "\" y=\"" + std::to_string(kTop - 10) +
           "\" text-anchor=\"middle\">" + v + "</text>\n";
    out += "  <text x=\"" + std::to_string(kSlot * s.bottom) + "\" y=\"" + std::to_string(kBottom + 20) +
           "\" text-anchor=\"middle\">" + v + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_text(const Realiser& r) {
  auto sig = order_of(r.sigma), tau = order_of(r.tau);
  std::size_t w = 1;
  for (int v : sig) w = std::max(w, std::to_string(v).size());
  auto row = [&](const char* name, const std::vector<int>& o) {
    std::string s = name;
    for (int v : o) {
      std::string x = std::to_string(v);
      s += " " + std::string(w - x.size(), ' ') + x;
    }
    return s + "\n";
  };
  return row("sigma:", sig) + row("tau:  ", tau);
}

}  // namespace tww
