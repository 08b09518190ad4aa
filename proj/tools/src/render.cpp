#include "tdorg_cli/render.hpp"

#include <sstream>

#include "tdorg/errors.hpp"

namespace tdorg::cli {

namespace {

constexpr int kCell = 40;
constexpr int kMargin = 30;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const BipartiteGraph& g, const Representation& rep) {
  if (!realizes(g, rep)) throw PreconditionError("render: representation does not realize the graph");
  const int n = g.vertex_count();
  const auto rx = ranks(g, rep.order_x);
  const auto ry = ranks(g, rep.order_y);
  const int extent = n + 1;  // grid runs over [0, n + 1]
  const int size = extent * kCell + 2 * kMargin;
  auto sx = [&](int x) { return kMargin + x * kCell; };
  auto sy = [&](int y) { return kMargin + (extent - y) * kCell; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
      << "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"3,3\">\n";
  for (int i = 0; i <= extent; ++i) {
    svg << "<line x1=\"" << sx(i) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(i) << "\" y2=\"" << sy(extent)
        << "\"/>\n";
    svg << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(i) << "\" x2=\"" << sx(extent) << "\" y2=\"" << sy(i)
        << "\"/>\n";
  }
  svg << "</g>\n<g stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#head)\">\n";
  for (const auto& w : g.vertices()) {
    const int x = 1 + rx[g.id(w)];
    const int y = 1 + ry[g.id(w)];
    if (w.side == Side::U) {
      svg << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(extent) << "\" y2=\"" << sy(y)
          << "\"/>\n";
    } else {
      svg << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(x) << "\" y2=\"" << sy(0)
          << "\"/>\n";
    }
  }
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto& w : g.vertices()) {
    const int x = sx(1 + rx[g.id(w)]);
    const int y = sy(1 + ry[g.id(w)]);
    svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" stroke=\"black\" fill=\""
        << (w.side == Side::U ? "black" : "white") << "\"/>\n"
        << "<text x=\"" << x - 6 << "\" y=\"" << y - 6 << "\" text-anchor=\"end\">" << escape(g.label(w))
        << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace tdorg::cli
