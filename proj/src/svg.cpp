#include "linkage/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace linkage {

namespace {

constexpr int kSize = 512;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 5e-3 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Doc {
  std::ostringstream os;
  Doc() {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  void line(double x1, double y1, double x2, double y2, const char* stroke, double w = 1.5) {
    os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
       << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(w) << "\"/>\n";
  }
  void dot(double x, double y, double r, const char* fill) {
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\" fill=\"" << fill << "\"/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 11) {
    os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"monospace\" font-size=\"" << size
       << "\" text-anchor=\"middle\">" << escape(s) << "</text>\n";
  }
  std::string finish() {
    os << "</svg>\n";
    return os.str();
  }
};

}  // namespace

std::string svg_configuration(const LengthVector& l, const AngleConfig& a) {
  Doc d;
  auto pts = vertex_positions(l, a);
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (auto& p : pts) {
    minx = std::min(minx, p[0]), maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]), maxy = std::max(maxy, p[1]);
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double scale = 200 / span;
  double cx = 0.5 * (minx + maxx), cy = 0.5 * (miny + maxy);
  auto X = [&](double x) { return 256 + scale * (x - cx); };
  auto Y = [&](double y) { return 128 - scale * (y - cy); };
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    auto& p = pts[i];
    auto& q = pts[(i + 1) % n];
    d.line(X(p[0]), Y(p[1]), X(q[0]), Y(q[1]), "black");
  }
  for (int i = 0; i < n; ++i) {
    d.dot(X(pts[i][0]), Y(pts[i][1]), 3, "black");
    d.text(X(pts[i][0]), Y(pts[i][1]) - 6, std::to_string(i + 1));
  }
  // arrow diagram: unit vectors from a common origin, scaled by length
  auto L = l.as_double();
  double Lmax = *std::max_element(L.begin(), L.end());
  d.os << "<circle cx=\"256\" cy=\"384\" r=\"100\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  for (int i = 0; i < n; ++i) {
    double r = 100 * L[i] / Lmax;
    double x = 256 + r * std::cos(a.thetas[i]), y = 384 - r * std::sin(a.thetas[i]);
    d.line(256, 384, x, y, "#1f4e9c");
    double lx = 256 + (r + 12) * std::cos(a.thetas[i]), ly = 384 - (r + 12) * std::sin(a.thetas[i]) + 4;
    d.text(lx, ly, std::to_string(i + 1));
  }
  return d.finish();
}

std::string svg_graph(const AnnotatedGraph& g) {
  Doc d;
  const int V = static_cast<int>(g.vertices.size());
  std::vector<std::array<double, 2>> pos(V);
  for (int v = 0; v < V; ++v) {
    double t = kTwoPi * v / std::max(1, V) - kPi / 2;
    pos[v] = {256 + 180 * std::cos(t), 256 + 180 * std::sin(t)};
  }
  std::map<std::pair<int, int>, int> parallel;
  for (auto& a : g.arcs) {
    if (a.from < 0 || a.to < 0) continue;
    int k = parallel[{std::min(a.from, a.to), std::max(a.from, a.to)}]++;
    auto p = pos[a.from], q = pos[a.to];
    double bend = (k % 2 ? -1 : 1) * 40.0 * ((k + 1) / 2);
    double mx = 0.5 * (p[0] + q[0]), my = 0.5 * (p[1] + q[1]);
    double dx = q[0] - p[0], dy = q[1] - p[1], len = std::hypot(dx, dy);
    double cx, cy;
    if (len < 1e-9) {  // loop
      double out = 60 + 30 * k;
      double ux = p[0] - 256, uy = p[1] - 256, ul = std::max(1e-9, std::hypot(ux, uy));
      cx = p[0] + out * ux / ul, cy = p[1] + out * uy / ul;
    } else {
      cx = mx - bend * dy / len, cy = my + bend * dx / len;
    }
    d.os << "<path d=\"M " << num(p[0]) << " " << num(p[1]) << " Q " << num(cx) << " " << num(cy) << " "
         << num(q[0]) << " " << num(q[1]) << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
    d.text(0.25 * p[0] + 0.5 * cx + 0.25 * q[0], 0.25 * p[1] + 0.5 * cy + 0.25 * q[1], a.label, 9);
  }
  for (int v = 0; v < V; ++v) {
    d.dot(pos[v][0], pos[v][1], 4, g.vertices[v].collinear ? "#b02020" : "black");
    d.text(pos[v][0], pos[v][1] - 8, g.vertices[v].label, 10);
  }
  d.text(256, 500, "lengths " + g.lengths.str(), 11);
  return d.finish();
}

}  // namespace linkage
