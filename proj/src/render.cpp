#include "fishbij/render.hpp"

#include <algorithm>
#include <map>

namespace fishbij {

namespace {

// Integer-only geometry keeps the output byte-for-byte deterministic.
constexpr int kHalf = 24;    // half diagonal of a cell
constexpr int kMargin = 30;

std::string svg_open(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
}

}  // namespace

std::string render_fish_svg(const Fish& f) {
  const int n = f.cell_count();
  int min_d = 0, max_d = 0, max_s = 0;
  for (CellId c = 0; c < n; ++c) {
    auto [u, v] = f.coord(c);
    min_d = std::min(min_d, u - v);
    max_d = std::max(max_d, u - v);
    max_s = std::max(max_s, u + v);
  }
  // Screen position of a cell center: x grows with u+v, y with u-v (head on
  // the left, ascending strips going up).
  const int x0 = kMargin;
  const int y0 = kMargin - kHalf * min_d;
  const int width = 2 * kMargin + kHalf * max_s;
  const int height = 2 * kMargin + kHalf * (max_d - min_d);

  std::vector<CellKind> kinds = classify_cells(f);
  std::string out = svg_open(width, height);
  out += "<g stroke=\"#333333\" stroke-width=\"2\" fill-opacity=\"0.4\">\n";
  for (CellId c = 0; c < n; ++c) {
    auto [u, v] = f.coord(c);
    int x = x0 + kHalf * (u + v);
    int y = y0 + kHalf * (u - v);
    const char* fill = "#5b8bd0";          // plain cell
    if (c == f.head()) fill = "#f2a93b";   // head
    if (kinds[c].tail) fill = "#d1495b";   // tail
    if (kinds[c].branch) fill = "#7768ae"; // branch cell
    out += "<polygon points=\"";
    out += std::to_string(x - kHalf) + "," + std::to_string(y) + " ";
    out += std::to_string(x) + "," + std::to_string(y - kHalf) + " ";
    out += std::to_string(x + kHalf) + "," + std::to_string(y) + " ";
    out += std::to_string(x) + "," + std::to_string(y + kHalf);
    out += "\" fill=\"";
    out += fill;
    out += "\"><title>cell ";
    out += std::to_string(c);
    out += "</title></polygon>\n";
  }
  out += "</g>\n<g fill=\"#222222\">\n";
  for (CellId c = 0; c < n; ++c) {
    if (!kinds[c].stem) continue;  // stem cells carry a center dot
    auto [u, v] = f.coord(c);
    int x = x0 + kHalf * (u + v);
    int y = y0 + kHalf * (u - v);
    out += "<circle cx=\"" + std::to_string(x) + "\" cy=\"" +
           std::to_string(y) + "\" r=\"4\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_tree_svg(const TernaryTree& t) {
  if (t.empty()) {
    std::string out = svg_open(160, 60);
    out += "<text x=\"80\" y=\"34\" text-anchor=\"middle\" "
           "font-family=\"monospace\" font-size=\"13\">(empty tree)</text>\n";
    out += "</svg>\n";
    return out;
  }
  const int dx = 42, dy = 52;
  const int nn = t.node_count();
  std::vector<int> absc = abscissas(t);
  std::vector<int> depth(nn, 0), px(nn, 0), py(nn, 0), parent(nn, -1);
  int max_depth = 0;
  for (int u = 0; u < nn; ++u) {
    for (int s = 0; s < 3; ++s) {
      int c = t.nodes()[u].child[s];
      if (c >= 0) {
        depth[c] = depth[u] + 1;
        parent[c] = u;
        max_depth = std::max(max_depth, depth[c]);
      }
    }
  }
  int min_a = 0, max_a = 0;
  for (int a : absc) {
    min_a = std::min(min_a, a);
    max_a = std::max(max_a, a);
  }
  // Larger abscissa lies further left.
  const int x0 = kMargin + dx * max_a;
  const int y0 = kMargin;
  const int width = 2 * kMargin + dx * (max_a - min_a) + 24;
  const int height = 2 * kMargin + dy * max_depth;
  // Distinct nodes can share (depth, abscissa); nudge repeats to the right.
  std::map<std::pair<int, int>, int> used;
  for (int u = 0; u < nn; ++u) {
    int k = used[{depth[u], absc[u]}]++;
    px[u] = x0 - dx * absc[u] + 7 * k;
    py[u] = y0 + dy * depth[u];
  }
  std::string out = svg_open(width, height);
  out += "<line x1=\"" + std::to_string(x0) + "\" y1=\"10\" x2=\"" +
         std::to_string(x0) + "\" y2=\"" + std::to_string(height - 10) +
         "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  out += "<g stroke=\"#444444\" stroke-width=\"2\">\n";
  for (int u = 0; u < nn; ++u) {
    if (parent[u] < 0) continue;
    out += "<line x1=\"" + std::to_string(px[parent[u]]) + "\" y1=\"" +
           std::to_string(py[parent[u]]) + "\" x2=\"" + std::to_string(px[u]) +
           "\" y2=\"" + std::to_string(py[u]) + "\"/>\n";
  }
  out += "</g>\n";
  for (int u = 0; u < nn; ++u) {
    out += "<circle cx=\"" + std::to_string(px[u]) + "\" cy=\"" +
           std::to_string(py[u]) +
           "\" r=\"11\" fill=\"#ffffff\" stroke=\"#444444\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + std::to_string(px[u]) + "\" y=\"" +
           std::to_string(py[u] + 4) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"11\">" +
           std::to_string(absc[u]) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fishbij
