#include "oppgeo/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>

#include "oppgeo/errors.hpp"

namespace oppgeo {

RenderFormat parse_render_format(const std::string& name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "tikz") return RenderFormat::Tikz;
  if (name == "svg") return RenderFormat::Svg;
  throw UnknownFormatError(name);
}

namespace {

struct Placed {
  std::string id;
  std::string label;
  double x = 0;
  double y = 0;
};

struct Line {
  std::string src;
  std::string dst;
  std::string color;
  bool directed = false;
};

struct Scene {
  std::string name;  // graph name for DOT
  std::vector<Placed> nodes;
  std::vector<Line> lines;
};

// Locale-independent fixed formatting, two decimals, no negative zero.
std::string fmt(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

bool negation_of(const Formula& a, const Formula& b) {
  return a == Formula::negation(b) || b == Formula::negation(a);
}

void flatten_or(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == FormulaKind::Or) {
    flatten_or(f.left(), out);
    flatten_or(f.right(), out);
  } else {
    out.push_back(f);
  }
}

// Tries to read a 2(k+1)-vertex diagram as top / disjuncts / negations /
// bottom, returning vertex indices in that order. Purely structural; used to
// orient the fixed layouts.
std::optional<std::vector<std::size_t>> detect_structure(
    const std::vector<DiagramVertex>& vs, std::size_t k) {
  if (vs.size() != 2 * (k + 1)) return std::nullopt;
  for (std::size_t t = 0; t < vs.size(); ++t) {
    if (vs[t].formula.kind() != FormulaKind::Or) continue;
    std::vector<Formula> parts;
    flatten_or(vs[t].formula, parts);
    if (parts.size() != k) continue;

    std::vector<std::size_t> order{t};
    std::set<std::size_t> used{t};
    bool ok = true;
    for (const Formula& part : parts) {
      bool found = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (used.count(i) || vs[i].formula != part) continue;
        order.push_back(i);
        used.insert(i);
        found = true;
        break;
      }
      if (!found) { ok = false; break; }
    }
    if (!ok) continue;
    for (std::size_t d = 1; d <= k; ++d) {
      bool found = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (used.count(i) || !negation_of(vs[i].formula, vs[order[d]].formula)) continue;
        order.push_back(i);
        used.insert(i);
        found = true;
        break;
      }
      if (!found) { ok = false; break; }
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!used.count(i)) order.push_back(i);
    }
    return order;
  }
  return std::nullopt;
}

// Slot tables. Hexagon: disjunction on top, first disjunct to its right,
// negations crosswise below, negated disjunction at the bottom.
constexpr double kHexagon[6][2] = {
    {0, 2.2}, {1.7, 1.1}, {-1.7, 1.1}, {-1.7, -1.1}, {1.7, -1.1}, {0, -2.2}};

// Oblique cube projection. Corners as (x, y, z) bit triples, ordered to
// match [top, d1, d2, d3, n1, n2, n3, bottom]; each formula sits antipodal
// to its negation.
constexpr int kCubeCorner[8][3] = {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 0},
                                   {0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {1, 0, 1}};

void project_corner(const int owner[3], double& x, double& y) {
  x = (owner[0] - 0.5) * 3.2 + (owner[2] - 0.5) * 1.3;
  y = (owner[1] - 0.5) * 3.2 + (owner[2] - 0.5) * 1.3;
}

// Twisted six-vertex arrangement: premisses in the upper row, the rejected
// disjuncts crosswise in the lower row.
constexpr double kNelson6[6][2] = {
    {0, 2.2},          // top
    {1.7, -1.1},       // d1
    {-1.7, -1.1},      // d2
    {-1.7, 1.1},       // n1
    {1.7, 1.1},        // n2
    {0, -2.2}};        // conclusion

// Seven/eight-vertex arrangement, following the general-form figure: the
// third disjunct sits in the middle with its negation below it.
constexpr double kNelson8[8][2] = {
    {6.25, -0.5},      // top
    {12, -10.5},       // d1
    {0.5, -10.5},      // d2
    {6.25, -5},        // d3
    {0.5, -4},         // n1
    {12, -4},          // n2
    {6.25, -9.5},      // n3
    {6.25, -14}};      // conclusion

void place_circle(Scene& scene) {
  std::sort(scene.nodes.begin(), scene.nodes.end(),
            [](const Placed& a, const Placed& b) { return a.id < b.id; });
  const double pi = 3.14159265358979323846;
  const std::size_t m = scene.nodes.size();
  for (std::size_t i = 0; i < m; ++i) {
    double angle = pi / 2 - 2 * pi * static_cast<double>(i) / static_cast<double>(m);
    scene.nodes[i].x = 2.5 * std::cos(angle);
    scene.nodes[i].y = 2.5 * std::sin(angle);
  }
}

Scene make_scene(const OppositionDiagram& d, const RenderOptions& opts) {
  Layout layout = opts.layout;
  if (layout == Layout::Nelson) {
    throw LayoutMismatchError("nelson layout requires a Nelson diagram");
  }
  if (layout == Layout::Hexagon && d.vertices().size() != 6) {
    throw LayoutMismatchError("hexagon layout requires 6 vertices, got " +
                              std::to_string(d.vertices().size()));
  }
  if (layout == Layout::Cube2d && d.vertices().size() != 8) {
    throw LayoutMismatchError("cube2d layout requires 8 vertices, got " +
                              std::to_string(d.vertices().size()));
  }
  if (layout == Layout::Auto) {
    layout = d.vertices().size() == 6   ? Layout::Hexagon
             : d.vertices().size() == 8 ? Layout::Cube2d
                                        : Layout::Circle;
  }

  Scene scene;
  scene.name = "opposition";
  for (const DiagramVertex& v : d.vertices()) scene.nodes.push_back({v.id, v.label, 0, 0});

  if (layout == Layout::Hexagon || layout == Layout::Cube2d) {
    const std::size_t k = layout == Layout::Hexagon ? 2 : 3;
    // Fall back to vertex order when the formulas do not expose the built
    // shape (imported diagrams are stored in that order anyway).
    std::vector<std::size_t> order;
    if (auto detected = detect_structure(d.vertices(), k)) {
      order = *detected;
    } else {
      for (std::size_t i = 0; i < d.vertices().size(); ++i) order.push_back(i);
    }
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      Placed& node = scene.nodes[order[slot]];
      if (layout == Layout::Hexagon) {
        node.x = kHexagon[slot][0];
        node.y = kHexagon[slot][1];
      } else {
        project_corner(kCubeCorner[slot], node.x, node.y);
      }
    }
    std::sort(scene.nodes.begin(), scene.nodes.end(),
              [](const Placed& a, const Placed& b) { return a.id < b.id; });
  } else {
    place_circle(scene);
  }

  for (const DiagramEdge& e : d.edges()) {
    scene.lines.push_back({e.src, e.dst, opts.colors.at(e.kind),
                           e.kind == EdgeKind::Subalternation});
  }
  return scene;
}

Scene make_scene(const NelsonDiagram& n, const RenderOptions& opts) {
  if (opts.layout != Layout::Auto && opts.layout != Layout::Nelson &&
      opts.layout != Layout::Circle) {
    throw LayoutMismatchError("opposition layouts do not apply to a Nelson diagram");
  }

  Scene scene;
  scene.name = "nelson";
  for (const NelsonVertex& v : n.vertices()) scene.nodes.push_back({v.id, v.label, 0, 0});

  const std::size_t k = n.disjunct_count();
  if (opts.layout != Layout::Circle && (k == 2 || k == 3)) {
    // Slot order [top, d1..dk, n1..nk, conclusion]; premisses take the slot
    // of the disjunct they negate, leftovers fill the free slots in order.
    std::vector<std::size_t> disjunctIdx, premissIdx;
    std::size_t topIdx = 0, conclIdx = 0;
    const auto& vs = n.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      switch (vs[i].role) {
        case Role::SharedDisjunctivePremiss: topIdx = i; break;
        case Role::CorrectConclusion: conclIdx = i; break;
        case Role::FalseConsequence: disjunctIdx.push_back(i); break;
        case Role::FactualPremiss: premissIdx.push_back(i); break;
      }
    }
    std::vector<std::size_t> negSlot(k, vs.size());
    std::vector<std::size_t> leftover;
    for (std::size_t p : premissIdx) {
      bool matched = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (negSlot[i] == vs.size() && negation_of(vs[p].formula, vs[disjunctIdx[i]].formula)) {
          negSlot[i] = p;
          matched = true;
          break;
        }
      }
      if (!matched) leftover.push_back(p);
    }
    for (std::size_t i = 0; i < k && !leftover.empty(); ++i) {
      if (negSlot[i] == vs.size()) {
        negSlot[i] = leftover.front();
        leftover.erase(leftover.begin());
      }
    }

    auto place = [&](std::size_t vertexIdx, std::size_t slot) {
      const double* pos = k == 2 ? kNelson6[slot] : kNelson8[slot];
      scene.nodes[vertexIdx].x = pos[0];
      scene.nodes[vertexIdx].y = pos[1];
    };
    place(topIdx, 0);
    for (std::size_t i = 0; i < k; ++i) place(disjunctIdx[i], 1 + i);
    for (std::size_t i = 0; i < k; ++i) {
      if (negSlot[i] != vs.size()) place(negSlot[i], 1 + k + i);
    }
    place(conclIdx, k == 2 ? 5 : 7);
    std::sort(scene.nodes.begin(), scene.nodes.end(),
              [](const Placed& a, const Placed& b) { return a.id < b.id; });
  } else {
    place_circle(scene);
  }

  for (const NelsonArrow& a : n.arrows()) {
    scene.lines.push_back({a.src, a.dst, opts.colors.at(EdgeKind::Subalternation), true});
  }
  return scene;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string escape_tex(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': case '%': case '$': case '#': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

const Placed& node_of(const Scene& scene, const std::string& id) {
  for (const Placed& p : scene.nodes) {
    if (p.id == id) return p;
  }
  throw Error("scene node lookup failed for '" + id + "'");
}

std::string emit_dot(const Scene& scene) {
  std::string out = "digraph " + scene.name + " {\n";
  for (const Placed& p : scene.nodes) {
    out += "  \"" + escape_dot(p.id) + "\" [label=\"" + escape_dot(p.label) +
           "\", pos=\"" + fmt(p.x) + "," + fmt(p.y) + "!\"];\n";
  }
  for (const Line& l : scene.lines) {
    out += "  \"" + escape_dot(l.src) + "\" -> \"" + escape_dot(l.dst) + "\" [";
    if (!l.directed) out += "dir=none, ";
    out += "color=" + l.color + "];\n";
  }
  out += "}\n";
  return out;
}

std::string emit_tikz(const Scene& scene) {
  std::string out = "\\begin{tikzpicture}[>=stealth,line width=1pt,every node/.style={draw}]\n";
  for (const Placed& p : scene.nodes) {
    out += "\\node (" + p.id + ") at (" + fmt(p.x) + "," + fmt(p.y) + ") {" +
           escape_tex(p.label) + "};\n";
  }
  for (const Line& l : scene.lines) {
    out += l.directed ? "\\draw[->," : "\\draw[-,";
    out += l.color + "] (" + l.src + ") -- (" + l.dst + ");\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

std::string emit_svg(const Scene& scene, const RenderOptions& opts) {
  const double width = 720, height = 600, margin = 60;
  double minX = 0, maxX = 0, minY = 0, maxY = 0;
  if (!scene.nodes.empty()) {
    minX = maxX = scene.nodes.front().x;
    minY = maxY = scene.nodes.front().y;
    for (const Placed& p : scene.nodes) {
      minX = std::min(minX, p.x);
      maxX = std::max(maxX, p.x);
      minY = std::min(minY, p.y);
      maxY = std::max(maxY, p.y);
    }
  }
  if (maxX - minX < 1e-9) { minX -= 1; maxX += 1; }
  if (maxY - minY < 1e-9) { minY -= 1; maxY += 1; }
  auto mapX = [&](double x) { return margin + (x - minX) / (maxX - minX) * (width - 2 * margin); };
  auto mapY = [&](double y) { return height - margin - (y - minY) / (maxY - minY) * (height - 2 * margin); };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"600\" "
      "viewBox=\"0 0 720 600\">\n"
      "  <defs>\n"
      "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
      "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
      "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
      opts.colors.at(EdgeKind::Subalternation) +
      "\"/>\n"
      "    </marker>\n"
      "  </defs>\n"
      "  <rect width=\"720\" height=\"600\" fill=\"white\"/>\n";

  // Lines are trimmed short of the labels at both ends.
  for (const Line& l : scene.lines) {
    const Placed& a = node_of(scene, l.src);
    const Placed& b = node_of(scene, l.dst);
    double x1 = mapX(a.x), y1 = mapY(a.y), x2 = mapX(b.x), y2 = mapY(b.y);
    double tx1 = x1 + 0.12 * (x2 - x1), ty1 = y1 + 0.12 * (y2 - y1);
    double tx2 = x2 + 0.12 * (x1 - x2), ty2 = y2 + 0.12 * (y1 - y2);
    out += "  <line x1=\"" + fmt(tx1) + "\" y1=\"" + fmt(ty1) + "\" x2=\"" + fmt(tx2) +
           "\" y2=\"" + fmt(ty2) + "\" stroke=\"" + l.color + "\" stroke-width=\"1.5\"";
    if (l.directed) out += " marker-end=\"url(#arrow)\"";
    out += "/>\n";
  }
  for (const Placed& p : scene.nodes) {
    out += "  <text x=\"" + fmt(mapX(p.x)) + "\" y=\"" + fmt(mapY(p.y)) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\">" +
           escape_xml(p.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit(const Scene& scene, const RenderOptions& opts) {
  switch (opts.format) {
    case RenderFormat::Dot: return emit_dot(scene);
    case RenderFormat::Tikz: return emit_tikz(scene);
    case RenderFormat::Svg: return emit_svg(scene, opts);
  }
  throw UnknownFormatError("?");
}

}  // namespace

std::string render_diagram(const OppositionDiagram& d, const RenderOptions& opts) {
  return emit(make_scene(d, opts), opts);
}

std::string render_diagram(const NelsonDiagram& n, const RenderOptions& opts) {
  return emit(make_scene(n, opts), opts);
}

}  // namespace oppgeo
