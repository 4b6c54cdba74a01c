#include <doctest.h>

#include <string>

#include "oppgeo/corpus.hpp"
#include "oppgeo/errors.hpp"
#include "oppgeo/render.hpp"

using namespace oppgeo;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

OppositionDiagram kantian() {
  return std::get<OppositionDiagram>(corpus_document("kantian"));
}

}  // namespace

TEST_CASE("format names parse") {
  CHECK(parse_render_format("dot") == RenderFormat::Dot);
  CHECK(parse_render_format("tikz") == RenderFormat::Tikz);
  CHECK(parse_render_format("svg") == RenderFormat::Svg);
  CHECK_THROWS_WITH_AS(parse_render_format("png"), "unknown render format: png",
                       UnknownFormatError);
}

TEST_CASE("hexagon DOT output is stable byte for byte") {
  const std::string expected =
      "digraph opposition {\n"
      "  \"bottom\" [label=\"synthetic a priori\", pos=\"0.00,-2.20!\"];\n"
      "  \"not_p\" [label=\"a priori\", pos=\"-1.70,-1.10!\"];\n"
      "  \"not_q\" [label=\"synthetic\", pos=\"1.70,-1.10!\"];\n"
      "  \"p\" [label=\"a posteriori\", pos=\"1.70,1.10!\"];\n"
      "  \"q\" [label=\"analytic\", pos=\"-1.70,1.10!\"];\n"
      "  \"top\" [label=\"analytic or a posteriori\", pos=\"0.00,2.20!\"];\n"
      "  \"bottom\" -> \"top\" [dir=none, color=red];\n"
      "  \"not_p\" -> \"p\" [dir=none, color=red];\n"
      "  \"not_q\" -> \"q\" [dir=none, color=red];\n"
      "  \"bottom\" -> \"p\" [dir=none, color=blue];\n"
      "  \"bottom\" -> \"q\" [dir=none, color=blue];\n"
      "  \"p\" -> \"q\" [dir=none, color=blue];\n"
      "  \"not_p\" -> \"not_q\" [dir=none, color=green];\n"
      "  \"not_p\" -> \"top\" [dir=none, color=green];\n"
      "  \"not_q\" -> \"top\" [dir=none, color=green];\n"
      "  \"bottom\" -> \"not_p\" [color=black];\n"
      "  \"bottom\" -> \"not_q\" [color=black];\n"
      "  \"p\" -> \"not_q\" [color=black];\n"
      "  \"p\" -> \"top\" [color=black];\n"
      "  \"q\" -> \"not_p\" [color=black];\n"
      "  \"q\" -> \"top\" [color=black];\n"
      "}\n";
  RenderOptions opts;
  CHECK(render_diagram(kantian(), opts) == expected);
  CHECK(render_diagram(kantian(), opts) == render_diagram(kantian(), opts));
}

TEST_CASE("nelson TikZ output is stable byte for byte") {
  const std::string expected =
      "\\begin{tikzpicture}[>=stealth,line width=1pt,every node/.style={draw}]\n"
      "\\node (bottom) at (0.00,-2.20) {The axioms of geometry stem neither from "
      "experience nor from logic};\n"
      "\\node (not_p) at (-1.70,1.10) {The axioms of geometry do not stem from "
      "experience};\n"
      "\\node (not_q) at (1.70,1.10) {The axioms of geometry do not stem from logic};\n"
      "\\node (p) at (1.70,-1.10) {The axioms of geometry stem from experience};\n"
      "\\node (q) at (-1.70,-1.10) {The axioms of geometry stem from logic};\n"
      "\\node (top) at (0.00,2.20) {Every judgment is either logical or empirical};\n"
      "\\draw[->,black] (not_p) -- (bottom);\n"
      "\\draw[->,black] (not_p) -- (q);\n"
      "\\draw[->,black] (not_q) -- (bottom);\n"
      "\\draw[->,black] (not_q) -- (p);\n"
      "\\draw[->,black] (top) -- (p);\n"
      "\\draw[->,black] (top) -- (q);\n"
      "\\end{tikzpicture}\n";
  RenderOptions opts;
  opts.format = RenderFormat::Tikz;
  NelsonDiagram n = std::get<NelsonDiagram>(corpus_document("kantian-nelson"));
  CHECK(render_diagram(n, opts) == expected);
}

TEST_CASE("SVG output carries the expected scaffolding") {
  RenderOptions opts;
  opts.format = RenderFormat::Svg;
  std::string svg = render_diagram(kantian(), opts);

  CHECK(contains(svg, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
                      "height=\"600\" viewBox=\"0 0 720 600\">"));
  CHECK(contains(svg, "<marker id=\"arrow\""));
  CHECK(contains(svg, "<rect width=\"720\" height=\"600\" fill=\"white\"/>"));
  // Contradictory diagonal, trimmed 12% at each end so it stops short of the
  // labels.
  CHECK(contains(svg, "<line x1=\"360.00\" y1=\"482.40\" x2=\"360.00\" y2=\"117.60\" "
                      "stroke=\"red\" stroke-width=\"1.5\"/>"));
  CHECK(contains(svg, "marker-end=\"url(#arrow)\""));
  CHECK(contains(svg, "<text x=\"360.00\" y=\"60.00\" text-anchor=\"middle\" "
                      "dominant-baseline=\"middle\" font-family=\"sans-serif\" "
                      "font-size=\"13\">analytic or a posteriori</text>"));
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK(render_diagram(kantian(), opts) == svg);
}

TEST_CASE("explicit layouts reject diagrams of the wrong shape") {
  OppositionDiagram hexagon = build_opposition_structure(
      {parse_formula("p"), parse_formula("q")}, Formula::top());
  OppositionDiagram cube = build_opposition_structure(
      {parse_formula("p"), parse_formula("q"), parse_formula("r")}, Formula::top());
  NelsonDiagram nelson = build_nelson({parse_formula("p"), parse_formula("q")},
                                      Formula::top(), true);
  RenderOptions opts;

  opts.layout = Layout::Hexagon;
  CHECK_THROWS_WITH_AS(render_diagram(cube, opts),
                       "layout mismatch: hexagon layout requires 6 vertices, got 8",
                       LayoutMismatchError);
  CHECK_THROWS_WITH_AS(render_diagram(nelson, opts),
                       "layout mismatch: opposition layouts do not apply to a Nelson "
                       "diagram",
                       LayoutMismatchError);
  opts.layout = Layout::Cube2d;
  CHECK_THROWS_WITH_AS(render_diagram(hexagon, opts),
                       "layout mismatch: cube2d layout requires 8 vertices, got 6",
                       LayoutMismatchError);
  opts.layout = Layout::Nelson;
  CHECK_THROWS_WITH_AS(render_diagram(hexagon, opts),
                       "layout mismatch: nelson layout requires a Nelson diagram",
                       LayoutMismatchError);

  // The right explicit layouts go through.
  opts.layout = Layout::Hexagon;
  CHECK_FALSE(render_diagram(hexagon, opts).empty());
  opts.layout = Layout::Cube2d;
  CHECK_FALSE(render_diagram(cube, opts).empty());
  opts.layout = Layout::Nelson;
  CHECK_FALSE(render_diagram(nelson, opts).empty());
}

TEST_CASE("diagrams outside the fixed families fall back to a circle") {
  std::vector<DiagramVertex> vs = {{"a", "p", parse_formula("p")},
                                   {"b", "!p", parse_formula("!p")},
                                   {"c", "q", parse_formula("q")},
                                   {"d", "!q", parse_formula("!q")}};
  OppositionDiagram four(AtomUniverse({"p", "q"}), Formula::top(), vs,
                         {{"a", "b", EdgeKind::Contradictory},
                          {"c", "d", EdgeKind::Contradictory}});
  RenderOptions opts;
  std::string dot = render_diagram(four, opts);
  CHECK(contains(dot, "\"a\" [label=\"p\", pos=\"0.00,2.50!\"];"));
  CHECK(contains(dot, "\"b\" [label=\"!p\", pos=\"2.50,0.00!\"];"));
  CHECK(contains(dot, "\"c\" [label=\"q\", pos=\"0.00,-2.50!\"];"));
  CHECK(contains(dot, "\"d\" [label=\"!q\", pos=\"-2.50,0.00!\"];"));
}

TEST_CASE("the eight-vertex nelson layout places the shared premiss up top") {
  NelsonDiagram n = build_nelson(
      {parse_formula("p"), parse_formula("q"), parse_formula("r")}, Formula::top(), true);
  RenderOptions opts;
  std::string dot = render_diagram(n, opts);
  CHECK(contains(dot, "digraph nelson {"));
  CHECK(contains(dot, "\"top\" [label=\"p | q | r\", pos=\"6.25,-0.50!\"];"));
  CHECK(contains(dot, "\"concl\" [label=\"!p & !q & !r\", pos=\"6.25,-14.00!\"];"));
  // Argument arrows are directed and use the subalternation color.
  CHECK(contains(dot, "  \"top\" -> \"d1\" [color=black];\n"));
  CHECK_FALSE(contains(dot, "dir=none"));
}

TEST_CASE("labels are escaped per format") {
  std::vector<DiagramVertex> vs = {
      {"a", "x & y_1 100% #2 {z} $5 \"q\" ~a^b \\ <tag>", parse_formula("p")},
      {"b", "plain", parse_formula("!p")}};
  OppositionDiagram d(AtomUniverse({"p"}), Formula::top(), vs,
                      {{"a", "b", EdgeKind::Contradictory}});

  RenderOptions opts;
  std::string dot = render_diagram(d, opts);
  CHECK(contains(dot, "label=\"x & y_1 100% #2 {z} $5 \\\"q\\\" ~a^b \\\\ <tag>\""));

  opts.format = RenderFormat::Tikz;
  std::string tikz = render_diagram(d, opts);
  CHECK(contains(tikz, "{x \\& y\\_1 100\\% \\#2 \\{z\\} \\$5 \"q\" "
                       "\\textasciitilde{}a\\textasciicircum{}b \\textbackslash{} "
                       "<tag>}"));

  opts.format = RenderFormat::Svg;
  std::string svg = render_diagram(d, opts);
  CHECK(contains(svg, "x &amp; y_1 100% #2 {z} $5 \"q\" ~a^b \\ &lt;tag&gt;"));
}

TEST_CASE("edge colors come from the options") {
  OppositionDiagram hexagon = build_opposition_structure(
      {parse_formula("p"), parse_formula("q")}, Formula::top());
  RenderOptions opts;
  opts.colors[EdgeKind::Contradictory] = "crimson";
  opts.colors[EdgeKind::Subalternation] = "gray40";
  std::string dot = render_diagram(hexagon, opts);
  CHECK(contains(dot, "[dir=none, color=crimson];"));
  CHECK(contains(dot, "[color=gray40];"));
  CHECK_FALSE(contains(dot, "color=red"));
  CHECK_FALSE(contains(dot, "color=black"));
}
