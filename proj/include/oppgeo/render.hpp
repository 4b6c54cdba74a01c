#pragma once

#include <map>
#include <string>

#include "oppgeo/diagram.hpp"
#include "oppgeo/nelson.hpp"

namespace oppgeo {

enum class RenderFormat { Dot, Tikz, Svg };

// Fixed layout families, matching the figure conventions: hexagon places the
// disjunction at the top and its negation at the bottom; cube2d projects the
// cube of opposition obliquely; nelson is the twisted argument arrangement
// with premisses above and consequences below. Auto picks hexagon for
// 6-vertex opposition diagrams, cube2d for 8-vertex ones, nelson for Nelson
// diagrams, and an id-ordered circle otherwise.
enum class Layout { Hexagon, Cube2d, Nelson, Auto, Circle };

// Maps "dot" / "tikz" / "svg"; throws UnknownFormatError otherwise.
RenderFormat parse_render_format(const std::string& name);

struct RenderOptions {
  RenderFormat format = RenderFormat::Dot;
  Layout layout = Layout::Auto;
  // Color names are emitted verbatim. Defaults follow the standard coding:
  // contradictories red, contraries blue, subcontraries green, and black
  // subalternation (and argument) arrows.
  std::map<EdgeKind, std::string> colors = {
      {EdgeKind::Contradictory, "red"},
      {EdgeKind::Contrary, "blue"},
      {EdgeKind::Subcontrary, "green"},
      {EdgeKind::Subalternation, "black"},
  };
};

// Emits the diagram as self-contained DOT, TikZ, or SVG text. Output is
// byte-deterministic for equal inputs: nodes are emitted sorted by id at
// fixed coordinates, edges in the diagram's canonical order. Throws
// LayoutMismatchError when an explicit layout does not fit the diagram.
std::string render_diagram(const OppositionDiagram& d, const RenderOptions& opts);
std::string render_diagram(const NelsonDiagram& n, const RenderOptions& opts);

}  // namespace oppgeo
