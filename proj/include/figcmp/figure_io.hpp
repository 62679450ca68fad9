#pragma once

#include <string>

#include "figcmp/catalog.hpp"
#include "figcmp/figure.hpp"

namespace figcmp {

/// Parse failure with a human-readable position (line/column for syntax
/// errors, a document path for semantic ones).
struct parse_error : geom_error {
  using geom_error::geom_error;
};

/// Figure documents: {"geometry": tag, "figure": node}.  Node objects are
/// type-tagged ("points", "half_plane", "half_line", "segment", "disc",
/// "angle_wedge", "single_point", "line", "arc", "orbit", "union",
/// "difference", "complement").
std::string serialize_figure(const SymbolicFigure& f);
SymbolicFigure parse_figure(const std::string& text);

/// Witness documents: {"geometry": tag, "kind": "euclidean|mobius|elliptic",
/// ...params}.
std::string serialize_witness(const Isometry& f);
Isometry parse_witness(const std::string& text);

/// Report serialization; JSON keys are {entry, clauses, assumptions, verdict}
/// in that order.
std::string report_to_json(const ExampleReport& r);
std::string report_to_text(const ExampleReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace figcmp
