#pragma once

#include <string>

#include "gallery/polygon.hpp"

namespace gallery {

// Polygon file format: a JSON document with an optional "name" string,
// an optional "metadata" object, and a required "vertices" array of
// [x, y] pairs. Coordinates are JSON integers or strings "p" / "p/q" in
// lowest terms; floating point literals are rejected so exactness is
// preserved end to end.
//
// Parse errors raise SyntaxError (line/column filled for malformed JSON,
// 0/0 with a message for structural problems); the vertex list is then
// validated and ValidationError propagates.
SimplePolygon parse_polygon(const std::string& text);

// Canonical serialization: vertices only, integers as JSON numbers and
// other rationals as "p/q" strings. parse_polygon(emit_polygon(P)) == P.
std::string emit_polygon(const SimplePolygon& poly);

}  // namespace gallery
