#include "gallery/polygon_io.hpp"

#include <json.hpp>
#include <sstream>

namespace gallery {

namespace {

std::pair<int, int> line_column_of(const std::string& text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Rational coordinate_from_json(const nlohmann::json& v, std::size_t vertex, int axis) {
    auto fail = [&](const std::string& why) -> Rational {
        std::ostringstream msg;
        msg << "vertex " << vertex << (axis == 0 ? " x" : " y") << ": " << why;
        throw SyntaxError(msg.str());
    };
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_number()) return fail("floating point coordinates are not accepted");
    if (v.is_string()) {
        try {
            return rational_from_string(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            return fail(e.what());
        }
    }
    return fail("expected an integer or a \"p/q\" string");
}

}  // namespace

SimplePolygon parse_polygon(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column_of(text, e.byte);
        throw SyntaxError(e.what(), line, column);
    }
    if (!doc.is_object()) throw SyntaxError("top-level value must be an object");
    if (!doc.contains("vertices")) throw SyntaxError("missing \"vertices\" array");
    const nlohmann::json& verts = doc["vertices"];
    if (!verts.is_array()) throw SyntaxError("\"vertices\" must be an array");
    if (doc.contains("name") && !doc["name"].is_string())
        throw SyntaxError("\"name\" must be a string");
    if (doc.contains("metadata") && !doc["metadata"].is_object())
        throw SyntaxError("\"metadata\" must be an object");

    std::vector<Point> pts;
    pts.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const nlohmann::json& pair = verts[i];
        if (!pair.is_array() || pair.size() != 2) {
            std::ostringstream msg;
            msg << "vertex " << i << " must be a [x, y] pair";
            throw SyntaxError(msg.str());
        }
        pts.emplace_back(coordinate_from_json(pair[0], i, 0),
                         coordinate_from_json(pair[1], i, 1));
    }
    return SimplePolygon::validate(std::move(pts));
}

namespace {

std::string coordinate_to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_str();
    return "\"" + rational_to_string(r) + "\"";
}

}  // namespace

std::string emit_polygon(const SimplePolygon& poly) {
    std::ostringstream out;
    out << "{\n  \"vertices\": [\n";
    for (int i = 0; i < poly.size(); ++i) {
        const Point& p = poly.vertex(i);
        out << "    [" << coordinate_to_json(p.x) << ", " << coordinate_to_json(p.y) << "]";
        if (i + 1 < poly.size()) out << ",";
        out << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

}  // namespace gallery
