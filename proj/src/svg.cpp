#include "gallery/svg.hpp"

#include <sstream>

namespace gallery {

namespace {

const char* color_fill(Color c) {
    switch (c) {
        case Color::R: return "#d64541";
        case Color::G: return "#27ae60";
        case Color::B: return "#2e6fd8";
    }
    return "#333333";
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
    const SimplePolygon& poly = spec.polygon;
    const int n = poly.size();
    for (int g : spec.guards)
        if (g < 0 || g >= n) throw InvalidGuardIndex(g);
    if (spec.coloring && spec.coloring->colors.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("coloring does not match polygon size");
    if (spec.triangulation && spec.triangulation->polygon.size() != n)
        throw std::invalid_argument("triangulation does not match polygon size");
    if (spec.canvas < 64) throw std::invalid_argument("canvas too small");

    Rational xmin = poly.vertex(0).x, xmax = xmin;
    Rational ymin = poly.vertex(0).y, ymax = ymin;
    for (const Point& p : poly.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Rational w = xmax - xmin, h = ymax - ymin;
    Rational maxdim = std::max(w, h);
    Rational margin = maxdim / 10;
    Rational scale = Rational(spec.canvas) / (maxdim + 2 * margin);

    auto sx = [&](const Rational& x) { return rational_to_decimal((x - xmin + margin) * scale, 2); };
    auto sy = [&](const Rational& y) { return rational_to_decimal((ymax + margin - y) * scale, 2); };
    auto pt = [&](const Point& p) { return sx(p.x) + "," + sy(p.y); };

    std::string width = rational_to_decimal((w + 2 * margin) * scale, 2);
    std::string height = rational_to_decimal((h + 2 * margin) * scale, 2);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    svg << "  <polygon points=\"";
    for (int i = 0; i < n; ++i) svg << (i ? " " : "") << pt(poly.vertex(i));
    svg << "\" fill=\"#f6f6f0\" stroke=\"none\"/>\n";

    for (const Cell& c : spec.blindspots) {
        svg << "  <polygon points=\"" << pt(c.a) << " " << pt(c.b) << " " << pt(c.c)
            << "\" fill=\"#f0a8a0\" stroke=\"none\"/>\n";
    }

    if (spec.triangulation) {
        for (const auto& d : spec.triangulation->diagonals) {
            svg << "  <line x1=\"" << sx(poly.vertex(d.first).x) << "\" y1=\""
                << sy(poly.vertex(d.first).y) << "\" x2=\"" << sx(poly.vertex(d.second).x)
                << "\" y2=\"" << sy(poly.vertex(d.second).y)
                << "\" stroke=\"#888888\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
        }
    }

    svg << "  <polygon points=\"";
    for (int i = 0; i < n; ++i) svg << (i ? " " : "") << pt(poly.vertex(i));
    svg << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";

    for (int g : spec.guards) {
        svg << "  <circle cx=\"" << sx(poly.vertex(g).x) << "\" cy=\"" << sy(poly.vertex(g).y)
            << "\" r=\"11\" fill=\"none\" stroke=\"#e8a000\" stroke-width=\"3.5\"/>\n";
    }

    for (int i = 0; i < n; ++i) {
        const char* fill = spec.coloring ? color_fill(spec.coloring->colors[i]) : "#333333";
        svg << "  <circle cx=\"" << sx(poly.vertex(i).x) << "\" cy=\"" << sy(poly.vertex(i).y)
            << "\" r=\"5\" fill=\"" << fill << "\" stroke=\"#111111\" stroke-width=\"1\"/>\n";
        svg << "  <text x=\"" << sx(poly.vertex(i).x) << "\" y=\"" << sy(poly.vertex(i).y)
            << "\" dx=\"8\" dy=\"-8\" font-family=\"monospace\" font-size=\"14\" fill=\"#111111\">"
            << i << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gallery
