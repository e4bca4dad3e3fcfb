#include "gallery/geometry.hpp"

#include <stdexcept>

namespace gallery {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // mpq_set_str accepts "p" and "p/q" but is lenient about whitespace
    // and bases; pre-check the shape so "1.5" and "1e3" are rejected.
    std::size_t slash = text.find('/');
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    bool ok;
    if (slash == std::string::npos) {
        ok = digits_ok(text, true);
    } else {
        ok = digits_ok(text.substr(0, slash), true) &&
             digits_ok(text.substr(slash + 1), false);
    }
    if (!ok) throw std::invalid_argument("malformed rational literal: " + text);

    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
    Int num = r.get_num();
    Int den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int ipart = num / den;
    Int rem = num % den;
    std::string out = (neg && (ipart != 0 || rem != 0)) ? "-" : "";
    out += ipart.get_str();
    if (digits > 0 && rem != 0) {
        std::string frac;
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            Int d = rem / den;
            rem %= den;
            frac += d.get_str();
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

Point midpoint(const Point& a, const Point& b) {
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2);
}

Segment::Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {
    if (a == b) throw std::invalid_argument("degenerate segment");
}

int orientation_sign(const Point& p, const Point& q, const Point& r) {
    Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = orientation_sign(p, q, r);
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation_sign(a, b, p) != 0) return false;
    if (cmp(p.x, std::min(a.x, b.x)) < 0 || cmp(p.x, std::max(a.x, b.x)) > 0)
        return false;
    if (cmp(p.y, std::min(a.y, b.y)) < 0 || cmp(p.y, std::max(a.y, b.y)) > 0)
        return false;
    return true;
}

namespace {

// 1D coordinate of a point on the line ab, using the dominant axis.
const Rational& axis_value(const Point& p, bool use_x) {
    return use_x ? p.x : p.y;
}

}  // namespace

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2) {
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    IntersectionResult res;

    int o1 = orientation_sign(a, b, c);
    int o2 = orientation_sign(a, b, d);

    if (o1 == 0 && o2 == 0) {
        // All four points on one line: interval overlap on the dominant axis.
        bool use_x = cmp(a.x, b.x) != 0;
        const Rational &a1 = axis_value(a, use_x), &b1 = axis_value(b, use_x);
        const Rational &c1 = axis_value(c, use_x), &d1 = axis_value(d, use_x);
        const Point& lo1p = a1 <= b1 ? a : b;
        const Point& hi1p = a1 <= b1 ? b : a;
        const Point& lo2p = c1 <= d1 ? c : d;
        const Point& hi2p = c1 <= d1 ? d : c;
        const Point& lo = axis_value(lo1p, use_x) >= axis_value(lo2p, use_x) ? lo1p : lo2p;
        const Point& hi = axis_value(hi1p, use_x) <= axis_value(hi2p, use_x) ? hi1p : hi2p;
        int cval = cmp(axis_value(lo, use_x), axis_value(hi, use_x));
        if (cval > 0) return res;  // disjoint
        if (cval == 0) {
            res.kind = IntersectionResult::Kind::Point;
            res.point = lo;
            return res;
        }
        res.kind = IntersectionResult::Kind::Overlap;
        res.overlap = Segment(lo, hi);
        return res;
    }

    int o3 = orientation_sign(c, d, a);
    int o4 = orientation_sign(c, d, b);

    // Endpoint lying on the other segment (includes shared endpoints).
    if (o1 == 0 && on_segment(c, a, b)) {
        res.kind = IntersectionResult::Kind::Point;
        res.point = c;
        return res;
    }
    if (o2 == 0 && on_segment(d, a, b)) {
        res.kind = IntersectionResult::Kind::Point;
        res.point = d;
        return res;
    }
    if (o3 == 0 && on_segment(a, c, d)) {
        res.kind = IntersectionResult::Kind::Point;
        res.point = a;
        return res;
    }
    if (o4 == 0 && on_segment(b, c, d)) {
        res.kind = IntersectionResult::Kind::Point;
        res.point = b;
        return res;
    }

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        // Proper transversal crossing: solve a + t(b-a) = c + u(d-c).
        Rational rx = b.x - a.x, ry = b.y - a.y;
        Rational sx = d.x - c.x, sy = d.y - c.y;
        Rational denom = rx * sy - ry * sx;
        Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
        res.kind = IntersectionResult::Kind::Point;
        res.point = Point(a.x + t * rx, a.y + t * ry);
        res.proper = true;
        return res;
    }

    return res;
}

PointLocation point_in_ring(const Point& q, const std::vector<Point>& ring) {
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (on_segment(q, a, b)) return PointLocation::OnBoundary;
    }
    // Even-odd ray crossing, half-open in y so vertices count once and
    // horizontal edges drop out. Exact: q is off the boundary here.
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        bool above_a = cmp(a.y, q.y) > 0;
        bool above_b = cmp(b.y, q.y) > 0;
        if (above_a == above_b) continue;
        // x where edge ab meets the horizontal line through q.
        Rational xi = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (xi > q.x) ++crossings;
    }
    return (crossings % 2 == 1) ? PointLocation::Inside : PointLocation::Outside;
}

Rational ring_signed_area(const std::vector<Point>& ring) {
    Rational sum = 0;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum / 2;
}

Rational triangle_area(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return abs(cross) / 2;
}

}  // namespace gallery
