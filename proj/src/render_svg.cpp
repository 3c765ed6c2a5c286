#include "toric/cli_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace toric {

namespace {

// Fixed-precision output keeps the SVG byte-stable.
std::string fmt(double v) {
    if (std::fabs(v) < 0.005) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Box {
    double xmin, xmax, ymin, ymax;
};

Box padded(double xmin, double xmax, double ymin, double ymax) {
    if (xmax - xmin <= 0) {
        xmin -= 1;
        xmax += 1;
    }
    if (ymax - ymin <= 0) {
        ymin -= 1;
        ymax += 1;
    }
    const double px = 0.2 * (xmax - xmin);
    const double py = 0.2 * (ymax - ymin);
    return {xmin - px, xmax + px, ymin - py, ymax + py};
}

// Compact chambers: nonempty, bounded, full-dimensional. Capped at 12
// hyperplanes since the sweep is over all sign vectors.
std::vector<Polyhedron> compact_chambers(const Arrangement& arr) {
    std::vector<Polyhedron> out;
    if (arr.size() > 12) return out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << arr.size()); ++bits) {
        Polyhedron ch = chamber(arr, SignVector::from_bits(bits, arr.size()));
        if (!is_feasible(ch).feasible() || !is_bounded(ch)) continue;
        if (affine_dimension(ch) != static_cast<int>(arr.dim())) continue;
        out.push_back(std::move(ch));
    }
    return out;
}

const char* kHeader = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
const char* kFill = "#c6dbef";
const char* kLine = "#08306b";
const char* kArrow = "#cb181d";

std::string render_line_1d(const Arrangement& arr) {
    std::vector<double> pts;
    std::vector<Rational> exact;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        exact.push_back(-arr.lift(i) / Rational(arr.normal(i)[0]));
        pts.push_back(exact.back().get_d());
    }
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    const Box box = padded(*lo, *hi, 0, 0);
    const double width = 480, height = 160, axis = 100;
    const double s = width / (box.xmax - box.xmin);
    auto px = [&](double x) { return (x - box.xmin) * s; };

    std::ostringstream out;
    out << kHeader << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    out << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
        << "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"" << kArrow << "\"/></marker></defs>\n";
    for (const auto& ch : compact_chambers(arr)) {
        const auto vs = enumerate_vertices(ch);
        if (vs.size() != 2) continue;
        const double a = px(vs[0][0].get_d()), b = px(vs[1][0].get_d());
        out << "<rect class=\"chamber\" x=\"" << fmt(std::min(a, b)) << "\" y=\"" << fmt(axis - 8) << "\" width=\""
            << fmt(std::fabs(b - a)) << "\" height=\"16\" fill=\"" << kFill << "\"/>\n";
    }
    out << "<line class=\"axis\" x1=\"0.00\" y1=\"" << fmt(axis) << "\" x2=\"" << fmt(width) << "\" y2=\"" << fmt(axis)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        // Coincident points get their labels and arrows stacked upward.
        std::size_t level = 0;
        for (std::size_t k = 0; k < i; ++k)
            if (exact[k] == exact[i]) ++level;
        const double x = px(pts[i]);
        const double y = axis - 20 - 22 * static_cast<double>(level);
        const double dir = arr.normal(i)[0] > 0 ? 1 : -1;
        out << "<circle class=\"hyperplane\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(axis) << "\" r=\"4\" fill=\"" << kLine
            << "\"/>\n";
        out << "<line class=\"normal\" x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x + 24 * dir)
            << "\" y2=\"" << fmt(y) << "\" stroke=\"" << kArrow << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y - 6) << "\" font-size=\"12\" text-anchor=\"middle\">H"
            << i + 1 << "</text>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(axis + 22) << "\" font-size=\"11\" text-anchor=\"middle\">"
            << format_rational(exact[i]) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_plane(const Arrangement& arr) {
    const std::size_t d = arr.size();
    std::vector<RatVector> crossings;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            RatMatrix m(2, 2);
            for (std::size_t c = 0; c < 2; ++c) {
                m(0, c) = arr.normal(i)[c];
                m(1, c) = arr.normal(j)[c];
            }
            RatVector x;
            bool unique = false;
            if (solve(m, {-arr.lift(i), -arr.lift(j)}, x, &unique) && unique) crossings.push_back(std::move(x));
        }
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());

    std::vector<std::array<double, 2>> anchor;
    if (!crossings.empty()) {
        for (const auto& c : crossings) anchor.push_back({c[0].get_d(), c[1].get_d()});
    } else {
        // All lines parallel: frame the feet of the perpendiculars from the origin.
        for (std::size_t i = 0; i < d; ++i) {
            const Rational nn = arr.normal(i)[0] * arr.normal(i)[0] + arr.normal(i)[1] * arr.normal(i)[1];
            anchor.push_back({Rational(-arr.lift(i) * arr.normal(i)[0] / nn).get_d(),
                              Rational(-arr.lift(i) * arr.normal(i)[1] / nn).get_d()});
        }
    }
    double xmin = anchor[0][0], xmax = xmin, ymin = anchor[0][1], ymax = ymin;
    for (const auto& a : anchor) {
        xmin = std::min(xmin, a[0]);
        xmax = std::max(xmax, a[0]);
        ymin = std::min(ymin, a[1]);
        ymax = std::max(ymax, a[1]);
    }
    const Box box = padded(xmin, xmax, ymin, ymax);
    const double s = 480 / std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    const double width = (box.xmax - box.xmin) * s, height = (box.ymax - box.ymin) * s;
    auto px = [&](double x) { return (x - box.xmin) * s; };
    auto py = [&](double y) { return (box.ymax - y) * s; };

    std::ostringstream out;
    out << kHeader << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    out << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
        << "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"" << kArrow << "\"/></marker></defs>\n";

    for (const auto& ch : compact_chambers(arr)) {
        std::vector<std::array<double, 2>> poly;
        for (const auto& c : crossings)
            if (ch.contains(c)) poly.push_back({c[0].get_d(), c[1].get_d()});
        double cx = 0, cy = 0;
        for (const auto& p : poly) {
            cx += p[0];
            cy += p[1];
        }
        cx /= static_cast<double>(poly.size());
        cy /= static_cast<double>(poly.size());
        std::sort(poly.begin(), poly.end(), [&](const auto& a, const auto& b) {
            return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
        });
        out << "<polygon class=\"chamber\" points=\"";
        for (std::size_t k = 0; k < poly.size(); ++k)
            out << (k ? " " : "") << fmt(px(poly[k][0])) << ',' << fmt(py(poly[k][1]));
        out << "\" fill=\"" << kFill << "\" stroke=\"none\"/>\n";
    }

    const double arrow_len = 0.06 * std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    for (std::size_t i = 0; i < d; ++i) {
        const double ux = arr.normal(i)[0].get_d(), uy = arr.normal(i)[1].get_d();
        const double nn = ux * ux + uy * uy;
        const double lam = arr.lift(i).get_d();
        const double ox = -lam * ux / nn, oy = -lam * uy / nn;
        const double dx = -uy, dy = ux;
        // Liang-Barsky clip of o + t*(dx, dy) to the viewport.
        double t0 = -1e300, t1 = 1e300;
        auto clip = [&](double p, double q) {
            if (p == 0) return q >= 0;
            const double r = q / p;
            if (p < 0)
                t0 = std::max(t0, r);
            else
                t1 = std::min(t1, r);
            return true;
        };
        if (!clip(-dx, ox - box.xmin) || !clip(dx, box.xmax - ox) || !clip(-dy, oy - box.ymin) ||
            !clip(dy, box.ymax - oy) || t0 > t1)
            continue;
        const double x0 = ox + t0 * dx, y0 = oy + t0 * dy, x1 = ox + t1 * dx, y1 = oy + t1 * dy;
        out << "<line class=\"hyperplane\" x1=\"" << fmt(px(x0)) << "\" y1=\"" << fmt(py(y0)) << "\" x2=\""
            << fmt(px(x1)) << "\" y2=\"" << fmt(py(y1)) << "\" stroke=\"" << kLine << "\" stroke-width=\"1.5\"/>\n";
        const double mx = (x0 + x1) / 2, my = (y0 + y1) / 2, un = std::sqrt(nn);
        out << "<line class=\"normal\" x1=\"" << fmt(px(mx)) << "\" y1=\"" << fmt(py(my)) << "\" x2=\""
            << fmt(px(mx + arrow_len * ux / un)) << "\" y2=\"" << fmt(py(my + arrow_len * uy / un)) << "\" stroke=\""
            << kArrow << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        const double lx = x1 - 0.04 * (x1 - x0), ly = y1 - 0.04 * (y1 - y0);
        out << "<text x=\"" << fmt(px(lx) + 4) << "\" y=\"" << fmt(py(ly) - 4) << "\" font-size=\"12\">H" << i + 1
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const Arrangement& arr) {
    if (arr.dim() == 1) return render_line_1d(arr);
    if (arr.dim() == 2) return render_plane(arr);
    throw std::invalid_argument("rendering supports n <= 2");
}

}  // namespace toric
