#include "sandlab/svg.hpp"

#include <sstream>

namespace sandlab {

namespace {

constexpr int kCell = 32;
constexpr int kMargin = 24;

struct Canvas {
    int cols;
    int rows;
    bool has_label;
    std::ostringstream out;

    int px(int x) const { return kMargin + x * kCell; }
    int py(int y) const { return kMargin + (rows - y) * kCell; }

    void open() {
        int w = 2 * kMargin + cols * kCell;
        int h = 2 * kMargin + rows * kCell + (has_label ? 20 : 0);
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void grid() {
        out << "<g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
        for (int x = 0; x <= cols; ++x)
            out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\"" << py(rows) << "\"/>\n";
        for (int y = 0; y <= rows; ++y)
            out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(cols) << "\" y2=\"" << py(y) << "\"/>\n";
        out << "</g>\n";
    }

    void polyline(const std::vector<Point>& pts, const char* colour, double width, const char* extra = "") {
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << width << "\"" << extra
            << " stroke-linejoin=\"round\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << px(pts[i].x) << ',' << py(pts[i].y);
        out << "\"/>\n";
    }

    void dot(Point p, const char* colour) {
        out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    }

    void label(const std::string& text) {
        if (text.empty()) return;
        std::string esc;
        for (char ch : text) {
            if (ch == '<') esc += "&lt;";
            else if (ch == '>') esc += "&gt;";
            else if (ch == '&') esc += "&amp;";
            else esc += ch;
        }
        out << "<text x=\"" << kMargin << "\" y=\"" << py(0) + kMargin + 12
            << "\" font-family=\"sans-serif\" font-size=\"14\">" << esc << "</text>\n";
    }

    std::string close() {
        out << "</svg>\n";
        return out.str();
    }
};

}  // namespace

std::string render_svg(const SawtoothPolyomino& p, const PolyominoStyle& style) {
    Canvas c{p.n + 1, p.d + 1, !style.label.empty(), {}};
    c.open();
    if (style.grid) c.grid();
    auto up = upper_points(p);
    auto lo = lower_points(p);
    std::vector<Point> outline = lo;
    outline.insert(outline.end(), up.rbegin() + 1, up.rend());
    c.out << "<polygon fill=\"#f3e9c6\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < outline.size(); ++i) c.out << (i ? " " : "") << c.px(outline[i].x) << ',' << c.py(outline[i].y);
    c.out << "\"/>\n";
    c.polyline(up, "black", 2.5);
    c.polyline(lo, "black", 2.5);
    if (style.cti_overlay && is_valid(p)) c.polyline(cti_bounce(p).path, "red", 2, " stroke-dasharray=\"6,3\"");
    if (style.itc_overlay && is_valid(p)) c.polyline(itc_bounce(p).path, "blue", 2, " stroke-dasharray=\"2,3\"");
    c.label(style.label);
    return c.close();
}

std::string render_svg(const SchroderWord& w, const PathStyle& style) {
    const int size = w.n() + w.d();
    Canvas c{size, size, !style.label.empty(), {}};
    c.open();
    if (style.grid) c.grid();
    c.polyline({{0, 0}, {size, size}}, "#808080", 1, " stroke-dasharray=\"4,4\"");
    auto pts = path_points(w.str());
    c.polyline(pts, "#1f4e9c", 3);
    if (style.bounce) c.polyline(schroder_bounce_antidiagonal(w).path, "red", 1.5, " stroke-dasharray=\"5,3\"");
    if (style.peaks)
        for (const Point& q : schroder_peaks(w)) c.dot(q, "red");
    c.label(style.label);
    return c.close();
}

}  // namespace sandlab
