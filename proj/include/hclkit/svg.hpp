#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "hclkit/analysis.hpp"
#include "hclkit/error.hpp"
#include "hclkit/hex.hpp"

namespace hclkit {

struct NamedPalette {
    std::string name;
    std::vector<std::string> colors;
};

struct SwatchGroup {
    std::string label;
    std::vector<NamedPalette> palettes;
};

struct SwatchLayout {
    double width = 480;       // width of the color strip
    double label_width = 120;
    double row_height = 22;
    double row_gap = 4;
    double group_gap = 14;
    double group_label_height = 18;
    double margin = 10;
    double font_size = 11;
};

namespace svg {

inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00")
        s = "0.00";
    return s;
}

inline std::string escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += ch;
        }
    }
    return out;
}

inline std::string header(double w, double h)
{
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

// fill plus fill-opacity for 8-digit hexes.
inline std::string fill_attr(const Rgba& c)
{
    std::string hex = *hex_encode(c.color, true);
    std::string s = "fill=\"" + hex + "\"";
    if (c.alpha)
        s += " fill-opacity=\"" + num(*c.alpha / 255.0) + "\"";
    return s;
}

inline std::string text(double x, double y, const std::string& s, double size,
                        const char* anchor = "start", const char* extra = "")
{
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           num(size) + "\" text-anchor=\"" + anchor + "\"" + extra + ">" + escape(s) + "</text>\n";
}

inline std::string polyline(const std::vector<std::array<double, 2>>& pts, const char* color, double width)
{
    std::string s = "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" +
                    num(width) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += (i ? " " : "") + num(pts[i][0]) + "," + num(pts[i][1]);
    return s + "\"/>\n";
}

} // namespace svg

// One row of equal-width rectangles per palette, grouped under optional labels.
inline std::string swatch_svg(const std::vector<SwatchGroup>& groups, const SwatchLayout& lay = {})
{
    std::size_t rows = 0;
    for (const auto& g : groups)
        rows += g.palettes.size();
    if (rows == 0)
        throw InvalidInput("swatch_svg needs at least one palette", "palettes");

    double y = lay.margin;
    std::string body;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& g = groups[gi];
        if (gi > 0)
            y += lay.group_gap;
        body += "<g class=\"group\">\n";
        if (!g.label.empty()) {
            body += svg::text(lay.margin, y + lay.group_label_height * 0.75, g.label, lay.font_size + 1,
                              "start", " font-weight=\"bold\"");
            y += lay.group_label_height;
        }
        for (const auto& pal : g.palettes) {
            auto cols = parse_colors(pal.colors);
            body += "<g class=\"palette\">\n";
            body += svg::text(lay.margin + lay.label_width - 6, y + lay.row_height / 2 + lay.font_size / 3,
                              pal.name, lay.font_size, "end");
            double x0 = lay.margin + lay.label_width;
            double w = cols.empty() ? 0 : lay.width / cols.size();
            for (std::size_t k = 0; k < cols.size(); ++k)
                body += "<rect x=\"" + svg::num(x0 + k * w) + "\" y=\"" + svg::num(y) + "\" width=\"" +
                        svg::num(w) + "\" height=\"" + svg::num(lay.row_height) + "\" " +
                        svg::fill_attr(cols[k]) + "/>\n";
            body += "</g>\n";
            y += lay.row_height + lay.row_gap;
        }
        body += "</g>\n";
    }
    double total_w = 2 * lay.margin + lay.label_width + lay.width;
    double total_h = y - lay.row_gap + lay.margin;
    return svg::header(total_w, total_h) +
           "<rect x=\"0\" y=\"0\" width=\"" + svg::num(total_w) + "\" height=\"" + svg::num(total_h) +
           "\" fill=\"#FFFFFF\"/>\n" + body + "</svg>\n";
}

inline std::string swatch_svg(const std::vector<NamedPalette>& palettes, const SwatchLayout& lay = {})
{
    return swatch_svg(std::vector<SwatchGroup>{{"", palettes}}, lay);
}

// HCL spectrum line chart (hue red, chroma green, luminance blue) above a swatch
// strip, optionally preceded by an R/G/B panel.
inline std::string spectrum_svg(const SpectrumTrace& t, bool include_rgb)
{
    const double W = 640, left = 50, right = 50, panel_h = 220, gap = 30, strip_h = 24, top = 20;
    const double pw = W - left - right;
    int n = t.n;
    auto xpos = [&](int k) { return left + (n <= 1 ? pw / 2 : pw * k / (n - 1)); };

    std::string body;
    double y0 = top;

    auto frame = [&](double py) {
        body += "<rect x=\"" + svg::num(left) + "\" y=\"" + svg::num(py) + "\" width=\"" + svg::num(pw) +
                "\" height=\"" + svg::num(panel_h) + "\" fill=\"none\" stroke=\"#888888\"/>\n";
    };
    auto ticks = [&](double py, double lo, double hi, int count, bool right_side) {
        for (int i = 0; i <= count; ++i) {
            double v = lo + (hi - lo) * i / count;
            double yy = py + panel_h - panel_h * i / count;
            char lab[32];
            std::snprintf(lab, sizeof lab, "%g", v);
            if (right_side)
                body += svg::text(left + pw + 6, yy + 4, lab, 10, "start");
            else
                body += svg::text(left - 6, yy + 4, lab, 10, "end");
        }
    };

    if (include_rgb) {
        body += "<g class=\"rgb\">\n";
        frame(y0);
        ticks(y0, 0, 1, 4, false);
        std::vector<std::array<double, 2>> r, g, b;
        for (int k = 0; k < n; ++k) {
            Color c = hex_decode(t.colors[k]).color;
            r.push_back({xpos(k), y0 + panel_h * (1 - c[0])});
            g.push_back({xpos(k), y0 + panel_h * (1 - c[1])});
            b.push_back({xpos(k), y0 + panel_h * (1 - c[2])});
        }
        body += svg::polyline(r, "#D62728", 2) + svg::polyline(g, "#2CA02C", 2) +
                svg::polyline(b, "#1F77B4", 2);
        body += svg::text(left, y0 - 6, "RGB", 11);
        body += "</g>\n";
        y0 += panel_h + gap;
    }

    double cmax = 100;
    for (double c : t.chroma)
        cmax = std::max(cmax, c);
    double hmin = 0, hmax = 360;
    for (double h : t.hue)
        if (h < 0)
            hmin = -360;
    body += "<g class=\"hcl\">\n";
    frame(y0);
    ticks(y0, 0, cmax, 4, false);
    ticks(y0, hmin, hmax, 4, true);
    std::vector<std::array<double, 2>> hp, cp, lp;
    for (int k = 0; k < n; ++k) {
        hp.push_back({xpos(k), y0 + panel_h * (1 - (t.hue[k] - hmin) / (hmax - hmin))});
        cp.push_back({xpos(k), y0 + panel_h * (1 - t.chroma[k] / cmax)});
        lp.push_back({xpos(k), y0 + panel_h * (1 - t.luminance[k] / cmax)});
    }
    body += svg::polyline(hp, "#D62728", 2) + svg::polyline(cp, "#2CA02C", 2) +
            svg::polyline(lp, "#1F77B4", 2);
    body += svg::text(left, y0 - 6, "Hue (right axis), Chroma, Luminance", 11);
    body += "</g>\n";
    y0 += panel_h + 10;

    body += "<g class=\"swatch\">\n";
    double w = n > 0 ? pw / n : 0;
    for (int k = 0; k < n; ++k)
        body += "<rect x=\"" + svg::num(left + k * w) + "\" y=\"" + svg::num(y0) + "\" width=\"" +
                svg::num(w) + "\" height=\"" + svg::num(strip_h) + "\" " +
                svg::fill_attr(hex_decode(t.colors[k])) + "/>\n";
    body += "</g>\n";
    double H = y0 + strip_h + 10;
    return svg::header(W, H) + "<rect x=\"0\" y=\"0\" width=\"" + svg::num(W) + "\" height=\"" +
           svg::num(H) + "\" fill=\"#FFFFFF\"/>\n" + body + "</svg>\n";
}

} // namespace hclkit
