#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hclkit/color.hpp"
#include "hclkit/error.hpp"
#include "hclkit/hex.hpp"
#include "hclkit/jsonfwd.hpp"

namespace hclkit {

namespace tuning {
inline constexpr double low_chroma = 8;      // hues below this chroma are smoothed over
inline constexpr double flat_luminance = 10; // L range under this reads as qualitative
inline constexpr double monotone_noise = 1;  // tolerated wrong-way step in L
inline constexpr double fixed_range = 1;     // collapsed coordinate treated as constant
} // namespace tuning

struct SpectrumTrace {
    int n = 0;
    std::vector<std::string> colors;
    std::vector<double> hue, chroma, luminance;
    std::vector<bool> fixup_fired;
    bool degenerate = false; // every color was below the chroma threshold
    bool hue_wrapped = false; // unwrapped hues spanned too far and were folded into [0,360)
};

// `fixup_fired` may be empty when the colors did not come from a generator.
inline SpectrumTrace spectrum(const std::vector<std::string>& colors,
                              const std::vector<bool>& fixup_fired = {})
{
    if (colors.empty())
        throw InvalidInput("spectrum needs at least one color", "colors");
    auto decoded = parse_colors(colors);
    SpectrumTrace t;
    t.n = static_cast<int>(colors.size());
    std::vector<double> raw;
    for (const auto& c : decoded) {
        Color p = convert(c.color, Space::polarLUV);
        t.colors.push_back(to_hex(c));
        t.luminance.push_back(p[0]);
        t.chroma.push_back(p[1]);
        raw.push_back(p[2]);
    }
    t.fixup_fired = fixup_fired;
    t.fixup_fired.resize(colors.size(), false);

    std::vector<int> good;
    for (int k = 0; k < t.n; ++k)
        if (t.chroma[k] >= tuning::low_chroma)
            good.push_back(k);
    t.hue.assign(t.n, 0.0);
    if (good.empty()) {
        t.degenerate = true;
        return t;
    }

    // Unwrap the reliable hues, then fill the gaps by index.
    t.hue[good[0]] = raw[good[0]];
    for (std::size_t g = 1; g < good.size(); ++g) {
        double prev = t.hue[good[g - 1]];
        double d = raw[good[g]] - prev;
        d -= 360 * std::round(d / 360);
        t.hue[good[g]] = prev + d;
    }
    for (int k = 0; k < good.front(); ++k)
        t.hue[k] = t.hue[good.front()];
    for (int k = good.back() + 1; k < t.n; ++k)
        t.hue[k] = t.hue[good.back()];
    for (std::size_t g = 1; g < good.size(); ++g) {
        int a = good[g - 1], b = good[g];
        for (int k = a + 1; k < b; ++k)
            t.hue[k] = t.hue[a] + (t.hue[b] - t.hue[a]) * (k - a) / (b - a);
    }

    // Prefer [0,360]; fall back to [-360,360]. A trace that still does not fit
    // loses its continuity and is reported modulo 360.
    auto [mn, mx] = std::minmax_element(t.hue.begin(), t.hue.end());
    double shift = -360 * std::floor(*mn / 360);
    if (*mx + shift > 360)
        shift -= 360;
    if (*mn + shift < -360 || *mx + shift > 360) {
        t.hue_wrapped = true;
        for (auto& h : t.hue)
            h = detail::wrap_hue(h);
        return t;
    }
    for (auto& h : t.hue)
        h += shift;
    return t;
}

enum class GuessType { qualitative, sequential, diverging };

inline constexpr std::string_view guess_name(GuessType g)
{
    switch (g) {
    case GuessType::qualitative: return "qualitative";
    case GuessType::sequential: return "sequential";
    case GuessType::diverging: return "diverging";
    }
    return "?";
}

inline std::optional<GuessType> parse_guess(std::string_view s)
{
    for (auto g : {GuessType::qualitative, GuessType::sequential, GuessType::diverging})
        if (s == guess_name(g))
            return g;
    if (s.rfind("sequential", 0) == 0)
        return GuessType::sequential;
    if (s == "divergingx")
        return GuessType::diverging;
    return std::nullopt;
}

struct TypeEvidence {
    double l_min = 0, l_max = 0;
    int argmin = 0, argmax = 0;
    bool increasing = false, decreasing = false;
    int extremum = -1; // split index of a diverging palette
};

struct TypeGuess {
    GuessType type = GuessType::sequential;
    bool low_confidence = false;
    TypeEvidence evidence;
};

namespace detail {
inline bool rises(const std::vector<double>& l, int from, int to)
{
    for (int k = from; k < to; ++k)
        if (l[k + 1] - l[k] < -tuning::monotone_noise)
            return false;
    return true;
}

inline bool falls(const std::vector<double>& l, int from, int to)
{
    for (int k = from; k < to; ++k)
        if (l[k + 1] - l[k] > tuning::monotone_noise)
            return false;
    return true;
}
} // namespace detail

inline TypeGuess infer_type(const SpectrumTrace& t)
{
    if (t.n < 3)
        throw InsufficientData("type inference needs at least 3 colors");
    const auto& l = t.luminance;
    TypeGuess g;
    auto& e = g.evidence;
    e.argmin = static_cast<int>(std::min_element(l.begin(), l.end()) - l.begin());
    e.argmax = static_cast<int>(std::max_element(l.begin(), l.end()) - l.begin());
    e.l_min = l[e.argmin];
    e.l_max = l[e.argmax];
    int last = t.n - 1;
    e.increasing = detail::rises(l, 0, last);
    e.decreasing = detail::falls(l, 0, last);

    if (e.l_max - e.l_min < tuning::flat_luminance) {
        g.type = GuessType::qualitative;
    } else if (e.increasing || e.decreasing) {
        g.type = GuessType::sequential;
    } else if (e.argmax > 0 && e.argmax < last && detail::rises(l, 0, e.argmax) &&
               detail::falls(l, e.argmax, last)) {
        g.type = GuessType::diverging;
        e.extremum = e.argmax;
    } else if (e.argmin > 0 && e.argmin < last && detail::falls(l, 0, e.argmin) &&
               detail::rises(l, e.argmin, last)) {
        g.type = GuessType::diverging;
        e.extremum = e.argmin;
    } else {
        g.type = GuessType::sequential;
        g.low_confidence = true;
    }
    return g;
}

// z ~ b0 + b1*x + b2*y by least squares; regressors without spread are dropped.
inline std::array<double, 3> fit_plane(const std::vector<double>& x, const std::vector<double>& y,
                                       const std::vector<double>& z)
{
    std::size_t n = z.size();
    std::array<double, 3> beta{0, 0, 0};
    if (n == 0)
        return beta;
    double zmean = 0;
    for (double v : z)
        zmean += v;
    zmean /= n;
    auto spread = [](const std::vector<double>& v) {
        auto [a, b] = std::minmax_element(v.begin(), v.end());
        return *b - *a;
    };
    if (spread(z) < tuning::fixed_range) {
        beta[0] = zmean;
        return beta;
    }
    std::vector<int> cols{0};
    if (spread(x) > 1e-9)
        cols.push_back(1);
    if (spread(y) > 1e-9)
        cols.push_back(2);
    auto reg = [&](int c, std::size_t i) { return c == 0 ? 1.0 : (c == 1 ? x[i] : y[i]); };

    while (true) {
        std::size_t m = cols.size();
        double a[3][4] = {};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c)
                    a[r][c] += reg(cols[r], i) * reg(cols[c], i);
                a[r][m] += reg(cols[r], i) * z[i];
            }
        bool ok = true;
        for (std::size_t p = 0; p < m && ok; ++p) {
            std::size_t piv = p;
            for (std::size_t r = p + 1; r < m; ++r)
                if (std::abs(a[r][p]) > std::abs(a[piv][p]))
                    piv = r;
            if (std::abs(a[piv][p]) < 1e-9) {
                ok = false;
                break;
            }
            std::swap(a[p], a[piv]);
            for (std::size_t r = 0; r < m; ++r) {
                if (r == p)
                    continue;
                double f = a[r][p] / a[p][p];
                for (std::size_t c = p; c <= m; ++c)
                    a[r][c] -= f * a[p][c];
            }
        }
        if (ok) {
            for (std::size_t r = 0; r < m; ++r)
                beta[cols[r]] = a[r][m] / a[r][r];
            return beta;
        }
        if (m == 1) {
            beta[0] = zmean;
            return beta;
        }
        cols.pop_back();
    }
}

struct PlaneGrid {
    std::string plane; // "hue-chroma" or "chroma-luminance"
    std::vector<double> xs, ys;
    std::vector<std::optional<std::string>> cells; // row-major: ys outer, xs inner
};

namespace detail {
inline std::vector<double> axis(double lo, double hi, int steps)
{
    std::vector<double> v(steps);
    for (int i = 0; i < steps; ++i)
        v[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    return v;
}

inline double chroma_axis_max(const std::vector<double>& chroma)
{
    double mx = 100;
    for (double c : chroma)
        mx = std::max(mx, c);
    return std::ceil(mx / 10) * 10;
}
} // namespace detail

// Grid of displayable colors; `lch(x, y)` yields (L, C, H) for a cell.
template <typename F>
PlaneGrid make_grid(std::string plane, std::vector<double> xs, std::vector<double> ys, F lch)
{
    PlaneGrid g{std::move(plane), std::move(xs), std::move(ys), {}};
    g.cells.reserve(g.xs.size() * g.ys.size());
    for (double y : g.ys)
        for (double x : g.xs) {
            auto [L, C, H] = lch(x, y);
            g.cells.push_back(hex_encode(polar_luv(std::clamp(L, 0.0, 100.0), C, H), false));
        }
    return g;
}

// Hue-chroma plane at fixed luminance: the color picker's first mode.
inline PlaneGrid hue_chroma_slice(double l, int hue_steps = 73, int chroma_steps = 37,
                                  double cmax = 180)
{
    return make_grid("hue-chroma", detail::axis(0, 360, hue_steps), detail::axis(0, cmax, chroma_steps),
                     [l](double h, double c) { return std::array<double, 3>{l, c, h}; });
}

// Chroma-luminance plane at fixed hue: the picker's second mode.
inline PlaneGrid chroma_luminance_slice(double h, int chroma_steps = 37, int lum_steps = 51,
                                        double cmax = 180)
{
    return make_grid("chroma-luminance", detail::axis(0, cmax, chroma_steps),
                     detail::axis(0, 100, lum_steps),
                     [h](double c, double l) { return std::array<double, 3>{l, c, h}; });
}

struct Projection {
    GuessType type = GuessType::sequential;
    std::string collapsed;          // "luminance" (qualitative) or "hue"
    bool fitted = false;            // collapsed coordinate varies along the palette
    std::array<double, 3> model{};  // collapsed = b0 + b1*x + b2*y (right arm for diverging)
    std::array<double, 3> model_left{}; // diverging left arm, plotted at negative chroma
    PlaneGrid grid;
    std::vector<std::array<double, 2>> polyline;
};

inline Projection hcl_projection(const std::vector<std::string>& colors, GuessType type,
                                 int x_steps = 61, int y_steps = 51)
{
    SpectrumTrace t = spectrum(colors);
    Projection p;
    p.type = type;
    const auto& H = t.hue;
    const auto& C = t.chroma;
    const auto& L = t.luminance;
    auto eval = [](const std::array<double, 3>& b, double x, double y) { return b[0] + b[1] * x + b[2] * y; };

    if (type == GuessType::qualitative) {
        p.collapsed = "luminance";
        std::vector<double> hw;
        for (double h : H)
            hw.push_back(detail::wrap_hue(h));
        p.model = fit_plane(hw, C, L);
        p.fitted = p.model[1] != 0 || p.model[2] != 0;
        for (int k = 0; k < t.n; ++k)
            p.polyline.push_back({hw[k], C[k]});
        auto m = p.model;
        p.grid = make_grid("hue-chroma", detail::axis(0, 360, x_steps),
                           detail::axis(0, detail::chroma_axis_max(C), y_steps),
                           [&](double h, double c) {
                               return std::array<double, 3>{eval(m, h, c), c, h};
                           });
        return p;
    }

    p.collapsed = "hue";
    double cm = detail::chroma_axis_max(C);
    auto arm_model = [&](int from, int to) {
        std::vector<double> cx, ly, hz;
        for (int k = from; k <= to; ++k)
            if (C[k] >= tuning::low_chroma) {
                cx.push_back(C[k]);
                ly.push_back(L[k]);
                hz.push_back(H[k]);
            }
        if (hz.empty())
            return std::array<double, 3>{t.n ? H[from] : 0.0, 0, 0};
        return fit_plane(cx, ly, hz);
    };

    if (type == GuessType::sequential || t.n < 3) {
        p.model = arm_model(0, t.n - 1);
        p.fitted = p.model[1] != 0 || p.model[2] != 0;
        for (int k = 0; k < t.n; ++k)
            p.polyline.push_back({C[k], L[k]});
        auto m = p.model;
        p.grid = make_grid("chroma-luminance", detail::axis(0, cm, x_steps), detail::axis(0, 100, y_steps),
                           [&](double c, double l) {
                               return std::array<double, 3>{l, c, eval(m, c, l)};
                           });
        return p;
    }

    // Diverging: split at the luminance extremum, or at the least chromatic color.
    int split = infer_type(t).evidence.extremum;
    if (split < 0)
        split = static_cast<int>(std::min_element(C.begin(), C.end()) - C.begin());
    p.model_left = arm_model(0, split);
    p.model = arm_model(split, t.n - 1);
    p.fitted = p.model[1] != 0 || p.model[2] != 0 || p.model_left[1] != 0 || p.model_left[2] != 0;
    for (int k = 0; k < t.n; ++k)
        p.polyline.push_back({k < split ? -C[k] : C[k], L[k]});
    auto ml = p.model_left, mr = p.model;
    p.grid = make_grid("chroma-luminance", detail::axis(-cm, cm, x_steps), detail::axis(0, 100, y_steps),
                       [&](double x, double l) {
                           double c = std::abs(x);
                           double h = x < 0 ? eval(ml, c, l) : eval(mr, c, l);
                           return std::array<double, 3>{l, c, h};
                       });
    return p;
}

inline json trace_to_json(const SpectrumTrace& t)
{
    json j;
    j["n"] = t.n;
    j["colors"] = t.colors;
    j["hue"] = t.hue;
    j["chroma"] = t.chroma;
    j["luminance"] = t.luminance;
    j["fixup_fired"] = t.fixup_fired;
    j["degenerate"] = t.degenerate;
    j["hue_wrapped"] = t.hue_wrapped;
    return j;
}

inline json grid_to_json(const PlaneGrid& g)
{
    json j;
    j["plane"] = g.plane;
    j["xs"] = g.xs;
    j["ys"] = g.ys;
    json cells = json::array();
    for (const auto& c : g.cells)
        cells.push_back(c ? json(*c) : json(nullptr));
    j["cells"] = std::move(cells);
    return j;
}

inline json projection_to_json(const Projection& p)
{
    json j;
    j["type"] = std::string(guess_name(p.type));
    j["collapsed"] = p.collapsed;
    j["fitted"] = p.fitted;
    j["model"] = p.model;
    if (p.type == GuessType::diverging)
        j["model_left"] = p.model_left;
    j["grid"] = grid_to_json(p.grid);
    j["polyline"] = p.polyline;
    return j;
}

inline json guess_to_json(const TypeGuess& g)
{
    json j;
    j["type"] = std::string(guess_name(g.type));
    j["low_confidence"] = g.low_confidence;
    const auto& e = g.evidence;
    j["evidence"] = {{"l_min", e.l_min},          {"l_max", e.l_max},
                     {"l_range", e.l_max - e.l_min}, {"argmin", e.argmin},
                     {"argmax", e.argmax},        {"increasing", e.increasing},
                     {"decreasing", e.decreasing}, {"extremum", e.extremum}};
    return j;
}

} // namespace hclkit
