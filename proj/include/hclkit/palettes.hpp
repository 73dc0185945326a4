#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hclkit/color.hpp"
#include "hclkit/error.hpp"
#include "hclkit/hex.hpp"

namespace hclkit {

enum class TrajectoryKind { constant, linear, triangular };

struct Trajectory {
    TrajectoryKind kind = TrajectoryKind::constant;
    double v1 = 0;
    double v2 = 0;
    double vmax = 0;
    double power = 1;
};

// Intensity i runs from 1 (v1 end) to 0 (v2 end); i is raised to `power` first.
inline double trajectory_value(const Trajectory& t, double i)
{
    if (!(i >= 0 && i <= 1))
        throw InvalidInput("intensity must be in [0,1]", "i");
    if (!(t.power > 0) || !std::isfinite(t.power))
        throw InvalidInput("power must be positive", "power");
    if (t.kind == TrajectoryKind::constant)
        return t.v1;
    double x = t.power == 1 ? i : std::pow(i, t.power);
    if (t.kind == TrajectoryKind::linear)
        return t.v2 - (t.v2 - t.v1) * x;
    double j = 1;
    if (t.vmax != t.v2)
        j = 1 / (1 + std::abs(t.vmax - t.v1) / std::abs(t.vmax - t.v2));
    if (x <= j)
        return t.v2 - (t.v2 - t.vmax) * x / j;
    return t.vmax - (t.vmax - t.v1) * (x - j) / (1 - j);
}

enum class PaletteType { qualitative, sequential_single, sequential_multi, diverging, divergingx };

inline constexpr std::string_view type_name(PaletteType t)
{
    switch (t) {
    case PaletteType::qualitative: return "qualitative";
    case PaletteType::sequential_single: return "sequential-single";
    case PaletteType::sequential_multi: return "sequential-multi";
    case PaletteType::diverging: return "diverging";
    case PaletteType::divergingx: return "divergingx";
    }
    return "?";
}

inline std::optional<PaletteType> parse_type(std::string_view s)
{
    for (auto t : {PaletteType::qualitative, PaletteType::sequential_single,
                   PaletteType::sequential_multi, PaletteType::diverging, PaletteType::divergingx})
        if (s == type_name(t))
            return t;
    if (s == "sequential")
        return PaletteType::sequential_multi;
    return std::nullopt;
}

// "sequential" matches both sequential kinds.
inline bool type_matches(PaletteType t, std::string_view filter)
{
    if (filter.empty())
        return true;
    if (filter == "sequential")
        return t == PaletteType::sequential_single || t == PaletteType::sequential_multi;
    return filter == type_name(t);
}

inline bool is_sequential(PaletteType t)
{
    return t == PaletteType::sequential_single || t == PaletteType::sequential_multi;
}

// One record covers every palette family; the divergingx-only fields
// (h3, c3, l3, cmax1, cmax2, p3, p4) are ignored elsewhere.
struct PaletteParams {
    PaletteType type = PaletteType::qualitative;
    std::optional<double> h1, h2, h3;
    std::optional<double> c1, c2, c3;
    std::optional<double> cmax, cmax1, cmax2;
    std::optional<double> l1, l2, l3;
    std::optional<double> p1, p2, p3, p4;
    bool fixup = true;

    bool operator==(const PaletteParams&) const = default;
};

// Fields in registry-file order; shared by the JSON codec and the CLI.
struct ParamField {
    std::string_view name;
    std::optional<double> PaletteParams::*member;
};

inline constexpr ParamField param_fields[] = {
    {"h1", &PaletteParams::h1},       {"h2", &PaletteParams::h2},
    {"h3", &PaletteParams::h3},       {"c1", &PaletteParams::c1},
    {"c2", &PaletteParams::c2},       {"c3", &PaletteParams::c3},
    {"cmax", &PaletteParams::cmax},   {"cmax1", &PaletteParams::cmax1},
    {"cmax2", &PaletteParams::cmax2}, {"l1", &PaletteParams::l1},
    {"l2", &PaletteParams::l2},       {"l3", &PaletteParams::l3},
    {"p1", &PaletteParams::p1},       {"p2", &PaletteParams::p2},
    {"p3", &PaletteParams::p3},       {"p4", &PaletteParams::p4},
};

// Fields set in `over` replace those in `base`.
inline PaletteParams merge(PaletteParams base, const PaletteParams& over)
{
    for (const auto& f : param_fields)
        if (over.*f.member)
            base.*f.member = over.*f.member;
    return base;
}

struct Swatch {
    std::string hex;
    bool fixup_fired = false;
    Color hcl; // requested polarLUV coordinates before fixup
};

struct PaletteResult {
    std::vector<Swatch> colors;
    std::vector<std::string> warnings;

    std::vector<std::string> hex() const
    {
        std::vector<std::string> out;
        out.reserve(colors.size());
        for (const auto& c : colors)
            out.push_back(c.hex);
        return out;
    }
};

struct Options {
    bool rev = false;
    std::optional<double> alpha;
};

namespace detail {

inline double need(const std::optional<double>& v, const char* field)
{
    if (!v)
        throw InvalidInput(std::string("missing parameter ") + field, field);
    return *v;
}

inline void validate_params(const PaletteParams& p)
{
    for (const auto& f : param_fields) {
        const auto& v = p.*f.member;
        if (!v)
            continue;
        std::string name(f.name);
        if (!std::isfinite(*v))
            throw InvalidInput(name + " must be finite", name);
        if (name[0] == 'p' && *v <= 0)
            throw InvalidInput(name + " must be positive", name);
        if (name[0] == 'c' && *v < 0)
            throw InvalidInput(name + " must be non-negative", name);
        if (name[0] == 'l' && (*v < 0 || *v > 100))
            throw InvalidInput(name + " must be in [0,100]", name);
    }
}

inline void check_n(int n)
{
    if (n < 0)
        throw InvalidInput("n must be non-negative", "n");
}

inline Trajectory chroma_path(double c1, double c2, const std::optional<double>& cmax, double p)
{
    if (cmax)
        return {TrajectoryKind::triangular, c1, c2, *cmax, p};
    return {TrajectoryKind::linear, c1, c2, 0, p};
}

inline Swatch make_swatch(double l, double c, double h, bool fixup)
{
    Color hcl = polar_luv(l, c, h);
    auto e = encode(hcl, fixup);
    // Without fixup an undisplayable color is reported as an empty hex.
    return {e.hex.value_or(std::string{}), e.fixup_fired, hcl};
}

} // namespace detail

inline PaletteResult qualitative_colors(int n, const PaletteParams& p)
{
    detail::check_n(n);
    detail::validate_params(p);
    double h1 = detail::need(p.h1, "h1");
    double c = detail::need(p.c1, "c1");
    double l = detail::need(p.l1, "l1");
    double h2 = p.h2 ? *p.h2 : h1 + 360.0 * (n - 1) / std::max(n, 1);
    PaletteResult out;
    for (int k = 0; k < n; ++k) {
        double h = n == 1 ? h1 : h1 + (h2 - h1) * k / (n - 1);
        out.colors.push_back(detail::make_swatch(l, c, h, p.fixup));
    }
    return out;
}

inline PaletteResult sequential_colors(int n, const PaletteParams& p)
{
    detail::check_n(n);
    detail::validate_params(p);
    PaletteResult out;
    double h1 = detail::need(p.h1, "h1");
    double c1 = detail::need(p.c1, "c1");
    double l1 = detail::need(p.l1, "l1");
    double h2 = p.h2.value_or(h1);
    double c2 = p.c2.value_or(0.0);
    double l2 = p.l2.value_or(l1);
    double p1 = p.p1.value_or(1.0);
    double p2 = p.p2.value_or(p1);
    if (l1 == l2)
        out.warnings.push_back("l1 equals l2: luminance is constant, not a proper sequential palette");
    Trajectory ct = detail::chroma_path(c1, c2, p.cmax, p1);
    Trajectory lt{TrajectoryKind::linear, l1, l2, 0, p2};
    for (int k = 0; k < n; ++k) {
        double i = n == 1 ? 1.0 : static_cast<double>(n - 1 - k) / (n - 1);
        double h = h2 - (h2 - h1) * i;
        out.colors.push_back(
            detail::make_swatch(trajectory_value(lt, i), trajectory_value(ct, i), h, p.fixup));
    }
    return out;
}

inline PaletteResult diverging_colors(int n, const PaletteParams& p)
{
    detail::check_n(n);
    detail::validate_params(p);
    PaletteResult out;
    double h1 = detail::need(p.h1, "h1");
    double c1 = detail::need(p.c1, "c1");
    double l1 = detail::need(p.l1, "l1");
    double h2 = p.h2.value_or(h1);
    double l2 = p.l2.value_or(l1);
    double p1 = p.p1.value_or(1.0);
    double p2 = p.p2.value_or(p1);
    Trajectory ct = detail::chroma_path(c1, 0.0, p.cmax, p1);
    Trajectory lt{TrajectoryKind::linear, l1, l2, 0, p2};
    for (int k = 0; k < n; ++k) {
        // Integer numerator keeps the two arms bit-for-bit mirrored.
        int num = n - 1 - 2 * k;
        double i = n == 1 ? 0.0 : static_cast<double>(std::abs(num)) / (n - 1);
        double h = num > 0 ? h1 : h2;
        out.colors.push_back(
            detail::make_swatch(trajectory_value(lt, i), trajectory_value(ct, i), h, p.fixup));
    }
    return out;
}

inline PaletteResult divergingx_colors(int n, const PaletteParams& p)
{
    detail::check_n(n);
    detail::validate_params(p);
    PaletteResult out;
    double h1 = detail::need(p.h1, "h1");
    double c1 = detail::need(p.c1, "c1");
    double l1 = detail::need(p.l1, "l1");
    double l2 = detail::need(p.l2, "l2");
    double h3 = p.h3.value_or(h1);
    double c2 = p.c2.value_or(0.0);
    double c3 = p.c3.value_or(c1);
    double l3 = p.l3.value_or(l1);
    double p1 = p.p1.value_or(1.0);
    double p2 = p.p2.value_or(p1);
    double p3 = p.p3.value_or(p1);
    double p4 = p.p4.value_or(p2);
    double hl = p.h2.value_or(h1);
    double hr = p.h2.value_or(h3);
    Trajectory cl = detail::chroma_path(c1, c2, p.cmax1, p1);
    Trajectory ll{TrajectoryKind::linear, l1, l2, 0, p2};
    Trajectory cr = detail::chroma_path(c3, c2, p.cmax2, p3);
    Trajectory lr{TrajectoryKind::linear, l3, l2, 0, p4};
    for (int k = 0; k < n; ++k) {
        int num = n - 1 - 2 * k;
        double i = n == 1 ? 0.0 : static_cast<double>(std::abs(num)) / (n - 1);
        if (num > 0)
            out.colors.push_back(detail::make_swatch(trajectory_value(ll, i), trajectory_value(cl, i),
                                                     hl - (hl - h1) * i, p.fixup));
        else
            out.colors.push_back(detail::make_swatch(trajectory_value(lr, i), trajectory_value(cr, i),
                                                     hr - (hr - h3) * i, p.fixup));
    }
    return out;
}

inline PaletteResult generate_colors(int n, const PaletteParams& p)
{
    switch (p.type) {
    case PaletteType::qualitative: return qualitative_colors(n, p);
    case PaletteType::sequential_single:
    case PaletteType::sequential_multi: return sequential_colors(n, p);
    case PaletteType::diverging: return diverging_colors(n, p);
    case PaletteType::divergingx: return divergingx_colors(n, p);
    }
    return {};
}

// Order reversal and alpha are applied after generation.
inline PaletteResult finish(PaletteResult r, const Options& opt)
{
    if (opt.rev)
        std::reverse(r.colors.begin(), r.colors.end());
    if (opt.alpha) {
        std::uint8_t a = alpha_byte(*opt.alpha);
        for (auto& s : r.colors)
            if (!s.hex.empty())
                detail::append_byte(s.hex, a);
    }
    return r;
}

inline std::vector<std::string> qualitative_palette(int n, const PaletteParams& p, const Options& o = {})
{
    return finish(qualitative_colors(n, p), o).hex();
}

inline std::vector<std::string> sequential_palette(int n, const PaletteParams& p, const Options& o = {})
{
    return finish(sequential_colors(n, p), o).hex();
}

inline std::vector<std::string> diverging_palette(int n, const PaletteParams& p, const Options& o = {})
{
    return finish(diverging_colors(n, p), o).hex();
}

inline std::vector<std::string> divergingx_palette(int n, const PaletteParams& p, const Options& o = {})
{
    return finish(divergingx_colors(n, p), o).hex();
}

// Hand-tuned reconstruction of cividis on a three-point chroma path.
inline PaletteResult cividis_manual_colors(int n)
{
    if (n < 2)
        throw InvalidInput("cividis_manual needs n >= 2", "n");
    PaletteResult out;
    for (int k = 0; k < n; ++k) {
        double i = static_cast<double>(n - 1 - k) / (n - 1);
        double c;
        if (i >= 0.9)
            c = 30 + (50 - 30) * (1 - i) / 0.1;
        else if (i >= 0.5)
            c = 50 * (i - 0.5) / 0.4;
        else
            c = 95 * (0.5 - i) / 0.5;
        out.colors.push_back(detail::make_swatch(92 - 79 * i, c, i >= 0.5 ? 255 : 75, true));
    }
    return out;
}

inline std::vector<std::string> cividis_manual(int n) { return cividis_manual_colors(n).hex(); }

// Thin presets over the generators.
inline std::vector<std::string> rainbow_hcl(int n, double c = 50, double l = 70, double start = 0,
                                            std::optional<double> end = std::nullopt)
{
    PaletteParams p;
    p.type = PaletteType::qualitative;
    p.h1 = start;
    p.h2 = end ? *end : start + 360.0 * (n - 1) / std::max(n, 1);
    p.c1 = c;
    p.l1 = l;
    return qualitative_palette(n, p);
}

inline std::vector<std::string> heat_hcl(int n)
{
    PaletteParams p;
    p.type = PaletteType::sequential_multi;
    p.h1 = 0, p.h2 = 90, p.c1 = 100, p.c2 = 30, p.l1 = 50, p.l2 = 90, p.p1 = 0.2, p.p2 = 1.0;
    return sequential_palette(n, p);
}

inline std::vector<std::string> terrain_hcl(int n)
{
    PaletteParams p;
    p.type = PaletteType::sequential_multi;
    p.h1 = 130, p.h2 = 0, p.c1 = 80, p.c2 = 0, p.l1 = 60, p.l2 = 95, p.p1 = 0.1, p.p2 = 1.0;
    return sequential_palette(n, p);
}

// Interpolates saturation in HSV through white: h1 on the left arm, h2 on the right.
inline std::vector<std::string> diverging_hsv(int n, double h1 = 240, double h2 = 0, double power = 1)
{
    detail::check_n(n);
    if (!(power > 0))
        throw InvalidInput("power must be positive", "power");
    std::vector<std::string> out;
    for (int k = 0; k < n; ++k) {
        int num = 2 * k - (n - 1);
        double t = n == 1 ? 0.0 : static_cast<double>(num) / (n - 1);
        double s = std::pow(std::abs(t), power);
        out.push_back(*hex_encode(hsv(t > 0 ? h2 : h1, s, 1.0), true));
    }
    return out;
}

} // namespace hclkit
