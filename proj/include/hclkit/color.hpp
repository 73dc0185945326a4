#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "hclkit/error.hpp"

namespace hclkit {

enum class Space { RGB, sRGB, HSV, HLS, XYZ, LUV, LAB, polarLUV, polarLAB };

inline constexpr std::array<Space, 9> all_spaces{
    Space::RGB, Space::sRGB,     Space::HSV,     Space::HLS,     Space::XYZ,
    Space::LUV, Space::LAB,      Space::polarLUV, Space::polarLAB};

constexpr std::string_view space_name(Space s)
{
    switch (s) {
    case Space::RGB: return "RGB";
    case Space::sRGB: return "sRGB";
    case Space::HSV: return "HSV";
    case Space::HLS: return "HLS";
    case Space::XYZ: return "XYZ";
    case Space::LUV: return "LUV";
    case Space::LAB: return "LAB";
    case Space::polarLUV: return "polarLUV";
    case Space::polarLAB: return "polarLAB";
    }
    return "?";
}

// Case-insensitive; "HCL" is accepted as an alias of polarLUV.
inline std::optional<Space> parse_space(std::string_view name)
{
    auto eq = [](std::string_view a, std::string_view b) {
        return a.size() == b.size() &&
               std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
                   return std::tolower(static_cast<unsigned char>(x)) ==
                          std::tolower(static_cast<unsigned char>(y));
               });
    };
    if (eq(name, "HCL"))
        return Space::polarLUV;
    for (Space s : all_spaces)
        if (eq(name, space_name(s)))
            return s;
    return std::nullopt;
}

// Coordinates in the natural order of each space:
// RGB/sRGB (R,G,B), HSV (H,S,V), HLS (H,L,S), XYZ, LUV (L,U,V), LAB (L,A,B),
// polarLUV/polarLAB (L,C,H).
struct Color {
    Space space = Space::sRGB;
    std::array<double, 3> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    bool operator==(const Color&) const = default;
};

inline Color rgb(double r, double g, double b) { return {Space::RGB, {r, g, b}}; }
inline Color srgb(double r, double g, double b) { return {Space::sRGB, {r, g, b}}; }
inline Color hsv(double h, double s, double v) { return {Space::HSV, {h, s, v}}; }
inline Color hls(double h, double l, double s) { return {Space::HLS, {h, l, s}}; }
inline Color xyz(double x, double y, double z) { return {Space::XYZ, {x, y, z}}; }
inline Color luv(double l, double u, double v) { return {Space::LUV, {l, u, v}}; }
inline Color lab(double l, double a, double b) { return {Space::LAB, {l, a, b}}; }
inline Color polar_luv(double l, double c, double h) { return {Space::polarLUV, {l, c, h}}; }
inline Color polar_lab(double l, double c, double h) { return {Space::polarLAB, {l, c, h}}; }

struct WhitePoint {
    double X, Y, Z;
    bool operator==(const WhitePoint&) const = default;
};

inline constexpr WhitePoint D65{95.047, 100.000, 108.883};

namespace detail {
inline WhitePoint& whitepoint_storage()
{
    static WhitePoint wp = D65;
    return wp;
}
} // namespace detail

// Process-wide default. Writers must be serialized by the caller.
inline WhitePoint whitepoint() { return detail::whitepoint_storage(); }

inline void set_whitepoint(const WhitePoint& wp)
{
    for (double c : {wp.X, wp.Y, wp.Z})
        if (!std::isfinite(c) || c <= 0)
            throw InvalidInput("white point components must be finite and positive", "whitepoint");
    detail::whitepoint_storage() = wp;
}

namespace detail {

inline constexpr double kappa = 24389.0 / 27.0;
inline constexpr double epsilon = 216.0 / 24389.0;
inline constexpr double white_y = 100.0;
inline constexpr double pi = 3.14159265358979323846;

inline constexpr double rgb_to_xyz[3][3] = {
    {0.412453, 0.357580, 0.180423},
    {0.212671, 0.715160, 0.072169},
    {0.019334, 0.119193, 0.950227}};

inline constexpr double xyz_to_rgb[3][3] = {
    {3.240479, -1.537150, -0.498535},
    {-0.969256, 1.875992, 0.041556},
    {0.055648, -0.204043, 1.057311}};

inline std::array<double, 3> mul(const double (&m)[3][3], const std::array<double, 3>& x)
{
    return {m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
            m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
            m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2]};
}

inline double gamma_encode(double u)
{
    if (u > 0.0031308) {
        double p = std::pow(u, 1.0 / 2.4);
        return p + 0.055 * (p - 1.0);
    }
    return 12.92 * u;
}

inline double gamma_decode(double c)
{
    if (c > 0.04045)
        return std::pow((c + 0.055) / 1.055, 2.4);
    return c / 12.92;
}

inline void uv(double x, double y, double z, double& u, double& v)
{
    double t = x + y + z;
    if (t == 0) {
        u = v = 0;
        return;
    }
    double xx = x / t, yy = y / t;
    double d = 6 * yy - xx + 1.5;
    u = 2 * xx / d;
    v = 4.5 * yy / d;
}

inline double wrap_hue(double h)
{
    h = std::fmod(h, 360.0);
    if (h < 0)
        h += 360.0;
    if (h >= 360.0)
        h = 0.0;
    return h;
}

inline double hue_from(double x, double y)
{
    return wrap_hue(std::atan2(y, x) * 180.0 / pi);
}

inline double lab_f(double t)
{
    return t > epsilon ? std::cbrt(t) : (kappa * t + 16.0) / 116.0;
}

inline double lab_finv(double f)
{
    double f3 = f * f * f;
    return f3 > epsilon ? f3 : (116.0 * f - 16.0) / kappa;
}

// sRGB -> HSV / HLS share the hue sector computation.
inline double rgb_hue(double r, double g, double b, double mx, double delta)
{
    double h;
    if (r == mx)
        h = (g - b) / delta;
    else if (g == mx)
        h = 2 + (b - r) / delta;
    else
        h = 4 + (r - g) / delta;
    return wrap_hue(h * 60.0);
}

inline double hls_channel(double m1, double m2, double h)
{
    h = wrap_hue(h);
    if (h < 60)
        return m1 + (m2 - m1) * h / 60.0;
    if (h < 180)
        return m2;
    if (h < 240)
        return m1 + (m2 - m1) * (240.0 - h) / 60.0;
    return m1;
}

// Conversions are arranged as a tree rooted at XYZ.
constexpr Space parent(Space s)
{
    switch (s) {
    case Space::RGB: return Space::XYZ;
    case Space::sRGB: return Space::RGB;
    case Space::HSV: return Space::sRGB;
    case Space::HLS: return Space::sRGB;
    case Space::XYZ: return Space::XYZ;
    case Space::LUV: return Space::XYZ;
    case Space::polarLUV: return Space::LUV;
    case Space::LAB: return Space::XYZ;
    case Space::polarLAB: return Space::LAB;
    }
    return Space::XYZ;
}

struct Walk {
    std::array<double, 3> v;
    // Set when the color came from LUV/LAB with exactly zero chromatic
    // components, so XYZ -> RGB can land exactly on the neutral axis.
    bool neutral = false;
};

inline void step_up(Space s, Walk& w, const WhitePoint& wp)
{
    auto& x = w.v;
    switch (s) {
    case Space::RGB: {
        auto t = mul(rgb_to_xyz, x);
        x = {white_y * t[0], white_y * t[1], white_y * t[2]};
        break;
    }
    case Space::sRGB:
        x = {gamma_decode(x[0]), gamma_decode(x[1]), gamma_decode(x[2])};
        break;
    case Space::HSV: {
        double h = wrap_hue(x[0]) / 60.0, s_ = x[1], v = x[2];
        int i = static_cast<int>(std::floor(h));
        double f = h - i;
        double p = v * (1 - s_), q = v * (1 - s_ * f), t = v * (1 - s_ * (1 - f));
        switch (i) {
        case 0: x = {v, t, p}; break;
        case 1: x = {q, v, p}; break;
        case 2: x = {p, v, t}; break;
        case 3: x = {p, q, v}; break;
        case 4: x = {t, p, v}; break;
        default: x = {v, p, q}; break;
        }
        break;
    }
    case Space::HLS: {
        double h = x[0], l = x[1], s_ = x[2];
        if (s_ == 0) {
            x = {l, l, l};
            break;
        }
        double m2 = l <= 0.5 ? l * (1 + s_) : l + s_ - l * s_;
        double m1 = 2 * l - m2;
        x = {hls_channel(m1, m2, h + 120), hls_channel(m1, m2, h), hls_channel(m1, m2, h - 120)};
        break;
    }
    case Space::LUV: {
        double L = x[0], U = x[1], V = x[2];
        w.neutral = U == 0 && V == 0;
        if (L <= 0) {
            x = {0, 0, 0};
            break;
        }
        double Y = wp.Y * (L > kappa * epsilon ? std::pow((L + 16) / 116, 3) : L / kappa);
        double un, vn;
        uv(wp.X, wp.Y, wp.Z, un, vn);
        double u = U / (13 * L) + un;
        double v = V / (13 * L) + vn;
        double X = 9.0 * Y * u / (4 * v);
        double Z = -X / 3 - 5 * Y + 3 * Y / v;
        x = {X, Y, Z};
        break;
    }
    case Space::LAB: {
        double L = x[0], A = x[1], B = x[2];
        w.neutral = A == 0 && B == 0;
        double fy = (L + 16) / 116;
        double fx = fy + A / 500;
        double fz = fy - B / 200;
        double yr = L > kappa * epsilon ? fy * fy * fy : L / kappa;
        x = {wp.X * lab_finv(fx), wp.Y * yr, wp.Z * lab_finv(fz)};
        break;
    }
    case Space::polarLUV:
    case Space::polarLAB: {
        double h = x[2] * pi / 180.0;
        x = {x[0], x[1] * std::cos(h), x[1] * std::sin(h)};
        break;
    }
    case Space::XYZ: break;
    }
}

inline void step_down(Space s, Walk& w, const WhitePoint& wp)
{
    auto& x = w.v;
    switch (s) {
    case Space::RGB: {
        if (w.neutral) {
            // Divide out the matrix's own white imbalance; exact gray under D65.
            std::array<double, 3> wv{wp.X, wp.Y, wp.Z};
            std::array<double, 3> dv{D65.X, D65.Y, D65.Z};
            auto a = mul(xyz_to_rgb, wv);
            auto b = mul(xyz_to_rgb, dv);
            double y = x[1] / wp.Y;
            x = {y * ((a[0] / wp.Y) / (b[0] / D65.Y)),
                 y * ((a[1] / wp.Y) / (b[1] / D65.Y)),
                 y * ((a[2] / wp.Y) / (b[2] / D65.Y))};
            break;
        }
        auto t = mul(xyz_to_rgb, x);
        x = {t[0] / white_y, t[1] / white_y, t[2] / white_y};
        break;
    }
    case Space::sRGB:
        x = {gamma_encode(x[0]), gamma_encode(x[1]), gamma_encode(x[2])};
        break;
    case Space::HSV: {
        double r = x[0], g = x[1], b = x[2];
        double mx = std::max({r, g, b}), mn = std::min({r, g, b});
        double delta = mx - mn;
        if (delta == 0) {
            x = {0, 0, mx};
            break;
        }
        x = {rgb_hue(r, g, b, mx, delta), mx != 0 ? delta / mx : 0, mx};
        break;
    }
    case Space::HLS: {
        double r = x[0], g = x[1], b = x[2];
        double mx = std::max({r, g, b}), mn = std::min({r, g, b});
        double l = (mx + mn) / 2, delta = mx - mn;
        if (delta == 0) {
            x = {0, l, 0};
            break;
        }
        double s_ = l <= 0.5 ? delta / (mx + mn) : delta / (2 - mx - mn);
        x = {rgb_hue(r, g, b, mx, delta), l, s_};
        break;
    }
    case Space::LUV: {
        double X = x[0], Y = x[1], Z = x[2];
        double y = Y / wp.Y;
        double L = y > epsilon ? 116 * std::cbrt(y) - 16 : kappa * y;
        double u, v, un, vn;
        uv(X, Y, Z, u, v);
        uv(wp.X, wp.Y, wp.Z, un, vn);
        x = {L, 13 * L * (u - un), 13 * L * (v - vn)};
        break;
    }
    case Space::LAB: {
        double fx = lab_f(x[0] / wp.X), fy = lab_f(x[1] / wp.Y), fz = lab_f(x[2] / wp.Z);
        x = {116 * fy - 16, 500 * (fx - fy), 200 * (fy - fz)};
        break;
    }
    case Space::polarLUV:
    case Space::polarLAB:
        x = {x[0], std::hypot(x[1], x[2]), hue_from(x[1], x[2])};
        break;
    case Space::XYZ: break;
    }
}

} // namespace detail

inline bool is_finite(const Color& c)
{
    return std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]);
}

// Out-of-gamut results are returned unclamped.
inline Color convert(const Color& c, Space target, const WhitePoint& wp = whitepoint())
{
    if (!is_finite(c))
        throw InvalidInput("color coordinates must be finite", "color");
    if (c.space == target)
        return c;

    std::array<Space, 4> up{}, down{};
    int nu = 0, nd = 0;
    for (Space s = c.space;; s = detail::parent(s)) {
        up[nu++] = s;
        if (s == Space::XYZ)
            break;
    }
    for (Space s = target;; s = detail::parent(s)) {
        down[nd++] = s;
        if (s == Space::XYZ)
            break;
    }
    // Trim the shared tail so both chains end at the lowest common ancestor.
    while (nu > 1 && nd > 1 && up[nu - 2] == down[nd - 2]) {
        --nu;
        --nd;
    }

    detail::Walk w{c.v};
    for (int i = 0; i < nu - 1; ++i)
        detail::step_up(up[i], w, wp);
    for (int i = nd - 2; i >= 0; --i)
        detail::step_down(down[i], w, wp);
    return {target, w.v};
}

} // namespace hclkit
