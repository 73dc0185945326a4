#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hclkit/color.hpp"
#include "hclkit/error.hpp"
#include "hclkit/hex.hpp"

namespace hclkit {

enum class LightenSpace { HCL, HLS, combined };
enum class Adjustment { relative, absolute };

struct LightenMethod {
    LightenSpace space = LightenSpace::HCL;
    Adjustment adjustment = Adjustment::relative;
};

namespace detail {

inline void check_amount(double amount)
{
    if (!(amount >= 0 && amount <= 1))
        throw InvalidInput("amount must be in [0,1]", "amount");
}

// `scale` is 100 for HCL luminance and 1 for HLS lightness.
inline double shift_lightness(double l, double amount, bool lighten, Adjustment adj, double scale)
{
    double out;
    if (lighten)
        out = adj == Adjustment::relative ? scale - (scale - l) * (1 - amount) : l + scale * amount;
    else
        out = adj == Adjustment::relative ? l * (1 - amount) : l - scale * amount;
    return std::clamp(out, 0.0, scale);
}

inline std::vector<std::string> adjust(const std::vector<std::string>& colors, double amount,
                                       bool lighten, LightenMethod method)
{
    check_amount(amount);
    std::vector<std::string> out;
    for (const auto& c : parse_colors(colors)) {
        Color hcl = convert(c.color, Space::polarLUV);
        Color hlsv = convert(c.color, Space::HLS);
        Color result;
        switch (method.space) {
        case LightenSpace::HCL:
            result = hcl;
            result[0] = shift_lightness(hcl[0], amount, lighten, method.adjustment, 100);
            break;
        case LightenSpace::HLS:
            result = hlsv;
            result[1] = shift_lightness(hlsv[1], amount, lighten, method.adjustment, 1);
            break;
        case LightenSpace::combined: {
            Color h = hlsv;
            h[1] = shift_lightness(hlsv[1], amount, lighten, method.adjustment, 1);
            result = hcl;
            result[0] = shift_lightness(hcl[0], amount, lighten, method.adjustment, 100);
            result[1] = convert(h, Space::polarLUV)[1];
            break;
        }
        }
        out.push_back(*hex_encode(result, true, c.alpha));
    }
    return out;
}

} // namespace detail

// Scales polarLUV chroma by (1 - amount); alpha is kept.
inline std::vector<std::string> desaturate(const std::vector<std::string>& colors, double amount = 1)
{
    detail::check_amount(amount);
    std::vector<std::string> out;
    for (const auto& c : parse_colors(colors)) {
        Color hcl = convert(c.color, Space::polarLUV);
        hcl[1] *= 1 - amount;
        out.push_back(*hex_encode(hcl, true, c.alpha));
    }
    return out;
}

inline std::vector<std::string> lighten(const std::vector<std::string>& colors, double amount,
                                        LightenMethod method = {LightenSpace::HCL, Adjustment::relative})
{
    return detail::adjust(colors, amount, true, method);
}

inline std::vector<std::string> darken(const std::vector<std::string>& colors, double amount,
                                       LightenMethod method = {LightenSpace::combined, Adjustment::relative})
{
    return detail::adjust(colors, amount, false, method);
}

// Largest displayable chroma at (h, l), floored to two decimals.
inline double max_chroma(double h, double l)
{
    if (!std::isfinite(h))
        throw InvalidInput("hue must be finite", "h");
    if (!(l >= 0 && l <= 100))
        throw InvalidInput("luminance must be in [0,100]", "l");
    if (l <= 0 || l >= 100)
        return 0;
    h = detail::wrap_hue(h);
    double lo = 0, hi = 200;
    if (in_gamut(polar_luv(l, hi, h)))
        return hi;
    for (int it = 0; it < 40; ++it) {
        double mid = (lo + hi) / 2;
        if (in_gamut(polar_luv(l, mid, h)))
            lo = mid;
        else
            hi = mid;
    }
    return std::floor(lo * 100) / 100;
}

// Vectorized with recycling of the shorter argument.
inline std::vector<double> max_chroma(const std::vector<double>& h, const std::vector<double>& l)
{
    if (h.empty() || l.empty())
        return {};
    std::size_t n = std::max(h.size(), l.size());
    if (n % h.size() != 0 || n % l.size() != 0)
        throw InvalidInput("h and l lengths must be multiples of each other", "h");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = max_chroma(h[i % h.size()], l[i % l.size()]);
    return out;
}

// Additive mixing in RGB or XYZ; b is first converted to a's space.
inline Color mixcolor(double alpha, const Color& a, const Color& b)
{
    if (!(alpha >= 0 && alpha <= 1))
        throw InvalidInput("alpha must be in [0,1]", "alpha");
    if (a.space != Space::RGB && a.space != Space::XYZ)
        throw InvalidInput("mixcolor needs an additive space (RGB or XYZ), got " +
                               std::string(space_name(a.space)),
                           "space");
    Color bb = convert(b, a.space);
    Color out{a.space, {}};
    for (int i = 0; i < 3; ++i)
        out[i] = (1 - alpha) * a[i] + alpha * bb[i];
    return out;
}

} // namespace hclkit
