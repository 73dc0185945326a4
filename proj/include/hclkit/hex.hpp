#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hclkit/color.hpp"
#include "hclkit/error.hpp"

namespace hclkit {

// A decoded hex color: sRGB channels plus the alpha byte if one was given.
struct Rgba {
    Color color;
    std::optional<std::uint8_t> alpha;
};

namespace detail {

// A channel is displayable when its 8-bit code (int)(255*c + 0.5) is in [0,255].
inline bool channel_in_gamut(double c)
{
    double x = 255.0 * c + 0.5;
    return x > -1.0 && x < 256.0;
}

inline int channel_code(double c)
{
    if (!(c > 0))
        return 0;
    if (c > 1)
        c = 1;
    return static_cast<int>(255.0 * c + 0.5);
}

inline int hex_digit(char ch)
{
    if (ch >= '0' && ch <= '9')
        return ch - '0';
    if (ch >= 'a' && ch <= 'f')
        return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F')
        return ch - 'A' + 10;
    return -1;
}

inline void append_byte(std::string& s, int b)
{
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02X", b & 0xFF);
    s += buf;
}

} // namespace detail

inline bool in_gamut(const Color& c)
{
    Color s = convert(c, Space::sRGB);
    return detail::channel_in_gamut(s[0]) && detail::channel_in_gamut(s[1]) &&
           detail::channel_in_gamut(s[2]);
}

struct Encoded {
    std::optional<std::string> hex;
    bool fixup_fired = false;
};

inline Encoded encode(const Color& c, bool fixup, std::optional<std::uint8_t> alpha = std::nullopt)
{
    Color s = convert(c, Space::sRGB);
    bool inside = detail::channel_in_gamut(s[0]) && detail::channel_in_gamut(s[1]) &&
                  detail::channel_in_gamut(s[2]);
    if (!inside && !fixup)
        return {std::nullopt, true};
    std::string out = "#";
    for (double ch : s.v)
        detail::append_byte(out, detail::channel_code(ch));
    if (alpha)
        detail::append_byte(out, *alpha);
    return {std::move(out), !inside};
}

// Returns nullopt when fixup is off and the color is not displayable.
inline std::optional<std::string> hex_encode(const Color& c, bool fixup = true,
                                             std::optional<std::uint8_t> alpha = std::nullopt)
{
    return encode(c, fixup, alpha).hex;
}

inline Rgba hex_decode(std::string_view s)
{
    auto bad = [&] {
        return ParseError("malformed hex color '" + std::string(s) + "'", std::string(s));
    };
    if ((s.size() != 7 && s.size() != 9) || s[0] != '#')
        throw bad();
    int b[4] = {0, 0, 0, 0};
    for (std::size_t i = 1; i < s.size(); i += 2) {
        int hi = detail::hex_digit(s[i]), lo = detail::hex_digit(s[i + 1]);
        if (hi < 0 || lo < 0)
            throw bad();
        b[i / 2] = hi * 16 + lo;
    }
    Rgba out{srgb(b[0] / 255.0, b[1] / 255.0, b[2] / 255.0), std::nullopt};
    if (s.size() == 9)
        out.alpha = static_cast<std::uint8_t>(b[3]);
    return out;
}

inline std::uint8_t alpha_byte(double a)
{
    if (!std::isfinite(a) || a < 0 || a > 1)
        throw InvalidInput("alpha must be in [0,1]", "alpha");
    return static_cast<std::uint8_t>(std::floor(a * 255.0 + 0.5));
}

// R/X11 color names (R's "green" is #00FF00, unlike CSS).
inline const std::vector<std::pair<std::string_view, std::string_view>>& color_names()
{
    static const std::vector<std::pair<std::string_view, std::string_view>> names = {
        {"black", "#000000"},     {"white", "#FFFFFF"},       {"red", "#FF0000"},
        {"green", "#00FF00"},     {"blue", "#0000FF"},        {"yellow", "#FFFF00"},
        {"cyan", "#00FFFF"},      {"magenta", "#FF00FF"},     {"orange", "#FFA500"},
        {"purple", "#A020F0"},    {"violet", "#EE82EE"},      {"pink", "#FFC0CB"},
        {"brown", "#A52A2A"},     {"gray", "#BEBEBE"},        {"grey", "#BEBEBE"},
        {"darkgray", "#A9A9A9"},  {"darkgrey", "#A9A9A9"},    {"lightgray", "#D3D3D3"},
        {"lightgrey", "#D3D3D3"}, {"navy", "#000080"},        {"maroon", "#B03060"},
        {"gold", "#FFD700"},      {"salmon", "#FA8072"},      {"tomato", "#FF6347"},
        {"turquoise", "#40E0D0"}, {"skyblue", "#87CEEB"},     {"steelblue", "#4682B4"},
        {"darkgreen", "#006400"}, {"forestgreen", "#228B22"}, {"darkblue", "#00008B"},
        {"darkred", "#8B0000"},   {"darkorange", "#FF8C00"},  {"beige", "#F5F5DC"},
        {"khaki", "#F0E68C"},     {"coral", "#FF7F50"},       {"orchid", "#DA70D6"},
        {"plum", "#DDA0DD"},      {"tan", "#D2B48C"},         {"chocolate", "#D2691E"},
        {"firebrick", "#B22222"}, {"olivedrab", "#6B8E23"},   {"seagreen", "#2E8B57"},
    };
    return names;
}

// Accepts "#RRGGBB", "#RRGGBBAA" or a color name (case and spaces ignored).
inline Rgba parse_color(std::string_view s)
{
    if (!s.empty() && s[0] == '#')
        return hex_decode(s);
    std::string key;
    for (char ch : s)
        if (ch != ' ')
            key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& [name, hex] : color_names())
        if (name == key)
            return hex_decode(hex);
    throw ParseError("unknown color '" + std::string(s) + "'", std::string(s));
}

inline std::vector<Rgba> parse_colors(const std::vector<std::string>& colors)
{
    std::vector<Rgba> out;
    out.reserve(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
        try {
            out.push_back(parse_color(colors[i]));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " at index " + std::to_string(i), e.token());
        }
    }
    return out;
}

// Hex for an sRGB color that is already in [0,1].
inline std::string to_hex(const Rgba& c)
{
    return *hex_encode(c.color, true, c.alpha);
}

} // namespace hclkit
