#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hclkit/embedded_data.hpp"
#include "hclkit/error.hpp"
#include "hclkit/hex.hpp"
#include "hclkit/jsonfwd.hpp"

namespace hclkit {

enum class CvdKind { deutan, protan, tritan };

constexpr std::string_view cvd_name(CvdKind k)
{
    switch (k) {
    case CvdKind::deutan: return "deutan";
    case CvdKind::protan: return "protan";
    case CvdKind::tritan: return "tritan";
    }
    return "?";
}

inline std::optional<CvdKind> parse_cvd_kind(std::string_view s)
{
    std::string low(s);
    for (auto& ch : low)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (auto k : {CvdKind::deutan, CvdKind::protan, CvdKind::tritan})
        if (low == cvd_name(k))
            return k;
    return std::nullopt;
}

// Row-major 3x3, applied to (R,G,B) column vectors.
using Mat3 = std::array<double, 9>;

struct CvdMatrix {
    CvdKind kind = CvdKind::deutan;
    double severity = 0;
    Mat3 m{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

// Tabulated matrices at severities 0.0, 0.1, ..., 1.0 for each kind.
class CvdTable {
public:
    static CvdTable from_json(const json& doc)
    {
        CvdTable t;
        for (auto k : {CvdKind::deutan, CvdKind::protan, CvdKind::tritan}) {
            std::string key(cvd_name(k));
            if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 11)
                throw InvalidInput("CVD table needs 11 matrices for " + key, key);
            for (std::size_t s = 0; s < 11; ++s) {
                const auto& row = doc[key][s];
                if (!row.is_array() || row.size() != 9)
                    throw InvalidInput("CVD matrix must have 9 entries", key);
                for (std::size_t e = 0; e < 9; ++e)
                    t.m_[static_cast<int>(k)][s][e] = row[e].get<double>();
            }
        }
        return t;
    }

    const Mat3& at(CvdKind k, int level) const { return m_[static_cast<int>(k)][level]; }

private:
    std::array<std::array<Mat3, 11>, 3> m_{};
};

inline const CvdTable& builtin_cvd_table()
{
    static const CvdTable t = CvdTable::from_json(json::parse(data::cvd_machado_json));
    return t;
}

// Entrywise linear interpolation between the two bracketing tabulated matrices.
inline CvdMatrix cvd_matrix(CvdKind kind, double severity, const CvdTable& table = builtin_cvd_table())
{
    if (!(severity >= 0 && severity <= 1))
        throw InvalidInput("severity must be in [0,1]", "severity");
    double x = severity * 10;
    int lo = static_cast<int>(std::floor(x));
    CvdMatrix out{kind, severity, {}};
    if (lo >= 10) {
        out.m = table.at(kind, 10);
        return out;
    }
    double w = x - lo;
    const Mat3& a = table.at(kind, lo);
    const Mat3& b = table.at(kind, lo + 1);
    for (int e = 0; e < 9; ++e)
        out.m[e] = w == 0 ? a[e] : (1 - w) * a[e] + w * b[e];
    return out;
}

// Works on the 8-bit scale; results are clamped to [0,255] and truncated.
inline std::array<std::uint8_t, 3> apply_cvd(const CvdMatrix& cm, std::uint8_t r, std::uint8_t g,
                                             std::uint8_t b)
{
    const Mat3& m = cm.m;
    std::array<std::uint8_t, 3> out{};
    for (int row = 0; row < 3; ++row) {
        double v = m[row * 3] * r + m[row * 3 + 1] * g + m[row * 3 + 2] * b;
        v = v < 0 ? 0 : (v > 255 ? 255 : v);
        out[row] = static_cast<std::uint8_t>(v);
    }
    return out;
}

inline std::vector<std::string> simulate_cvd(const std::vector<std::string>& colors, const CvdMatrix& m)
{
    std::vector<std::string> out;
    out.reserve(colors.size());
    for (const auto& c : parse_colors(colors)) {
        auto px = apply_cvd(m, static_cast<std::uint8_t>(detail::channel_code(c.color[0])),
                            static_cast<std::uint8_t>(detail::channel_code(c.color[1])),
                            static_cast<std::uint8_t>(detail::channel_code(c.color[2])));
        std::string hex = "#";
        for (int ch : px)
            detail::append_byte(hex, ch);
        if (c.alpha)
            detail::append_byte(hex, *c.alpha);
        out.push_back(std::move(hex));
    }
    return out;
}

inline std::vector<std::string> deutan(const std::vector<std::string>& colors, double severity = 1)
{
    return simulate_cvd(colors, cvd_matrix(CvdKind::deutan, severity));
}

inline std::vector<std::string> protan(const std::vector<std::string>& colors, double severity = 1)
{
    return simulate_cvd(colors, cvd_matrix(CvdKind::protan, severity));
}

inline std::vector<std::string> tritan(const std::vector<std::string>& colors, double severity = 1)
{
    return simulate_cvd(colors, cvd_matrix(CvdKind::tritan, severity));
}

} // namespace hclkit
