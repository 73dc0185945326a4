#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "hclkit/hclkit.hpp"
#include "oracle.hpp"

using namespace hclkit;

namespace {

using Strings = std::vector<std::string>;

PaletteParams qual(double h1, std::optional<double> h2, double c, double l)
{
    PaletteParams p;
    p.type = PaletteType::qualitative;
    p.h1 = h1;
    p.h2 = h2;
    p.c1 = c;
    p.l1 = l;
    return p;
}

// HCL coordinates of color k of n, computed from the trajectory definitions
// without the library's generator code.
oracle::V3 expected_hcl(const PaletteParams& p, int n, int k)
{
    auto pw = [](double i, double e) { return std::pow(i, e); };
    double p1 = p.p1.value_or(1);
    switch (p.type) {
    case PaletteType::qualitative: {
        double h2 = p.h2 ? *p.h2 : *p.h1 + 360.0 * (n - 1) / n;
        double h = n == 1 ? *p.h1 : *p.h1 + (h2 - *p.h1) * k / (n - 1);
        return {*p.l1, *p.c1, h};
    }
    case PaletteType::sequential_single:
    case PaletteType::sequential_multi: {
        double i = n == 1 ? 1 : double(n - 1 - k) / (n - 1);
        double c2 = p.c2.value_or(0), l2 = p.l2.value_or(*p.l1), h2 = p.h2.value_or(*p.h1);
        double x = pw(i, p1);
        double c = p.cmax ? oracle::triangle(*p.c1, c2, *p.cmax, x) : c2 + (*p.c1 - c2) * x;
        double l = l2 + (*p.l1 - l2) * pw(i, p.p2.value_or(p1));
        return {l, c, h2 + (*p.h1 - h2) * i};
    }
    case PaletteType::diverging: {
        double i = n == 1 ? 0 : std::abs(double(n - 1) / 2 - k) / (double(n - 1) / 2);
        bool left = 2 * k < n - 1;
        double x = pw(i, p1);
        double c = p.cmax ? oracle::triangle(*p.c1, 0, *p.cmax, x) : *p.c1 * x;
        double l2 = p.l2.value_or(*p.l1);
        double l = l2 + (*p.l1 - l2) * pw(i, p.p2.value_or(p1));
        return {l, c, left ? *p.h1 : p.h2.value_or(*p.h1)};
    }
    case PaletteType::divergingx: {
        double i = n == 1 ? 0 : std::abs(double(n - 1) / 2 - k) / (double(n - 1) / 2);
        bool left = 2 * k < n - 1;
        double c2 = p.c2.value_or(0), l2 = *p.l2;
        double p2 = p.p2.value_or(p1);
        double ha = left ? *p.h1 : p.h3.value_or(*p.h1);
        double ca = left ? *p.c1 : p.c3.value_or(*p.c1);
        double la = left ? *p.l1 : p.l3.value_or(*p.l1);
        double pc = left ? p1 : p.p3.value_or(p1);
        double pl = left ? p2 : p.p4.value_or(p2);
        auto cm = left ? p.cmax1 : p.cmax2;
        double hb = p.h2.value_or(ha);
        double x = pw(i, pc);
        double c = cm ? oracle::triangle(ca, c2, *cm, x) : c2 + (ca - c2) * x;
        return {l2 + (la - l2) * pw(i, pl), c, hb + (ha - hb) * i};
    }
    }
    return {};
}

json load_golden()
{
    std::ifstream f(HCLKIT_TEST_DATA_DIR "/golden/builtins_n7.json");
    return json::parse(f);
}

} // namespace

TEST(Golden, Dark3)
{
    auto p = builtin_registry().lookup("Dark 3").params;
    EXPECT_EQ(qualitative_palette(4, p), (Strings{"#E16A86", "#909800", "#00AD9A", "#9183E6"}));
}

TEST(Golden, Set2ThreeForms)
{
    Strings want{"#ED90A4", "#ABB150", "#00C1B2", "#ACA2EC"};
    EXPECT_EQ(qualitative_palette(4, qual(0, 270, 60, 70)), want);
    EXPECT_EQ(qualitative_palette(4, builtin_registry().lookup("set2").params), want);
    EXPECT_EQ(qualitative_palette(4, builtin_registry().lookup("Set 2").params), want);
}

TEST(Golden, Set2Lighter)
{
    Registry reg = builtin_registry();
    PaletteParams p = reg.lookup("set2").params;
    p.l1 = 80;
    Strings want{"#FFACBF", "#C6CD70", "#32DDCD", "#C7BEFF"};
    EXPECT_EQ(qualitative_palette(4, p), want);
    reg.register_palette("myset", p);
    EXPECT_EQ(qualitative_palette(4, reg.lookup("myset").params), want);
}

// Frozen after cross-checking against the oracle below.
TEST(Golden, DerivedSequentialAndDiverging)
{
    Registry reg = builtin_registry();
    EXPECT_EQ(sequential_palette(5, reg.lookup("Purples 3").params),
              (Strings{"#312271", "#6D60BB", "#A79FE1", "#DAD6FA", "#F9F9F9"}));
    EXPECT_EQ(diverging_palette(7, reg.lookup("Blue-Red").params),
              (Strings{"#023FA5", "#7D87B9", "#BEC1D4", "#E2E2E2", "#D6BCC0", "#BB7784", "#8E063B"}));
    EXPECT_EQ(sequential_palette(2, reg.lookup("Purples 3").params).front(), "#312271");
}

TEST(Golden, EveryBuiltinAtSevenIsFrozen)
{
    json g = load_golden();
    Registry reg = builtin_registry();
    ASSERT_EQ(g.size(), reg.size());
    for (const auto& r : reg.list()) {
        ASSERT_TRUE(g.contains(r.name)) << r.name;
        EXPECT_EQ(json(generate_colors(7, r.params).hex()), g[r.name]) << r.name;
    }
}

TEST(Oracle, EveryBuiltinWithinOneStep)
{
    for (const auto& r : builtin_registry().list()) {
        for (int n : {2, 3, 5, 7, 8, 12}) {
            auto res = generate_colors(n, r.params);
            ASSERT_EQ(res.colors.size(), std::size_t(n));
            for (int k = 0; k < n; ++k) {
                auto hcl = expected_hcl(r.params, n, k);
                std::string ref = oracle::hex(oracle::bytes(oracle::hcl_to_srgb(hcl[0], hcl[1], hcl[2])));
                EXPECT_LE(oracle::hex_distance(res.colors[k].hex, ref), 1)
                    << r.name << " n=" << n << " k=" << k << " " << res.colors[k].hex << " vs " << ref;
            }
        }
    }
}

TEST(Trajectory, LinearAndPowerReduction)
{
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> v(0, 100), u(0, 1);
    for (int k = 0; k < 500; ++k) {
        double a = v(rng), b = v(rng), i = u(rng);
        Trajectory t{TrajectoryKind::linear, a, b, 0, 1};
        EXPECT_EQ(trajectory_value(t, i), b - (b - a) * i);
        Trajectory tri{TrajectoryKind::triangular, a, b, std::max(a, b) + v(rng), 1};
        EXPECT_NEAR(trajectory_value(tri, i), oracle::triangle(a, b, tri.vmax, i), 1e-9);
        Trajectory tri2 = tri;
        tri2.power = 2;
        EXPECT_NEAR(trajectory_value(tri2, i), oracle::triangle(a, b, tri.vmax, i * i), 1e-9);
    }
}

TEST(Trajectory, TriangleContinuousAtPeak)
{
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> v(0, 80), extra(1, 60);
    for (int k = 0; k < 500; ++k) {
        double a = v(rng), b = v(rng), m = std::max(a, b) + extra(rng);
        Trajectory t{TrajectoryKind::triangular, a, b, m, 1};
        double j = 1 / (1 + std::abs(m - a) / std::abs(m - b));
        EXPECT_NEAR(trajectory_value(t, j), m, 1e-9);
        EXPECT_NEAR(trajectory_value(t, std::nextafter(j, 0.0)), m, 1e-6);
        EXPECT_NEAR(trajectory_value(t, std::nextafter(j, 1.0)), m, 1e-6);
        EXPECT_NEAR(trajectory_value(t, 1), a, 1e-9);
        EXPECT_NEAR(trajectory_value(t, 0), b, 1e-9);
    }
}

TEST(Trajectory, RejectsBadInput)
{
    Trajectory t{TrajectoryKind::linear, 0, 1, 0, 1};
    EXPECT_THROW(trajectory_value(t, 1.5), InvalidInput);
    t.power = 0;
    EXPECT_THROW(trajectory_value(t, 0.5), InvalidInput);
}

TEST(Property, QualitativeFlat)
{
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> H(0, 360), C(10, 70), L(30, 90);
    std::uniform_int_distribution<int> N(2, 12);
    int checked = 0;
    for (int k = 0; k < 500; ++k) {
        double c = C(rng), l = L(rng);
        auto res = qualitative_colors(N(rng), qual(H(rng), std::nullopt, c, l));
        for (const auto& s : res.colors) {
            if (s.fixup_fired)
                continue;
            Color back = convert(hex_decode(s.hex).color, Space::polarLUV);
            EXPECT_NEAR(back[0], l, 2);
            EXPECT_NEAR(back[1], c, 2);
            ++checked;
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(Property, SequentialMonotoneLuminance)
{
    std::mt19937 rng(24);
    std::uniform_real_distribution<double> H(0, 360), C(0, 100), L(10, 95), P(0.3, 3);
    std::uniform_int_distribution<int> N(3, 12);
    for (int k = 0; k < 500; ++k) {
        PaletteParams p;
        p.type = PaletteType::sequential_multi;
        p.h1 = H(rng), p.h2 = H(rng), p.c1 = C(rng), p.c2 = C(rng) / 4;
        p.l1 = L(rng), p.l2 = L(rng), p.p1 = P(rng), p.p2 = P(rng);
        if (std::abs(*p.l1 - *p.l2) < 20)
            continue;
        auto res = sequential_colors(N(rng), p);
        double dir = *p.l2 > *p.l1 ? 1 : -1;
        double prev = 0;
        bool have_prev = false;
        for (const auto& s : res.colors) {
            if (s.fixup_fired) {
                have_prev = false;
                continue;
            }
            double l = convert(hex_decode(s.hex).color, Space::polarLUV)[0];
            if (have_prev) {
                EXPECT_GT(dir * (l - prev), -0.5);
            }
            prev = l;
            have_prev = true;
        }
    }
}

TEST(Property, DivergingMirrorsUnderHueSwap)
{
    std::mt19937 rng(25);
    std::uniform_real_distribution<double> H(0, 360), C(10, 100), L(20, 95), P(0.3, 3);
    std::uniform_int_distribution<int> N(1, 8);
    for (int k = 0; k < 500; ++k) {
        PaletteParams p;
        p.type = PaletteType::diverging;
        p.h1 = H(rng), p.h2 = H(rng), p.c1 = C(rng), p.l1 = L(rng), p.l2 = L(rng);
        p.p1 = P(rng), p.p2 = P(rng);
        if (k % 2)
            p.cmax = *p.c1 + 20;
        int n = 2 * N(rng) + 1;
        PaletteParams q = p;
        std::swap(q.h1, q.h2);
        auto a = diverging_palette(n, p), b = diverging_palette(n, q);
        for (int i = 0; i < n; ++i)
            ASSERT_EQ(a[i], b[n - 1 - i]);
    }
}

TEST(Property, DivergingxSymmetricMatchesDiverging)
{
    std::mt19937 rng(26);
    std::uniform_real_distribution<double> H(0, 360), C(10, 90), L(20, 95);
    for (int k = 0; k < 500; ++k) {
        PaletteParams d;
        d.type = PaletteType::diverging;
        d.h1 = H(rng), d.h2 = H(rng), d.c1 = C(rng), d.l1 = L(rng), d.l2 = L(rng);
        PaletteParams x;
        x.type = PaletteType::divergingx;
        x.h1 = d.h1, x.h3 = d.h2, x.c1 = d.c1, x.l1 = d.l1, x.l2 = d.l2;
        int n = 2 + k % 10;
        EXPECT_EQ(diverging_palette(n, d), divergingx_palette(n, x));
    }
}

TEST(Palettes, DefaultsAndWarnings)
{
    PaletteParams p;
    p.type = PaletteType::sequential_single;
    p.h1 = 260, p.c1 = 80, p.l1 = 30;
    auto r = sequential_colors(4, p);
    ASSERT_EQ(r.warnings.size(), 1u);
    p.l2 = 90;
    EXPECT_TRUE(sequential_colors(4, p).warnings.empty());
    EXPECT_TRUE(sequential_colors(0, p).colors.empty());
    EXPECT_EQ(sequential_colors(1, p).colors.size(), 1u);
}

TEST(Palettes, RevAndAlphaArePostProcessing)
{
    auto p = builtin_registry().lookup("Dark 3").params;
    auto plain = qualitative_palette(4, p);
    Options o;
    o.rev = true;
    o.alpha = 0.5;
    auto out = qualitative_palette(4, p, o);
    for (int k = 0; k < 4; ++k)
        EXPECT_EQ(out[k], plain[3 - k] + "80");
}

TEST(Palettes, ValidationNamesField)
{
    auto p = qual(0, std::nullopt, 50, 70);
    p.l1 = 120;
    try {
        qualitative_colors(3, p);
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_EQ(e.field(), "l1");
    }
    p.l1 = 70;
    p.c1 = -1;
    EXPECT_THROW(qualitative_colors(3, p), InvalidInput);
    EXPECT_THROW(qualitative_colors(-1, qual(0, std::nullopt, 50, 70)), InvalidInput);
    PaletteParams x;
    x.type = PaletteType::divergingx;
    x.h1 = 0, x.c1 = 40, x.l1 = 50;
    EXPECT_THROW(divergingx_colors(5, x), InvalidInput);
}

TEST(Palettes, NoFixupReportsMissing)
{
    auto p = qual(120, std::nullopt, 150, 50);
    p.fixup = false;
    auto r = qualitative_colors(3, p);
    bool any_missing = false;
    for (const auto& s : r.colors)
        any_missing = any_missing || s.hex.empty();
    EXPECT_TRUE(any_missing);
}

TEST(Palettes, CividisManualCloseToPreset)
{
    auto manual = cividis_manual(9);
    auto preset = divergingx_palette(9, builtin_registry().lookup("Cividis").params);
    ASSERT_EQ(manual.size(), preset.size());
    for (std::size_t k = 0; k < manual.size(); ++k)
        EXPECT_LE(oracle::hex_distance(manual[k], preset[k]), 8) << k;
}

TEST(Palettes, Presets)
{
    EXPECT_EQ(rainbow_hcl(4), qualitative_palette(4, qual(0, std::nullopt, 50, 70)));
    auto heat = heat_hcl(5);
    EXPECT_EQ(heat.size(), 5u);
    auto terrain = terrain_hcl(5);
    EXPECT_EQ(terrain.back(), *hex_encode(polar_luv(95, 0, 0)));
    auto hsv_pal = diverging_hsv(5);
    EXPECT_EQ(hsv_pal.front(), "#0000FF");
    EXPECT_EQ(hsv_pal[2], "#FFFFFF");
    EXPECT_EQ(hsv_pal.back(), "#FF0000");
}
