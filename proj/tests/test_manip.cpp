#include <gtest/gtest.h>

#include <random>

#include "hclkit/hclkit.hpp"
#include "oracle.hpp"

using namespace hclkit;
using Strings = std::vector<std::string>;

TEST(Desaturate, PrintedBlocks)
{
    EXPECT_EQ(desaturate({"white", "orange", "blue", "black"}),
              (Strings{"#FFFFFF", "#B8B8B8", "#4C4C4C", "#000000"}));
    EXPECT_EQ(desaturate({"#FF0000FF", "#00FF00FF", "#0000FFFF"}),
              (Strings{"#7F7F7FFF", "#DCDCDCFF", "#4C4C4CFF"}));
}

TEST(Desaturate, FullRemovalGivesExactGrays)
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> b(0, 255);
    for (int k = 0; k < 500; ++k) {
        std::string hex = oracle::hex({b(rng), b(rng), b(rng)});
        auto g = oracle::parse(desaturate({hex})[0]);
        EXPECT_EQ(g[0], g[1]) << hex;
        EXPECT_EQ(g[1], g[2]) << hex;
    }
}

TEST(Desaturate, PartialScalesChroma)
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> L(30, 80), C(5, 40), H(0, 360), A(0, 1);
    for (int k = 0; k < 500; ++k) {
        auto e = encode(polar_luv(L(rng), C(rng), H(rng)), false);
        if (!e.hex)
            continue;
        double amount = A(rng);
        double c0 = convert(hex_decode(*e.hex).color, Space::polarLUV)[1];
        double c1 = convert(hex_decode(desaturate({*e.hex}, amount)[0]).color, Space::polarLUV)[1];
        EXPECT_NEAR(c1, c0 * (1 - amount), 1.0);
    }
}

TEST(Lighten, RelativeAndAbsoluteFormulas)
{
    EXPECT_DOUBLE_EQ(detail::shift_lightness(40, 0.5, true, Adjustment::relative, 100), 70);
    EXPECT_DOUBLE_EQ(detail::shift_lightness(40, 0.5, false, Adjustment::relative, 100), 20);
    EXPECT_DOUBLE_EQ(detail::shift_lightness(40, 0.3, true, Adjustment::absolute, 100), 70);
    EXPECT_DOUBLE_EQ(detail::shift_lightness(40, 0.5, false, Adjustment::absolute, 100), 0);
    EXPECT_DOUBLE_EQ(detail::shift_lightness(0.4, 0.5, true, Adjustment::relative, 1), 0.7);
}

TEST(Lighten, GoldenOutputs)
{
    // Frozen after checking the HCL and HLS lightness arithmetic by hand.
    EXPECT_EQ(lighten({"red"}, 0.5), (Strings{"#FF6A6A"}));
    EXPECT_EQ(darken({"red"}, 0.3, {LightenSpace::HCL, Adjustment::relative}), (Strings{"#C90000"}));
    EXPECT_EQ(lighten({"#808080"}, 0.5, {LightenSpace::HLS, Adjustment::relative}), (Strings{"#C0C0C0"}));
    EXPECT_EQ(darken({"#808080"}, 0.5, {LightenSpace::HLS, Adjustment::relative}), (Strings{"#404040"}));
}

TEST(Lighten, AbsoluteRoundTrip)
{
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> L(30, 70), C(0, 30), H(0, 360), A(0, 0.2);
    int checked = 0;
    for (int k = 0; k < 500; ++k) {
        auto e = encode(polar_luv(L(rng), C(rng), H(rng)), false);
        if (!e.hex)
            continue;
        double amount = A(rng);
        LightenMethod m{LightenSpace::HCL, Adjustment::absolute};
        std::string up = lighten({*e.hex}, amount, m)[0];
        if (encode(convert(hex_decode(up).color, Space::polarLUV), false).fixup_fired)
            continue;
        double l0 = convert(hex_decode(*e.hex).color, Space::polarLUV)[0];
        double l2 = convert(hex_decode(darken({up}, amount, m)[0]).color, Space::polarLUV)[0];
        if (std::abs(l0 + 100 * amount - convert(hex_decode(up).color, Space::polarLUV)[0]) > 1)
            continue; // clamped on the way up
        EXPECT_NEAR(l2, l0, 1.0);
        ++checked;
    }
    EXPECT_GT(checked, 300);
}

TEST(Lighten, CombinedKeepsHueAndValidates)
{
    auto out = darken({"#3B82F6"}, 0.3);
    Color before = convert(hex_decode("#3B82F6").color, Space::polarLUV);
    Color after = convert(hex_decode(out[0]).color, Space::polarLUV);
    EXPECT_NEAR(after[2], before[2], 3);
    EXPECT_LT(after[0], before[0]);
    EXPECT_THROW(lighten({"red"}, 1.5), InvalidInput);
    EXPECT_THROW(desaturate({"red"}, -0.1), InvalidInput);
    EXPECT_EQ(lighten({"#FF000080"}, 0.2)[0].substr(7), "80");
}

TEST(MaxChroma, PrintedTables)
{
    std::vector<double> hue_row{137.96, 59.99, 69.06, 39.81, 65.45, 119.54, 137.96};
    for (int k = 0; k < 7; ++k)
        EXPECT_NEAR(max_chroma(60.0 * k, 50), hue_row[k], 0.01);
    std::vector<double> lum_row{0.00, 28.04, 55.35, 82.79, 110.28, 0.00};
    for (int k = 0; k < 6; ++k)
        EXPECT_NEAR(max_chroma(120, 20.0 * k), lum_row[k], 0.01);
    auto v = max_chroma(std::vector<double>{0, 60}, std::vector<double>{50});
    EXPECT_EQ(v.size(), 2u);
    EXPECT_THROW(max_chroma(std::vector<double>{0, 60}, std::vector<double>{50, 60, 70}), InvalidInput);
}

TEST(MaxChroma, BracketsGamutBoundary)
{
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> H(0, 360), L(2, 98);
    for (int k = 0; k < 500; ++k) {
        double h = H(rng), l = L(rng);
        double c = max_chroma(h, l);
        EXPECT_TRUE(encode(polar_luv(l, c, h), false).hex) << h << " " << l;
        EXPECT_FALSE(encode(polar_luv(l, c + 0.05, h), false).hex) << h << " " << l;
        EXPECT_EQ(max_chroma(h + 360, l), c);
    }
}

TEST(Mixcolor, HalfRedHalfGreen)
{
    Color m = mixcolor(0.5, rgb(1, 0, 0), rgb(0, 1, 0));
    EXPECT_EQ(m.space, Space::RGB);
    EXPECT_EQ(m[0], 0.5);
    EXPECT_EQ(m[1], 0.5);
    EXPECT_EQ(m[2], 0.0);
    Color x = mixcolor(0.25, xyz(10, 20, 30), rgb(0, 0, 0));
    EXPECT_EQ(x.space, Space::XYZ);
    EXPECT_NEAR(x[1], 15, 1e-12);
    EXPECT_THROW(mixcolor(0.5, srgb(1, 0, 0), srgb(0, 1, 0)), InvalidInput);
}
