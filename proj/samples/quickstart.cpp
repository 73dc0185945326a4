// Tour of the library: palettes, conversion, CVD emulation and manipulation.

#include <cstdio>
#include <string>
#include <vector>

#include "hclkit/hclkit.hpp"

static void print(const char* title, const std::vector<std::string>& colors)
{
    std::printf("%-28s", title);
    for (const auto& c : colors)
        std::printf(" %s", c.c_str());
    std::printf("\n");
}

int main()
{
    using namespace hclkit;
    Registry reg = builtin_registry();

    print("Dark 3 (n=4)", qualitative_palette(4, reg.lookup("Dark 3").params));

    PaletteParams set2 = reg.lookup("set2").params;
    set2.l1 = 80;
    print("Set 2 with l1=80", qualitative_palette(4, set2));

    print("Purples 3 (n=5)", sequential_palette(5, reg.lookup("Purples 3").params));
    print("Blue-Red (n=7)", diverging_palette(7, reg.lookup("Blue-Red").params));

    Color pink = convert(polar_luv(70, 50, 0), Space::sRGB);
    std::printf("%-28s sRGB(%.7f, %.7f, %.7f) = %s\n", "polarLUV(70,50,0)", pink[0], pink[1], pink[2],
                hex_encode(pink)->c_str());

    std::vector<std::string> rainbow{"#FF0000", "#FFFF00", "#00FF00", "#00FFFF", "#0000FF"};
    print("deutan(rainbow)", deutan(rainbow));
    print("desaturate(rainbow)", desaturate(rainbow));
    print("lighten(rainbow, 0.3)", lighten(rainbow, 0.3));

    std::printf("%-28s %.2f\n", "max_chroma(h=0, l=50)", max_chroma(0, 50));
    return 0;
}
