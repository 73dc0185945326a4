// Writes three groups of sequential palettes as one SVG swatch chart.
//   swatch_gallery [out.svg]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hclkit/hclkit.hpp"

int main(int argc, char** argv)
{
    using namespace hclkit;
    Registry reg = builtin_registry();
    const std::vector<std::pair<std::string, std::vector<std::string>>> layout = {
        {"Single-hue", {"Grays", "Blues 3", "Purples 3", "Reds 3"}},
        {"Multi-hue", {"Viridis", "Heat", "Terrain", "Purple-Yellow"}},
        {"Diverging", {"Blue-Red", "Green-Brown", "Tropic", "Berlin"}},
    };
    std::vector<SwatchGroup> groups;
    for (const auto& [label, names] : layout) {
        SwatchGroup g{label, {}};
        for (const auto& name : names) {
            PaletteRecord r = reg.lookup(name);
            g.palettes.push_back({r.name, generate_colors(9, r.params).hex()});
        }
        groups.push_back(std::move(g));
    }
    std::string svg = swatch_svg(groups);
    if (argc > 1) {
        std::ofstream(argv[1]) << svg;
        std::fprintf(stderr, "wrote %s\n", argv[1]);
    } else {
        std::cout << svg;
    }
    return 0;
}
