#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hclkit/hclkit.hpp"
#include "png_io.hpp"
#include "server.hpp"

namespace fs = std::filesystem;
using hclkit::json;

namespace {

enum Exit { ok = 0, usage = 2, io = 3 };

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw hclkit::tools::IoError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw hclkit::tools::IoError("cannot write " + path);
}

json parse_json_arg(const std::string& text, const std::string& field)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw hclkit::InvalidInput("invalid JSON: " + std::string(e.what()), field);
    }
}

// Colors may be given as separate arguments or comma separated.
std::vector<std::string> split_colors(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (const auto& a : args) {
        std::stringstream ss(a);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty())
                out.push_back(tok);
    }
    return out;
}

void print_lines(const std::vector<std::string>& xs)
{
    for (const auto& x : xs)
        std::cout << x << "\n";
}

bool ends_with_png(const std::string& s)
{
    if (s.size() < 4)
        return false;
    std::string ext = s.substr(s.size() - 4);
    for (auto& ch : ext)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return ext == ".png";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hclkit: HCL-based color palettes, color vision deficiency emulation and palette analysis"};
    app.require_subcommand(1);

    std::string registry_file;
    app.add_option("--registry", registry_file, "JSON file holding user-registered palettes")
        ->envname("HCLKIT_REGISTRY");

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a palette");
    std::string gen_type, gen_palette, gen_format = "plain";
    int gen_n = 7;
    bool gen_rev = false;
    std::optional<bool> gen_fixup;
    std::optional<double> gen_alpha;
    std::map<std::string, double> gen_params;
    gen->add_option("type", gen_type, "qualitative, sequential, diverging or divergingx")->required();
    gen->add_option("--palette,-p", gen_palette, "Named palette to start from");
    gen->add_option("-n", gen_n, "Number of colors")->check(CLI::Range(0, 100000));
    static const char* param_names[] = {"h1", "h2", "h3", "c1", "c2", "c3", "cmax", "cmax1", "cmax2",
                                        "l1", "l2", "l3", "p1", "p2", "p3", "p4"};
    for (const char* name : param_names) {
        gen->add_option_function<double>(std::string("--") + name,
                                          [&gen_params, name](double v) { gen_params[name] = v; },
                                          std::string("Override ") + name);
    }
    gen->add_flag_function(
        "--fixup,!--no-fixup", [&gen_fixup](std::int64_t c) { gen_fixup = c > 0; },
        "Clip out-of-gamut colors (default) or report them as NA");
    gen->add_flag("--rev", gen_rev, "Reverse the order");
    gen->add_option("--alpha", gen_alpha, "Opacity in [0,1]");
    gen->add_option("--format", gen_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    // list
    auto* lst = app.add_subcommand("list", "List palettes");
    std::string list_type, list_format = "plain";
    lst->add_option("type", list_type, "Filter by type");
    lst->add_option("--format", list_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    // register / import / export
    auto* reg_cmd = app.add_subcommand("register", "Register a custom palette");
    std::string reg_name, reg_params;
    reg_cmd->add_option("name", reg_name)->required();
    reg_cmd->add_option("params", reg_params, "JSON object with type and parameters")->required();

    auto* imp = app.add_subcommand("import", "Register every palette in a JSON file");
    std::string imp_file;
    imp->add_option("file", imp_file)->required();

    auto* exp = app.add_subcommand("export", "Print registered palettes as JSON");
    bool exp_all = false;
    exp->add_flag("--all", exp_all, "Include the built-in palettes");

    // spec
    auto* spec = app.add_subcommand("spec", "HCL and RGB spectrum of a palette");
    std::vector<std::string> spec_colors;
    bool spec_rgb = false;
    std::string spec_format = "svg", spec_out;
    spec->add_option("colors", spec_colors)->required();
    spec->add_flag("--rgb", spec_rgb, "Add the RGB panel");
    spec->add_option("--format", spec_format)->check(CLI::IsMember({"svg", "json"}));
    spec->add_option("-o,--output", spec_out);

    // swatch
    auto* sw = app.add_subcommand("swatch", "SVG swatch plot");
    std::vector<std::string> sw_items;
    int sw_n = 7;
    std::string sw_out;
    sw->add_option("items", sw_items,
                   "Palette names, LABEL=#hex,#hex,... rows, or @Heading to start a group")
        ->required();
    sw->add_option("-n", sw_n, "Colors per named palette")->check(CLI::Range(1, 1000));
    sw->add_option("-o,--output", sw_out);

    // cvd
    auto* cv = app.add_subcommand("cvd", "Emulate color vision deficiency");
    std::string cv_kind, cv_out;
    double cv_sev = 1;
    std::vector<std::string> cv_inputs;
    unsigned cv_threads = 0;
    cv->add_option("kind", cv_kind, "deutan, protan or tritan")->required();
    cv->add_option("severity", cv_sev, "Severity in [0,1]")->required();
    cv->add_option("inputs", cv_inputs, "Colors, or a single PNG file")->required();
    cv->add_option("-o,--output", cv_out, "Output PNG (default <stem>_<kind>.png)");
    cv->add_option("--threads", cv_threads, "Worker threads for PNG input (0 = auto)");

    // manip
    auto* mp = app.add_subcommand("manip", "Desaturate, lighten or darken colors");
    std::string mp_op, mp_method;
    double mp_amount = 0;
    bool mp_absolute = false;
    std::vector<std::string> mp_colors;
    mp->add_option("op", mp_op)->required()->check(CLI::IsMember({"desaturate", "lighten", "darken"}));
    mp->add_option("amount", mp_amount, "Amount in [0,1]")->required();
    mp->add_option("colors", mp_colors)->required();
    mp->add_option("--method", mp_method, "hcl, hls or combined")
        ->check(CLI::IsMember({"hcl", "hls", "combined"}));
    mp->add_flag("--absolute", mp_absolute, "Absolute instead of relative adjustment");

    // maxchroma
    auto* mc = app.add_subcommand("maxchroma", "Largest in-gamut chroma for hue and luminance");
    std::vector<double> mc_h, mc_l;
    mc->add_option("--hue,-H", mc_h)->required()->delimiter(',');
    mc->add_option("--luminance,-L", mc_l)->required()->delimiter(',');

    // convert
    auto* cvt = app.add_subcommand("convert", "Convert coordinates between color spaces");
    std::string cvt_from, cvt_to;
    std::vector<double> cvt_v;
    cvt->add_option("from", cvt_from)->required();
    cvt->add_option("to", cvt_to)->required();
    cvt->add_option("coords", cvt_v)->required()->expected(3);

    // serve
    auto* srv = app.add_subcommand("serve", "Run the HTTP JSON API");
    std::string srv_bind = "127.0.0.1", srv_static;
    int srv_port = 8080;
    srv->add_option("--bind", srv_bind);
    srv->add_option("--port", srv_port, "0 picks a free port")->check(CLI::Range(0, 65535));
    srv->add_option("--static", srv_static, "Directory served at /")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        hclkit::Registry reg = hclkit::builtin_registry();
        if (!registry_file.empty())
            hclkit::api::load_registry_file(reg, registry_file);
        hclkit::api::Service service(std::move(reg),
                                     registry_file.empty() ? std::nullopt
                                                           : std::optional<std::string>(registry_file));

        if (*gen) {
            json req{{"type", gen_type}, {"n", gen_n}, {"rev", gen_rev}};
            if (!gen_palette.empty())
                req["palette"] = gen_palette;
            for (const auto& [k, v] : gen_params)
                req[k] = v;
            if (gen_fixup)
                req["fixup"] = *gen_fixup;
            if (gen_alpha)
                req["alpha"] = *gen_alpha;
            json out = hclkit::api::generate(service.registry(), req);
            for (const auto& w : out["warnings"])
                std::cerr << "warning: " << w.get<std::string>() << "\n";
            if (gen_format == "json") {
                std::cout << out["colors"].dump() << "\n";
            } else {
                for (const auto& c : out["colors"])
                    std::cout << (c.is_null() ? std::string("NA") : c.get<std::string>()) << "\n";
            }
        } else if (*lst) {
            json out = hclkit::api::list(service.registry(), list_type);
            if (list_format == "json") {
                std::cout << out["palettes"].dump(2) << "\n";
            } else {
                for (const auto& p : out["palettes"])
                    std::cout << p["name"].get<std::string>() << "\t" << p["type"].get<std::string>() << "\t"
                              << p["source"].get<std::string>() << "\n";
            }
        } else if (*reg_cmd) {
            json req{{"name", reg_name}, {"params", parse_json_arg(reg_params, "params")}};
            std::cout << service.register_palette(req)["registered"].dump() << "\n";
        } else if (*imp) {
            json doc = parse_json_arg(read_file(imp_file), "file");
            const json& arr = doc.is_object() && doc.contains("palettes") ? doc["palettes"] : doc;
            if (!arr.is_array())
                throw hclkit::InvalidInput("expected an array of palette records", "file");
            for (const auto& rec : arr) {
                if (!rec.is_object())
                    throw hclkit::InvalidInput("palette record must be an object", "file");
                service.register_palette(json{{"name", rec.value("name", json())}, {"params", rec}});
            }
            std::cerr << "imported " << arr.size() << " palette(s)\n";
        } else if (*exp) {
            auto records = exp_all ? service.registry().list() : service.registry().registered();
            std::cout << hclkit::registry_to_json(records).dump(2) << "\n";
        } else if (*spec) {
            auto colors = split_colors(spec_colors);
            auto trace = hclkit::spectrum(colors);
            std::string text = spec_format == "json" ? hclkit::trace_to_json(trace).dump(2) + "\n"
                                                     : hclkit::spectrum_svg(trace, spec_rgb);
            write_output(spec_out, text);
        } else if (*sw) {
            std::vector<hclkit::SwatchGroup> groups;
            for (const auto& item : sw_items) {
                if (!item.empty() && item[0] == '@') {
                    groups.push_back({item.substr(1), {}});
                    continue;
                }
                if (groups.empty())
                    groups.push_back({"", {}});
                auto eq = item.find('=');
                if (eq != std::string::npos) {
                    groups.back().palettes.push_back(
                        {item.substr(0, eq), split_colors({item.substr(eq + 1)})});
                } else {
                    auto rec = service.registry().lookup(item);
                    auto res = hclkit::generate_colors(sw_n, rec.params);
                    groups.back().palettes.push_back({rec.name, res.hex()});
                }
            }
            write_output(sw_out, hclkit::swatch_svg(groups));
        } else if (*cv) {
            if (cv_inputs.size() == 1 && ends_with_png(cv_inputs[0])) {
                auto kind = hclkit::parse_cvd_kind(cv_kind);
                if (!kind)
                    throw hclkit::InvalidInput("kind must be one of deutan, protan, tritan", "kind");
                auto m = hclkit::cvd_matrix(*kind, cv_sev);
                auto img = hclkit::tools::read_png(cv_inputs[0]);
                hclkit::tools::map_cvd(img, m, cv_threads);
                fs::path in(cv_inputs[0]);
                std::string out = cv_out.empty()
                                      ? (in.parent_path() / (in.stem().string() + "_" + cv_kind + ".png")).string()
                                      : cv_out;
                hclkit::tools::write_png(out, img);
                std::cout << out << "\n";
            } else {
                json req{{"kind", cv_kind}, {"severity", cv_sev}, {"colors", split_colors(cv_inputs)}};
                json out = hclkit::api::cvd(req);
                for (const auto& c : out["colors"])
                    std::cout << c.get<std::string>() << "\n";
            }
        } else if (*mp) {
            auto colors = split_colors(mp_colors);
            hclkit::Adjustment adj = mp_absolute ? hclkit::Adjustment::absolute : hclkit::Adjustment::relative;
            auto space_of = [&](hclkit::LightenSpace fallback) {
                if (mp_method == "hcl")
                    return hclkit::LightenSpace::HCL;
                if (mp_method == "hls")
                    return hclkit::LightenSpace::HLS;
                if (mp_method == "combined")
                    return hclkit::LightenSpace::combined;
                return fallback;
            };
            if (mp_op == "desaturate")
                print_lines(hclkit::desaturate(colors, mp_amount));
            else if (mp_op == "lighten")
                print_lines(hclkit::lighten(colors, mp_amount, {space_of(hclkit::LightenSpace::HCL), adj}));
            else
                print_lines(hclkit::darken(colors, mp_amount, {space_of(hclkit::LightenSpace::combined), adj}));
        } else if (*mc) {
            for (double v : hclkit::max_chroma(mc_h, mc_l)) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.2f", v);
                std::cout << buf << "\n";
            }
        } else if (*cvt) {
            auto from = hclkit::parse_space(cvt_from);
            auto to = hclkit::parse_space(cvt_to);
            if (!from)
                throw hclkit::InvalidInput("unknown color space '" + cvt_from + "'", "from");
            if (!to)
                throw hclkit::InvalidInput("unknown color space '" + cvt_to + "'", "to");
            hclkit::Color c = hclkit::convert({*from, {cvt_v[0], cvt_v[1], cvt_v[2]}}, *to);
            char buf[96];
            std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f", c[0], c[1], c[2]);
            std::cout << buf << "\n";
        } else if (*srv) {
            httplib::Server server;
            if (!srv_static.empty() && !server.set_mount_point("/", srv_static))
                throw hclkit::tools::IoError("cannot serve " + srv_static);
            hclkit::tools::mount(server, service);
            int port = srv_port;
            if (port == 0) {
                port = server.bind_to_any_port(srv_bind);
            } else if (!server.bind_to_port(srv_bind, port)) {
                port = -1;
            }
            if (port < 0)
                throw hclkit::tools::IoError("cannot bind " + srv_bind + ":" + std::to_string(srv_port));
            std::cout << "listening on http://" << srv_bind << ":" << port << std::endl;
            if (!server.listen_after_bind())
                throw hclkit::tools::IoError("server stopped unexpectedly");
        }
    } catch (const hclkit::NotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const hclkit::InvalidInput& e) {
        std::cerr << "error: " << (e.field().empty() ? "" : e.field() + ": ") << e.what() << "\n";
        return usage;
    } catch (const hclkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const hclkit::tools::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    }
    return ok;
}
