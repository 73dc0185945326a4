#pragma once

#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hclkit/analysis.hpp"
#include "hclkit/cvd.hpp"
#include "hclkit/error.hpp"
#include "hclkit/jsonfwd.hpp"
#include "hclkit/manip.hpp"
#include "hclkit/palettes.hpp"
#include "hclkit/registry.hpp"

// JSON request handlers shared by the CLI and the HTTP server.
namespace hclkit::api {

struct Response {
    int status = 200;
    json body;
};

// Used when a request names a type but no palette.
inline std::string default_palette(std::string_view type)
{
    if (type == "qualitative")
        return "Dark 3";
    if (type == "diverging")
        return "Blue-Red";
    if (type == "divergingx")
        return "Geyser";
    return "Blues 2";
}

// "sequential" covers both sequential kinds.
inline std::string family(PaletteType t)
{
    return is_sequential(t) ? "sequential" : std::string(type_name(t));
}

namespace detail {

inline const json& field(const json& req, const char* name)
{
    if (!req.contains(name))
        throw InvalidInput(std::string("missing field ") + name, name);
    return req[name];
}

inline std::vector<std::string> string_list(const json& req, const char* name)
{
    const json& v = field(req, name);
    if (!v.is_array())
        throw InvalidInput(std::string(name) + " must be an array of strings", name);
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string())
            throw InvalidInput(std::string(name) + " must be an array of strings", name);
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline double number(const json& req, const char* name, std::optional<double> fallback = std::nullopt)
{
    if (!req.contains(name) || req[name].is_null()) {
        if (fallback)
            return *fallback;
        throw InvalidInput(std::string("missing field ") + name, name);
    }
    if (!req[name].is_number())
        throw InvalidInput(std::string(name) + " must be a number", name);
    return req[name].get<double>();
}

inline bool flag(const json& req, const char* name, bool fallback)
{
    if (!req.contains(name) || req[name].is_null())
        return fallback;
    if (!req[name].is_boolean())
        throw InvalidInput(std::string(name) + " must be a boolean", name);
    return req[name].get<bool>();
}

inline int count(const json& req, const char* name, std::optional<int> fallback = std::nullopt)
{
    if (fallback && (!req.contains(name) || req[name].is_null()))
        return *fallback;
    const json& v = field(req, name);
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 100000)
        throw InvalidInput(std::string(name) + " must be an integer in [0,100000]", name);
    return v.get<int>();
}

} // namespace detail

// Resolves name and explicit parameters into one record; explicit fields win.
inline PaletteParams resolve_params(const Registry& reg, const json& req)
{
    std::optional<std::string> type;
    if (req.contains("type")) {
        if (!req["type"].is_string())
            throw InvalidInput("type must be a string", "type");
        type = req["type"].get<std::string>();
        if (!parse_type(*type))
            throw InvalidInput("unknown palette type '" + *type + "'", "type");
    }
    std::string name;
    if (req.contains("palette") && !req["palette"].is_null()) {
        if (!req["palette"].is_string())
            throw InvalidInput("palette must be a string", "palette");
        name = req["palette"].get<std::string>();
    } else if (type) {
        name = default_palette(family(*parse_type(*type)));
    } else {
        throw InvalidInput("either type or palette is required", "type");
    }
    PaletteRecord rec = reg.lookup(name);
    if (type) {
        PaletteType want = *parse_type(*type);
        if (family(want) != family(rec.params.type))
            throw InvalidInput("palette '" + rec.name + "' is " + std::string(type_name(rec.params.type)) +
                                   ", not " + *type,
                               "palette");
    }
    PaletteParams over = params_from_json(req, rec.params.type);
    PaletteParams p = merge(rec.params, over);
    p.fixup = detail::flag(req, "fixup", rec.params.fixup);
    if (is_sequential(p.type))
        p.type = p.h2 && p.h1 && *p.h2 != *p.h1 ? PaletteType::sequential_multi
                                                 : PaletteType::sequential_single;
    return p;
}

inline json generate(const Registry& reg, const json& req)
{
    PaletteParams p = resolve_params(reg, req);
    int n = detail::count(req, "n", 7);
    Options opt;
    opt.rev = detail::flag(req, "rev", false);
    if (req.contains("alpha") && !req["alpha"].is_null())
        opt.alpha = detail::number(req, "alpha");
    PaletteResult r = finish(generate_colors(n, p), opt);

    json out;
    json colors = json::array();
    std::vector<std::string> present;
    std::vector<bool> fired;
    bool missing = false;
    for (const auto& s : r.colors) {
        if (s.hex.empty()) {
            colors.push_back(nullptr);
            missing = true;
        } else {
            colors.push_back(s.hex);
            present.push_back(s.hex);
        }
        fired.push_back(s.fixup_fired);
    }
    out["colors"] = std::move(colors);
    out["fixup_fired"] = fired;
    out["params"] = params_to_json(p);
    out["warnings"] = r.warnings;
    if (!missing && !present.empty())
        out["trace"] = trace_to_json(spectrum(present, fired));
    else
        out["trace"] = nullptr;
    return out;
}

inline json list(const Registry& reg, const std::string& type_filter = {})
{
    if (!type_filter.empty() && type_filter != "sequential" && !parse_type(type_filter))
        throw InvalidInput("unknown palette type '" + type_filter + "'", "type");
    json arr = json::array();
    for (const auto& r : reg.list(type_filter)) {
        json j = record_to_json(r);
        if (!r.provenance.empty())
            j["provenance"] = r.provenance;
        arr.push_back(std::move(j));
    }
    return json{{"palettes", std::move(arr)}};
}

inline json cvd(const json& req)
{
    auto colors = detail::string_list(req, "colors");
    const json& k = detail::field(req, "kind");
    if (!k.is_string() || !parse_cvd_kind(k.get<std::string>()))
        throw InvalidInput("kind must be one of deutan, protan, tritan", "kind");
    double severity = detail::number(req, "severity", 1.0);
    CvdKind kind = *parse_cvd_kind(k.get<std::string>());
    auto m = cvd_matrix(kind, severity);
    json out;
    out["colors"] = simulate_cvd(colors, m);
    out["kind"] = std::string(cvd_name(kind));
    out["severity"] = severity;
    out["matrix"] = m.m;
    return out;
}

inline json analyze(const json& req)
{
    auto colors = detail::string_list(req, "colors");
    SpectrumTrace t = spectrum(colors);
    json out;
    out["trace"] = trace_to_json(t);
    GuessType type;
    if (req.contains("type") && !req["type"].is_null()) {
        if (!req["type"].is_string() || !parse_guess(req["type"].get<std::string>()))
            throw InvalidInput("type must be qualitative, sequential or diverging", "type");
        type = *parse_guess(req["type"].get<std::string>());
        out["inferred"] = nullptr;
    } else {
        if (t.n < 3)
            throw InvalidInput("at least 3 colors are needed to infer the palette type; pass type explicitly",
                               "colors");
        TypeGuess g = infer_type(t);
        type = g.type;
        out["inferred"] = guess_to_json(g);
    }
    out["type"] = std::string(guess_name(type));
    out["projection"] = projection_to_json(hcl_projection(colors, type));
    return out;
}

// Color picker: an in-gamut plane slice plus an optional snapped query point.
inline json pick(const json& req)
{
    std::string plane = "hue-chroma";
    if (req.contains("plane")) {
        if (!req["plane"].is_string())
            throw InvalidInput("plane must be hue-chroma or chroma-luminance", "plane");
        plane = req["plane"].get<std::string>();
    }
    auto steps = [&](const char* name, int fallback) {
        if (!req.contains(name))
            return fallback;
        const json& v = req[name];
        if (!v.is_number_integer() || v.get<int>() < 2 || v.get<int>() > 721)
            throw InvalidInput(std::string(name) + " must be an integer in [2,721]", name);
        return v.get<int>();
    };
    json out;
    if (plane == "hue-chroma") {
        double l = detail::number(req, "l");
        if (!(l >= 0 && l <= 100))
            throw InvalidInput("l must be in [0,100]", "l");
        auto g = hue_chroma_slice(l, steps("x_steps", 73), steps("y_steps", 37));
        out["grid"] = grid_to_json(g);
        out["l"] = l;
        out["boundary"] = max_chroma(g.xs, {l});
    } else if (plane == "chroma-luminance") {
        double h = detail::number(req, "h");
        auto g = chroma_luminance_slice(h, steps("x_steps", 37), steps("y_steps", 51));
        out["grid"] = grid_to_json(g);
        out["h"] = h;
        out["boundary"] = max_chroma({h}, g.ys);
    } else {
        throw InvalidInput("plane must be hue-chroma or chroma-luminance", "plane");
    }

    if (req.contains("hex") && !req["hex"].is_null()) {
        if (!req["hex"].is_string())
            throw InvalidInput("hex must be a string", "hex");
        Rgba c = parse_color(req["hex"].get<std::string>());
        Color p = convert(c.color, Space::polarLUV);
        out["selected"] = {{"l", p[0]}, {"c", p[1]}, {"h", p[2]}, {"hex", to_hex(c)}, {"snapped", false}};
    } else if (req.contains("query") && !req["query"].is_null()) {
        const json& q = req["query"];
        if (!q.is_object())
            throw InvalidInput("query must be an object with h, c, l", "query");
        double h = detail::number(q, "h"), c = detail::number(q, "c"), l = detail::number(q, "l");
        if (!(l >= 0 && l <= 100))
            throw InvalidInput("l must be in [0,100]", "query.l");
        if (!(c >= 0))
            throw InvalidInput("c must be non-negative", "query.c");
        double mc = max_chroma(h, l);
        bool snapped = c > mc;
        double cc = snapped ? mc : c;
        out["selected"] = {{"l", l},
                           {"c", cc},
                           {"h", hclkit::detail::wrap_hue(h)},
                           {"hex", *hex_encode(polar_luv(l, cc, h), true)},
                           {"snapped", snapped}};
    }
    return out;
}

inline PaletteRecord parse_registration(const json& req)
{
    const json& name = detail::field(req, "name");
    if (!name.is_string())
        throw InvalidInput("name must be a string", "name");
    const json& params = req.contains("params") ? req["params"] : req;
    return {name.get<std::string>(), params_from_json(params), "registered", {}};
}

inline void write_registry_file(const Registry& reg, const std::string& path)
{
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write registry file " + path);
    f << registry_to_json(reg.registered()).dump(2) << "\n";
    if (!f)
        throw std::runtime_error("cannot write registry file " + path);
}

inline void load_registry_file(Registry& reg, const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        return; // created on first registration
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("registry file is not valid JSON: ") + e.what(), "registry");
    }
    reg.load_json(doc, "registered");
}

inline json error_body(const std::string& kind, const std::string& message)
{
    return json{{"error", kind}, {"message", message}};
}

// Stateful front end: owns the registry and the optional backing file.
class Service {
public:
    explicit Service(Registry reg, std::optional<std::string> registry_file = std::nullopt)
        : reg_(std::move(reg)), file_(std::move(registry_file))
    {
    }

    Registry& registry() { return reg_; }

    json register_palette(const json& req)
    {
        PaletteRecord r = parse_registration(req);
        std::lock_guard lock(write_mu_);
        reg_.register_palette(r.name, r.params);
        if (file_)
            write_registry_file(reg_, *file_);
        return json{{"registered", record_to_json(*reg_.find(r.name))}};
    }

    // Routes a request; every failure becomes a JSON error body.
    Response handle(const std::string& method, const std::string& path, const std::string& body,
                    const std::string& type_filter = {})
    {
        try {
            if (method == "GET" && path == "/palettes")
                return {200, list(reg_, type_filter)};
            if (method == "GET" && path.rfind("/palettes/", 0) == 0) {
                auto r = reg_.lookup(path.substr(10));
                json j = record_to_json(r);
                if (!r.provenance.empty())
                    j["provenance"] = r.provenance;
                return {200, j};
            }
            static const char* posts[] = {"/generate", "/cvd", "/analyze", "/pick", "/register"};
            bool known = false;
            for (const char* p : posts)
                known = known || path == p;
            if (!known)
                return {404, error_body("not_found", "no route for " + path)};
            if (method != "POST")
                return {405, error_body("method_not_allowed", path + " accepts POST")};
            json req;
            try {
                req = json::parse(body.empty() ? "{}" : body);
            } catch (const json::parse_error& e) {
                return validation("body", std::string("invalid JSON: ") + e.what());
            }
            if (!req.is_object())
                return validation("body", "request body must be a JSON object");
            if (path == "/generate")
                return {200, generate(reg_, req)};
            if (path == "/cvd")
                return {200, cvd(req)};
            if (path == "/analyze")
                return {200, analyze(req)};
            if (path == "/pick")
                return {200, pick(req)};
            return {200, register_palette(req)};
        } catch (const InvalidInput& e) {
            return validation(e.field(), e.what());
        } catch (const ParseError& e) {
            return validation("colors", e.what());
        } catch (const InsufficientData& e) {
            return validation("colors", e.what());
        } catch (const NotFound& e) {
            json b = error_body("not_found", e.what());
            b["suggestions"] = e.suggestions();
            return {404, b};
        } catch (const std::exception& e) {
            return {500, error_body("internal", e.what())};
        }
    }

private:
    static Response validation(const std::string& field, const std::string& message)
    {
        json b = error_body("validation", message);
        b["fields"] = json::array({json{{"field", field}, {"message", message}}});
        return {400, b};
    }

    Registry reg_;
    std::optional<std::string> file_;
    std::mutex write_mu_;
};

} // namespace hclkit::api
