#pragma once

#include <algorithm>
#include <cctype>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "hclkit/embedded_data.hpp"
#include "hclkit/error.hpp"
#include "hclkit/jsonfwd.hpp"
#include "hclkit/palettes.hpp"

namespace hclkit {

struct PaletteRecord {
    std::string name;
    PaletteParams params;
    std::string source = "builtin"; // "builtin" or "registered"
    std::string provenance;
};

// Lowercase alphanumerics only: "set2" matches "Set 2".
inline std::string normalize_name(std::string_view s)
{
    std::string out;
    for (char ch : s)
        if (std::isalnum(static_cast<unsigned char>(ch)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

inline std::size_t edit_distance(std::string_view a, std::string_view b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1])});
            diag = up;
        }
    }
    return row[b.size()];
}

inline json params_to_json(const PaletteParams& p)
{
    json j = json::object();
    j["type"] = std::string(type_name(p.type));
    for (const auto& f : param_fields)
        if (p.*f.member)
            j[std::string(f.name)] = *(p.*f.member);
    j["fixup"] = p.fixup;
    return j;
}

// Reads the parameter fields of a registry record; unknown keys are ignored.
inline PaletteParams params_from_json(const json& j, std::optional<PaletteType> default_type = std::nullopt)
{
    if (!j.is_object())
        throw InvalidInput("palette parameters must be a JSON object", "params");
    PaletteParams p;
    bool generic_sequential = false;
    if (j.contains("type")) {
        if (!j["type"].is_string())
            throw InvalidInput("type must be a string", "type");
        generic_sequential = j["type"].get<std::string>() == "sequential";
        auto t = parse_type(j["type"].get<std::string>());
        if (!t)
            throw InvalidInput("unknown palette type '" + j["type"].get<std::string>() + "'", "type");
        p.type = *t;
    } else if (default_type) {
        p.type = *default_type;
    } else {
        throw InvalidInput("missing palette type", "type");
    }
    for (const auto& f : param_fields) {
        std::string key(f.name);
        if (!j.contains(key) || j[key].is_null())
            continue;
        if (!j[key].is_number())
            throw InvalidInput(key + " must be a number", key);
        p.*f.member = j[key].get<double>();
    }
    if (j.contains("fixup")) {
        if (!j["fixup"].is_boolean())
            throw InvalidInput("fixup must be a boolean", "fixup");
        p.fixup = j["fixup"].get<bool>();
    }
    // A plain "sequential" is multi-hue only when the hue actually moves.
    if (generic_sequential)
        p.type = p.h2 && p.h1 && *p.h2 != *p.h1 ? PaletteType::sequential_multi
                                                 : PaletteType::sequential_single;
    return p;
}

inline json record_to_json(const PaletteRecord& r)
{
    json j = params_to_json(r.params);
    j["name"] = r.name;
    j["source"] = r.source;
    return j;
}

class Registry {
public:
    Registry() = default;
    Registry(const Registry& o) : records_(o.snapshot()) {}
    Registry& operator=(const Registry& o)
    {
        auto copy = o.snapshot();
        std::unique_lock lock(mu_);
        records_ = std::move(copy);
        return *this;
    }

    // Loads {"palettes":[...]} or a bare array of records.
    void load_json(const json& doc, const std::string& source)
    {
        const json& arr = doc.is_object() && doc.contains("palettes") ? doc["palettes"] : doc;
        if (!arr.is_array())
            throw InvalidInput("registry document must be an array of palette records", "palettes");
        for (const auto& rec : arr) {
            if (!rec.is_object() || !rec.contains("name") || !rec["name"].is_string())
                throw InvalidInput("palette record needs a string name", "name");
            PaletteRecord r{rec["name"].get<std::string>(), params_from_json(rec), source, {}};
            if (rec.contains("provenance") && rec["provenance"].is_string())
                r.provenance = rec["provenance"].get<std::string>();
            put(std::move(r));
        }
    }

    std::optional<PaletteRecord> find(std::string_view name) const
    {
        std::string key = normalize_name(name);
        std::shared_lock lock(mu_);
        for (const auto& r : records_)
            if (normalize_name(r.name) == key)
                return r;
        return std::nullopt;
    }

    PaletteRecord lookup(std::string_view name) const
    {
        if (auto r = find(name))
            return *r;
        auto near = nearest(name, 3);
        std::string msg = "unknown palette '" + std::string(name) + "'";
        if (!near.empty()) {
            msg += "; did you mean ";
            for (std::size_t i = 0; i < near.size(); ++i)
                msg += (i ? ", '" : "'") + near[i] + "'";
            msg += "?";
        }
        throw NotFound(msg, near);
    }

    std::vector<std::string> nearest(std::string_view name, std::size_t k) const
    {
        std::string key = normalize_name(name);
        std::vector<std::pair<std::size_t, std::string>> scored;
        {
            std::shared_lock lock(mu_);
            for (const auto& r : records_)
                scored.emplace_back(edit_distance(key, normalize_name(r.name)), r.name);
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::string> out;
        for (std::size_t i = 0; i < scored.size() && i < k; ++i)
            out.push_back(scored[i].second);
        return out;
    }

    // Grouped by type (qualitative, sequential single, multi, diverging, divergingx).
    std::vector<PaletteRecord> list(std::string_view type_filter = {}) const
    {
        std::vector<PaletteRecord> out;
        {
            std::shared_lock lock(mu_);
            for (const auto& r : records_)
                if (type_matches(r.params.type, type_filter))
                    out.push_back(r);
        }
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return static_cast<int>(a.params.type) < static_cast<int>(b.params.type);
        });
        return out;
    }

    // Overwrites an existing record with the same normalized name.
    void register_palette(const std::string& name, const PaletteParams& params)
    {
        if (normalize_name(name).empty())
            throw InvalidInput("palette name must contain a letter or digit", "name");
        detail::validate_params(params);
        put({name, params, "registered", {}});
    }

    std::vector<PaletteRecord> registered() const
    {
        std::vector<PaletteRecord> out;
        std::shared_lock lock(mu_);
        for (const auto& r : records_)
            if (r.source == "registered")
                out.push_back(r);
        return out;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mu_);
        return records_.size();
    }

private:
    std::vector<PaletteRecord> snapshot() const
    {
        std::shared_lock lock(mu_);
        return records_;
    }

    void put(PaletteRecord r)
    {
        std::string key = normalize_name(r.name);
        std::unique_lock lock(mu_);
        for (auto& old : records_) {
            if (normalize_name(old.name) == key) {
                old = std::move(r);
                return;
            }
        }
        records_.push_back(std::move(r));
    }

    mutable std::shared_mutex mu_;
    std::vector<PaletteRecord> records_;
};

inline json registry_to_json(const std::vector<PaletteRecord>& records)
{
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back(record_to_json(r));
    return arr;
}

// A fresh registry holding the shipped palettes.
inline Registry builtin_registry()
{
    static const json doc = json::parse(data::palettes_json);
    Registry r;
    r.load_json(doc, "builtin");
    return r;
}

} // namespace hclkit
