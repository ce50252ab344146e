#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/errors.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/named_graphs.hpp"

namespace symbreak {

// One expected-values row of a corpus manifest. Exactly one of graph6,
// family or named selects the graph; the optional fields are diffed against
// computed values.
struct ManifestEntry {
    std::string name;
    std::optional<std::string> graph6_text;
    std::optional<std::string> family;
    std::optional<std::string> named;
    std::vector<long long> params;
    std::optional<long long> det;
    std::optional<long long> det_prime;
    std::optional<long long> aut_order;
    std::optional<bool> efi;
    std::string source;  // free-text tag naming the formula or construction
};

namespace detail {

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Cuts a trailing comment, respecting double-quoted strings.
inline std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

inline long long parse_integer(std::string_view v, std::size_t offset) {
    if (v.empty()) throw ParseError("expected integer", offset);
    std::size_t i = v[0] == '-' ? 1 : 0;
    if (i == v.size()) throw ParseError("expected integer", offset);
    long long out = 0;
    bool negative = v[0] == '-';
    for (; i < v.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(v[i])))
            throw ParseError("expected integer", offset + i);
        out = out * 10 + (v[i] - '0');
    }
    return negative ? -out : out;
}

}  // namespace detail

// Parses the TOML subset used by corpus manifests: [[graph]] table headers,
// `key = value` pairs with string, integer, boolean and integer-array
// values, comments and blank lines.
inline std::vector<ManifestEntry> parse_manifest(std::string_view text) {
    std::vector<ManifestEntry> entries;
    std::size_t line_start = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        line_start = pos;
        pos = eol + 1;

        std::string_view line = detail::strip(detail::strip_comment(raw));
        if (line.empty()) {
            if (eol == text.size()) break;
            continue;
        }

        if (line == "[[graph]]") {
            entries.emplace_back();
            if (eol == text.size()) break;
            continue;
        }
        if (line.front() == '[')
            throw ParseError("unknown table header", line_start);
        if (entries.empty())
            throw ParseError("key outside [[graph]] table", line_start);

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key = value", line_start);
        std::string key(detail::strip(line.substr(0, eq)));
        std::string_view value = detail::strip(line.substr(eq + 1));
        std::size_t value_offset = line_start;
        ManifestEntry& entry = entries.back();

        if (value.empty()) throw ParseError("empty value", value_offset);

        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                throw ParseError("unterminated string", value_offset);
            std::string text_value(value.substr(1, value.size() - 2));
            if (key == "name") entry.name = text_value;
            else if (key == "graph6") entry.graph6_text = text_value;
            else if (key == "family") entry.family = text_value;
            else if (key == "named") entry.named = text_value;
            else if (key == "source") entry.source = text_value;
            else throw ParseError("unknown string key '" + key + "'", line_start);
        } else if (value.front() == '[') {
            if (value.back() != ']') throw ParseError("unterminated array", value_offset);
            if (key != "params") throw ParseError("unknown array key '" + key + "'", line_start);
            std::string_view body = value.substr(1, value.size() - 2);
            entry.params.clear();
            while (true) {
                body = detail::strip(body);
                if (body.empty()) break;
                std::size_t comma = body.find(',');
                std::string_view item =
                    comma == std::string_view::npos ? body : body.substr(0, comma);
                entry.params.push_back(detail::parse_integer(detail::strip(item), value_offset));
                if (comma == std::string_view::npos) break;
                body = body.substr(comma + 1);
            }
        } else if (value == "true" || value == "false") {
            bool b = value == "true";
            if (key == "efi") entry.efi = b;
            else throw ParseError("unknown boolean key '" + key + "'", line_start);
        } else {
            long long v = detail::parse_integer(value, value_offset);
            if (key == "det") entry.det = v;
            else if (key == "det_prime") entry.det_prime = v;
            else if (key == "aut_order") entry.aut_order = v;
            else throw ParseError("unknown integer key '" + key + "'", line_start);
        }
        if (eol == text.size()) break;
    }
    return entries;
}

// Materializes the graph an entry describes.
inline Graph manifest_graph(const ManifestEntry& entry) {
    int sources = 0;
    if (entry.graph6_text) ++sources;
    if (entry.family) ++sources;
    if (entry.named) ++sources;
    if (sources != 1)
        throw InvalidArgument("manifest entry '" + entry.name +
                              "' needs exactly one of graph6/family/named");

    if (entry.graph6_text) return parse_graph6(*entry.graph6_text).with_name(entry.name);

    if (entry.named) {
        const std::string& id = *entry.named;
        NamedGraphId named_id;
        if (id == "G1") named_id = NamedGraphId::G1;
        else if (id == "G2") named_id = NamedGraphId::G2;
        else if (id == "G3") named_id = NamedGraphId::G3;
        else if (id == "G4") named_id = NamedGraphId::G4;
        else if (id == "EnvelopeH") named_id = NamedGraphId::EnvelopeH;
        else if (id == "K4MinusE") named_id = NamedGraphId::K4MinusE;
        else throw InvalidArgument("unknown named graph '" + id + "'");
        return named_graph(named_id);
    }

    const std::string& fam = *entry.family;
    const auto& p = entry.params;
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw InvalidArgument("family '" + fam + "' needs " + std::to_string(k) +
                                  " parameter(s)");
    };
    if (fam == "path") { need(1); return path_graph(static_cast<int>(p[0])); }
    if (fam == "cycle") { need(1); return cycle_graph(static_cast<int>(p[0])); }
    if (fam == "complete") { need(1); return complete_graph(static_cast<int>(p[0])); }
    if (fam == "complete_bipartite") {
        need(2);
        return complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (fam == "star") { need(1); return star_graph(static_cast<int>(p[0])); }
    if (fam == "empty") { need(1); return empty_graph(static_cast<int>(p[0])); }
    if (fam == "hypercube") { need(1); return hypercube(static_cast<int>(p[0])); }
    if (fam == "join_nk") {
        need(1);
        int n = static_cast<int>(p[0]);
        return join(empty_graph(n + 1), complete_graph(n + 1));
    }
    throw InvalidArgument("unknown family '" + fam + "'");
}

}  // namespace symbreak
