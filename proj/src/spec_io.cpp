#include "framekit/spec_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "framekit/errors.hpp"

namespace framekit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kExampleA = R"({
  "name": "example-2.1a",
  "space": "l1",
  "vectors": {
    "prefix": [ [[1, "1/2"]], [[1, "1/2"]] ],
    "tail": { "kind": "shifted_canonical", "offset_index": -1,
              "scale": { "kind": "const", "k": "1/1" }, "offset_vector": [] }
  },
  "functionals": {
    "prefix": [ [[1, "1/1"]], [[1, "1/1"]] ],
    "tail": { "kind": "shifted_canonical", "offset_index": -1,
              "scale": { "kind": "const", "k": "1/1" }, "offset_vector": [] }
  }
})";

// x_1 = e_1 with f_1 = 0, followed by x_n = e_{n-1}, f_n = xi_{n-1} for n >= 2.
constexpr std::string_view kExampleB = R"({
  "name": "example-2.1b",
  "space": "l1",
  "vectors": {
    "prefix": [ [[1, "1/1"]] ],
    "tail": { "kind": "shifted_canonical", "offset_index": -1,
              "scale": { "kind": "const", "k": "1/1" }, "offset_vector": [] }
  },
  "functionals": {
    "prefix": [ [] ],
    "tail": { "kind": "shifted_canonical", "offset_index": -1,
              "scale": { "kind": "const", "k": "1/1" }, "offset_vector": [] }
  }
})";

constexpr std::string_view kLinearScale = R"({
  "name": "remark-3.2",
  "space": "l1",
  "vectors": {
    "prefix": [],
    "tail": { "kind": "shifted_canonical", "offset_index": 0,
              "scale": { "kind": "linear", "k": "1/1" }, "offset_vector": [] }
  },
  "functionals": {
    "prefix": [],
    "tail": { "kind": "shifted_canonical", "offset_index": 0,
              "scale": { "kind": "inverse", "k": "1/1" }, "offset_vector": [] }
  }
})";

constexpr std::string_view kCanonical = R"({
  "name": "canonical",
  "space": "l1",
  "vectors": {
    "prefix": [],
    "tail": { "kind": "shifted_canonical", "offset_index": 0,
              "scale": { "kind": "const", "k": "1/1" }, "offset_vector": [] }
  },
  "functionals": {
    "prefix": [],
    "tail": { "kind": "shifted_canonical", "offset_index": 0,
              "scale": { "kind": "const", "k": "1/1" }, "offset_vector": [] }
  }
})";

struct Builtin {
    std::string_view name;
    std::string_view text;
};

constexpr std::array<Builtin, 4> kBuiltins{{
    {"example-2.1a", kExampleA},
    {"example-2.1b", kExampleB},
    {"remark-3.2", kLinearScale},
    {"canonical", kCanonical},
}};

const json& require(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw ValidationError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(path + "/" + key, "missing field");
    return *it;
}

Index index_from_json(const json& value, const std::string& field) {
    if (!value.is_number_integer()) throw ValidationError(field, "expected an integer");
    return value.get<Index>();
}

FinVec finvec_from_json(const json& value, const std::string& field) {
    if (!value.is_array()) throw ValidationError(field, "expected an array of [index, value] pairs");
    std::vector<FinVec::Entry> entries;
    Index previous = 0;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string entry_field = field + "/" + std::to_string(i);
        const json& e = value[i];
        if (!e.is_array() || e.size() != 2) throw ValidationError(entry_field, "expected [index, value]");
        const Index index = index_from_json(e[0], entry_field + "/0");
        if (index < 1) throw ValidationError(entry_field + "/0", "index must be >= 1");
        if (index <= previous) throw ValidationError(entry_field + "/0", "indices must be strictly increasing");
        Rational v = rational_from_json(e[1], entry_field + "/1");
        if (v.is_zero()) throw ValidationError(entry_field + "/1", "zero values are not stored");
        previous = index;
        entries.emplace_back(index, std::move(v));
    }
    return FinVec(std::move(entries));
}

ordered_json finvec_to_json(const FinVec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& [i, value] : v.entries()) out.push_back(ordered_json::array({i, value.to_string()}));
    return out;
}

TailRule tail_from_json(const json& value, const std::string& path) {
    const std::string kind = [&] {
        const json& k = require(value, "kind", path);
        if (!k.is_string()) throw ValidationError(path + "/kind", "expected a string");
        return k.get<std::string>();
    }();
    FinVec offset;
    if (auto it = value.find("offset_vector"); it != value.end()) {
        offset = finvec_from_json(*it, path + "/offset_vector");
    }
    if (kind == "zero") return TailRule::zero(std::move(offset));
    if (kind != "shifted_canonical") {
        throw ValidationError(path + "/kind", "expected \"shifted_canonical\" or \"zero\", got \"" + kind + "\"");
    }
    const Index b = index_from_json(require(value, "offset_index", path), path + "/offset_index");
    const json& scale = require(value, "scale", path);
    const json& scale_kind = require(scale, "kind", path + "/scale");
    if (!scale_kind.is_string()) throw ValidationError(path + "/scale/kind", "expected a string");
    const std::string sk = scale_kind.get<std::string>();
    Rational k = rational_from_json(require(scale, "k", path + "/scale"), path + "/scale/k");
    ScaleExpr::Kind kind_enum;
    if (sk == "const") {
        kind_enum = ScaleExpr::Kind::Const;
    } else if (sk == "linear") {
        kind_enum = ScaleExpr::Kind::Linear;
    } else if (sk == "inverse") {
        kind_enum = ScaleExpr::Kind::Inverse;
    } else {
        throw ValidationError(path + "/scale/kind", "expected const, linear or inverse, got \"" + sk + "\"");
    }
    if (k.is_zero()) throw ValidationError(path + "/scale/k", "scale must be non-zero (use the zero tail rule)");
    return TailRule::shifted_canonical(b, ScaleExpr(kind_enum, std::move(k)), std::move(offset));
}

template <typename Family>
Family family_from_json(const json& value, const std::string& path) {
    const json& prefix_json = require(value, "prefix", path);
    if (!prefix_json.is_array()) throw ValidationError(path + "/prefix", "expected an array of vectors");
    std::vector<FinVec> prefix;
    for (std::size_t i = 0; i < prefix_json.size(); ++i) {
        prefix.push_back(finvec_from_json(prefix_json[i], path + "/prefix/" + std::to_string(i)));
    }
    TailRule tail = tail_from_json(require(value, "tail", path), path + "/tail");
    try {
        return Family(std::move(prefix), std::move(tail));
    } catch (const ValidationError& e) {
        throw ValidationError(path + "/" + e.field(), e.message());
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

Rational rational_from_json(const json& value, const std::string& field) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (!value.is_string()) throw ValidationError(field, "expected a rational string \"p/q\" or an integer");
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const std::exception& e) {
        throw ValidationError(field, e.what());
    }
}

json rational_to_json(const Rational& r) { return r.to_string(); }

ordered_json family_to_json(const RuleFamily& family) {
    ordered_json prefix = ordered_json::array();
    for (const auto& v : family.prefix()) prefix.push_back(finvec_to_json(v));
    ordered_json tail;
    const TailRule& t = family.tail();
    if (t.is_zero_rule()) {
        tail["kind"] = "zero";
    } else {
        tail["kind"] = "shifted_canonical";
        tail["offset_index"] = t.index_offset;
        tail["scale"] = {{"kind", std::string(to_string(t.scale.kind()))}, {"k", t.scale.k().to_string()}};
    }
    tail["offset_vector"] = finvec_to_json(t.offset);
    ordered_json out;
    out["prefix"] = std::move(prefix);
    out["tail"] = std::move(tail);
    return out;
}

FrameSpec parse_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        throw ParseError(line, column, e.what());
    }
    if (!doc.is_object()) throw ValidationError("", "spec must be a JSON object");

    FrameSpec spec;
    const json& name = require(doc, "name", "");
    if (!name.is_string()) throw ValidationError("/name", "expected a string");
    spec.name = name.get<std::string>();

    const json& space = require(doc, "space", "");
    if (!space.is_string()) throw ValidationError("/space", "expected \"l1\" or \"c0\"");
    const auto parsed_space = parse_space(space.get<std::string>());
    if (!parsed_space) throw ValidationError("/space", "expected \"l1\" or \"c0\", got \"" + space.get<std::string>() + "\"");
    spec.frame.space = *parsed_space;

    spec.frame.vectors = family_from_json<VectorFamily>(require(doc, "vectors", ""), "/vectors");
    spec.frame.functionals = family_from_json<FunctionalFamily>(require(doc, "functionals", ""), "/functionals");
    return spec;
}

std::string serialize_spec(const FrameSpec& spec) {
    ordered_json doc;
    doc["name"] = spec.name;
    doc["space"] = std::string(to_string(spec.frame.space));
    doc["vectors"] = family_to_json(spec.frame.vectors);
    doc["functionals"] = family_to_json(spec.frame.functionals);
    return doc.dump(2) + "\n";
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& b : kBuiltins) out.emplace_back(b.name);
    return out;
}

std::optional<std::string_view> builtin_spec_text(std::string_view name) {
    for (const auto& b : kBuiltins) {
        if (b.name == name) return b.text;
    }
    return std::nullopt;
}

FrameSpec builtin_spec(std::string_view name) {
    const auto text = builtin_spec_text(name);
    if (!text) throw ValidationError("name", "unknown builtin \"" + std::string(name) + "\"");
    return parse_spec(*text);
}

FrameSpec load_spec(const std::string& name_or_path) {
    if (auto text = builtin_spec_text(name_or_path)) return parse_spec(*text);
    std::ifstream in(name_or_path);
    if (!in) throw ValidationError("spec", "not a builtin name and cannot open file \"" + name_or_path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

FinVec parse_finvec_literal(std::string_view text) {
    std::vector<FinVec::Entry> entries;
    std::size_t start = 0;
    std::size_t item = 0;
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    if (trimmed(text).empty()) return {};
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view part = trimmed(text.substr(start, end - start));
        const std::string field = "finvec[" + std::to_string(item) + "]";
        const auto colon = part.find(':');
        if (colon == std::string_view::npos) throw ValidationError(field, "expected index:value, got \"" + std::string(part) + "\"");
        const std::string index_text(trimmed(part.substr(0, colon)));
        Index index = 0;
        try {
            std::size_t used = 0;
            index = std::stoll(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument(index_text);
        } catch (const std::exception&) {
            throw ValidationError(field, "malformed index \"" + index_text + "\"");
        }
        Rational value;
        try {
            value = Rational::parse(part.substr(colon + 1));
        } catch (const std::exception& e) {
            throw ValidationError(field, e.what());
        }
        entries.emplace_back(index, std::move(value));
        start = end + 1;
        ++item;
    }
    // Zero values are dropped; ordering and uniqueness are enforced.
    std::vector<FinVec::Entry> kept;
    for (auto& e : entries) {
        if (!kept.empty() && e.first <= kept.back().first) {
            throw ValidationError("finvec", "indices must be strictly increasing");
        }
        if (e.first < 1) throw ValidationError("finvec", "index must be >= 1");
        kept.push_back(std::move(e));
    }
    std::erase_if(kept, [](const FinVec::Entry& e) { return e.second.is_zero(); });
    return FinVec(std::move(kept));
}

std::string format_finvec_literal(const FinVec& v) {
    std::string out;
    for (const auto& [i, value] : v.entries()) {
        if (!out.empty()) out += ",";
        out += std::to_string(i) + ":" + value.to_short_string();
    }
    return out;
}

}  // namespace framekit
