#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "framekit/frame.hpp"

namespace framekit {

/// A named frame as read from a JSON spec file.
struct FrameSpec {
    std::string name;
    FramePair frame;

    friend bool operator==(const FrameSpec&, const FrameSpec&) = default;
};

/// Parses the JSON spec format. Throws ParseError for malformed JSON and
/// ValidationError (with a JSON-pointer-like field path) for schema or
/// invariant violations.
FrameSpec parse_spec(std::string_view text);

/// Inverse of parse_spec; rationals are written as "p/q" strings.
std::string serialize_spec(const FrameSpec& spec);

nlohmann::ordered_json family_to_json(const RuleFamily& family);

/// Names of the shipped frames.
std::vector<std::string> builtin_names();
std::optional<std::string_view> builtin_spec_text(std::string_view name);
FrameSpec builtin_spec(std::string_view name);

/// A builtin name, or else a path to a spec file.
FrameSpec load_spec(const std::string& name_or_path);

/// "1:-1/2,3:1" -> (-1/2) e_1 + e_3. Empty text is the zero vector.
FinVec parse_finvec_literal(std::string_view text);
std::string format_finvec_literal(const FinVec& v);

/// Rationals in JSON: "p/q" strings or integers.
Rational rational_from_json(const nlohmann::json& value, const std::string& field);
nlohmann::json rational_to_json(const Rational& r);

}  // namespace framekit
