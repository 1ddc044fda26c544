#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "framekit/errors.hpp"
#include "framekit/spec_io.hpp"
#include "generators.hpp"

using namespace framekit;
using fixtures::e;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string with_tail_scale(std::string_view kind, std::string_view k) {
    return std::string(R"({"name": "t", "space": "l1",
  "vectors": {"prefix": [], "tail": {"kind": "shifted_canonical", "offset_index": 0,
      "scale": {"kind": ")") + std::string(kind) + R"(", "k": ")" + std::string(k) + R"("}, "offset_vector": []}},
  "functionals": {"prefix": [], "tail": {"kind": "shifted_canonical", "offset_index": 0,
      "scale": {"kind": "const", "k": "1"}, "offset_vector": []}}})";
}

template <class Fn>
std::string validation_field(Fn&& fn) {
    try {
        fn();
    } catch (const ValidationError& ex) {
        return ex.field();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("builtins parse to the worked examples") {
    CHECK(builtin_spec("example-2.1a").frame == fixtures::ex_a());
    CHECK(builtin_spec("example-2.1b").frame == fixtures::ex_b());
    CHECK(builtin_spec("remark-3.2").frame == fixtures::ex_c());
    CHECK(builtin_spec("canonical").frame == fixtures::canonical());
    CHECK(builtin_names().size() == 4);
    CHECK_FALSE(builtin_spec_text("nope").has_value());
    CHECK_THROWS_AS(builtin_spec("nope"), ValidationError);
}

TEST_CASE("shipped spec files match the builtins") {
    const std::string dir = FRAMEKIT_SPECS_DIR;
    for (const auto& name : builtin_names()) CHECK(load_spec(dir + "/" + name + ".json") == builtin_spec(name));
    const auto c0 = load_spec(dir + "/example-2.1a-c0.json");
    CHECK(c0.frame == fixtures::ex_a(SpaceId::C0));
    CHECK(c0.name == "example-2.1a-c0");
    CHECK_THROWS_AS(load_spec(dir + "/missing.json"), ValidationError);
    CHECK(read_file(dir + "/example-2.1a.json").find("\"1/2\"") != std::string::npos);
}

TEST_CASE("validation errors carry field paths") {
    CHECK_NOTHROW(parse_spec(with_tail_scale("linear", "2")));
    CHECK(validation_field([] { parse_spec(with_tail_scale("linear", "0")); }) == "/vectors/tail/scale/k");
    CHECK(validation_field([] { parse_spec(with_tail_scale("cubic", "1")); }) == "/vectors/tail/scale/kind");
    CHECK(validation_field([] { parse_spec(with_tail_scale("const", "1/0")); }) == "/vectors/tail/scale/k");

    std::string decreasing = read_file(std::string(FRAMEKIT_SPECS_DIR) + "/example-2.1a.json");
    const auto pos = decreasing.find(R"([[1, "1/2"]])");
    REQUIRE(pos != std::string::npos);
    decreasing.replace(pos, 12, R"([[2, "1"], [1, "1/2"]])");
    CHECK(validation_field([&] { parse_spec(decreasing); }).rfind("/vectors/prefix/0", 0) == 0);

    CHECK(validation_field([] { parse_spec(R"({"name": "x", "space": "l2"})"); }) == "/space");
    CHECK(validation_field([] { parse_spec(R"({"space": "l1"})"); }) == "/name");
}

TEST_CASE("malformed JSON reports a position") {
    try {
        parse_spec("{\n  \"name\": \"x\",\n  \"space\": l1\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.line() == 3);
        CHECK(ex.column() >= 12);
    }
    CHECK_THROWS_AS(parse_spec(""), ParseError);
}

TEST_CASE("finvec literals") {
    CHECK(parse_finvec_literal("1:-1/2,3:1") == e(1, Rational(-1, 2)) + e(3));
    CHECK(parse_finvec_literal("").is_zero());
    CHECK(parse_finvec_literal(" 2 : 3 ") == e(2, Rational(3)));
    CHECK_THROWS_AS(parse_finvec_literal("3:1,1:1"), ValidationError);
    CHECK_THROWS_AS(parse_finvec_literal("0:1"), ValidationError);
    CHECK_THROWS_AS(parse_finvec_literal("1"), ValidationError);
    CHECK(format_finvec_literal(e(1, Rational(-1, 2)) + e(3)) == "1:-1/2,3:1");
}

TEST_CASE("rationals in JSON") {
    CHECK(rational_from_json(nlohmann::json("3/6"), "f") == Rational(1, 2));
    CHECK(rational_from_json(nlohmann::json(-4), "f") == Rational(-4));
    CHECK_THROWS_AS(rational_from_json(nlohmann::json(0.5), "f"), ValidationError);
    CHECK(rational_to_json(Rational(2)) == nlohmann::json("2/1"));
}

TEST_CASE("serialize then parse is the identity") {
    for (const auto& name : builtin_names()) {
        const auto spec = builtin_spec(name);
        CHECK(parse_spec(serialize_spec(spec)) == spec);
    }
    gen::Sampler s(3);
    for (int i = 0; i < 300; ++i) {
        const SpaceId space = s.coin() ? SpaceId::L1 : SpaceId::C0;
        const auto fam = gen::random_family(s, space, 6);
        std::vector<FinVec> fs;
        for (std::size_t k = 0; k < fam.prefix().size(); ++k) fs.push_back(gen::random_finvec(s, 5));
        const FrameSpec spec{"random-" + std::to_string(i),
                             {fam, FunctionalFamily(fs, TailRule::shifted_canonical(0, gen::random_scale(s))), space}};
        const std::string text = serialize_spec(spec);
        CHECK(parse_spec(text) == spec);
        CHECK(serialize_spec(parse_spec(text)) == text);
    }
}
