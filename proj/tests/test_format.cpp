#include "rbcoalg/format.hpp"

#include "rbcoalg/binomial.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace rbcoalg;
using namespace rbcoalg::testing;

TEST_CASE("round trip is exact for every generated structure") {
    std::vector<StructureFile> files;
    for (const auto& [name, rb] : rb_coalgebra_corpus()) files.push_back(from_rb_coalgebra(rb));
    files.push_back(from_hopf(group_algebra(3)));
    files.push_back(from_hopf(sweedler_h4()));
    files.push_back(from_rb_algebra(q_polynomial_truncation(Rational(2), 5)));
    files.push_back(from_coalgebra(build_binomial(2).underlying));
    files.push_back(from_algebra(dualize(build_binomial(2).as_rb()).algebra));
    {
        StructureFile with_degrees = from_rb_algebra(q_polynomial_truncation(Rational(2), 3));
        with_degrees.degrees = std::vector<int>{1, 2, 3};
        files.push_back(with_degrees);
    }
    for (const auto& sf : files) {
        const std::string text = serialize_structure(sf);
        const StructureFile back = parse_structure(text);
        CHECK(back == sf);
        // serialization is deterministic byte for byte
        CHECK(serialize_structure(back) == text);
    }
}

TEST_CASE("zero-dimensional structures survive the format") {
    Coalgebra empty;
    const StructureFile sf = from_coalgebra(empty);
    CHECK(parse_structure(serialize_structure(sf)) == sf);
}

TEST_CASE("strict parsing rejects malformed documents") {
    const std::string good = serialize_structure(from_rb_coalgebra(build_binomial(1).as_rb()));

    CHECK_THROWS_AS(parse_structure("not json"), FormatError);
    CHECK_THROWS_AS(parse_structure("[1,2,3]"), FormatError);
    CHECK_THROWS_AS(parse_structure("{}"), FormatError);

    auto mutate = [&](const std::string& from, const std::string& to) {
        std::string text = good;
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    // unknown field
    CHECK_THROWS_AS(parse_structure(mutate("\"dim\"", "\"dimension\"")), FormatError);
    // wrong format version
    CHECK_THROWS_AS(parse_structure(mutate("\"format\": 1", "\"format\": 2")), FormatError);
    // unknown kind
    CHECK_THROWS_AS(parse_structure(mutate("rb-coalgebra", "bialgebra")), FormatError);
    // zero denominator
    CHECK_THROWS_AS(parse_structure(mutate("\"-1\"", "\"1/0\"")), FormatError);
    // index out of range
    CHECK_THROWS_AS(parse_structure(mutate("[\n    [\n      0,\n      0,\n      0,",
                                           "[\n    [\n      9,\n      0,\n      0,")),
                    FormatError);

    // field that belongs to a different kind
    {
        std::string text = good;
        text.replace(text.find("\"delta\""), 7, "\"mult\"");
        CHECK_THROWS_AS(parse_structure(text), FormatError);
    }
}

TEST_CASE("duplicate sparse entries are rejected") {
    const std::string doc = R"({
  "format": 1,
  "kind": "coalgebra",
  "dim": 1,
  "basis_names": ["x"],
  "delta": [[0,0,0,"1"],[0,0,0,"2"]]
})";
    CHECK_THROWS_AS(parse_structure(doc), FormatError);
}

TEST_CASE("rb kinds demand operators and weight") {
    const std::string no_ops = R"({
  "format": 1,
  "kind": "rb-coalgebra",
  "dim": 1,
  "basis_names": ["x"],
  "delta": [],
  "weight": "-1"
})";
    CHECK_THROWS_AS(parse_structure(no_ops), FormatError);
    const std::string no_weight = R"({
  "format": 1,
  "kind": "rb-coalgebra",
  "dim": 1,
  "basis_names": ["x"],
  "delta": [],
  "operators": {"P": [["1"]]}
})";
    CHECK_THROWS_AS(parse_structure(no_weight), FormatError);
}

TEST_CASE("basis_names length must match dim") {
    const std::string doc = R"({
  "format": 1,
  "kind": "coalgebra",
  "dim": 2,
  "basis_names": ["x"],
  "delta": []
})";
    CHECK_THROWS_AS(parse_structure(doc), FormatError);
}

TEST_CASE("converters enforce the kind") {
    const StructureFile coal = from_coalgebra(build_binomial(1).underlying);
    CHECK_THROWS_AS(to_algebra(coal), FormatError);
    CHECK_THROWS_AS(to_rb_coalgebra(coal), FormatError);
    CHECK_THROWS_AS(to_hopf(coal), FormatError);

    const StructureFile rb = from_rb_coalgebra(build_binomial(1).as_rb());
    CHECK_THROWS_AS(to_rb_coalgebra(rb, "Q"), FormatError);  // no operator named Q
    CHECK(to_rb_coalgebra(rb, "P").op == build_binomial(1).shift);
}

TEST_CASE("accepted scalars are canonicalized, not round-tripped verbatim") {
    const std::string doc = R"({
  "format": 1,
  "kind": "coalgebra",
  "dim": 1,
  "basis_names": ["x"],
  "delta": [[0,0,0,"2/4"]]
})";
    const StructureFile sf = parse_structure(doc);
    CHECK(sf.delta[0].at(0, 0) == Rational(1, 2));
    CHECK(serialize_structure(sf).find("1/2") != std::string::npos);
}
