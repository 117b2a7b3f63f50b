#include <gtest/gtest.h>

#include "pathring/bar.hpp"
#include "pathring/io/documents.hpp"

using namespace pathring;
using io::json;

namespace {

json sphere_doc() {
  return json::parse(R"({"name": "s", "degrees": {"0": ["1"], "2": ["e"]}, "unit": "1"})");
}

}  // namespace

TEST(CDGADocument, ParsesFullGrammar) {
  auto j = json::parse(R"({
    "degrees": {"0": ["1", "x"], "1": ["w", "v"]},
    "unit": "1",
    "d": [["x", [["v", "1"]]]],
    "product": [["x", "w", [["v", 0]]]],
    "augmentations": {"at0": [["1", "1"]]}
  })");
  auto doc = io::parse_cdga(j);
  EXPECT_EQ(doc.name, "cdga");
  EXPECT_EQ(doc.algebra.dimension(), 4u);
  ASSERT_EQ(doc.augmentations.size(), 1u);
  EXPECT_EQ(doc.augmentation("at0").name, "at0");
  EXPECT_THROW(doc.augmentation("nope"), ParseError);
}

TEST(CDGADocument, RejectsMalformed) {
  auto bad = [](const char* text) { return io::parse_cdga(json::parse(text)); };
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"]}, "unit": "1", "colour": "red"})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"zero": ["1"]}, "unit": "1"})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"]}})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"]}, "unit": 1})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"], "1": ["a"]}, "unit": "1", "d": [["a"]]})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"], "1": ["a"]}, "unit": "1", "d": [["a", [["1", "x/y"]]]]})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"], "1": ["a"]}, "unit": "1", "product": [["a", "a"]]})"), ParseError);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"]}, "unit": "1", "augmentations": [1]})"), ParseError);
}

TEST(CDGADocument, RejectsInvalidAlgebra) {
  auto bad = [](const char* text) { return io::parse_cdga(json::parse(text)); };
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1"], "1": ["a"]}, "unit": "1", "d": [["a", [["a", "1"]]]]})"), InvalidCDGA);
  EXPECT_THROW(bad(R"({"degrees": {"0": ["1", "e"]}, "unit": "1", "product": [["e", "e", [["e", "1"]]]],
                       "augmentations": {"half": [["1", "1"], ["e", "1/2"]]}})"),
               InvalidAugmentation);
}

TEST(CDGADocument, DocumentMatchesBuilder) {
  auto doc = io::parse_cdga(sphere_doc());
  auto unit = unit_augmentation(doc.algebra);
  BarComplex B(doc.algebra, unit, unit, BarOptions{3});
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(B.cohomology(k).dimension, 1u);
}

TEST(CotorsorDocument, Parses) {
  auto doc = io::parse_cotorsor(
      json::parse(R"({"cotorsor": "translated", "letters": 2, "truncation": 2, "constants": ["1", "-1/3"]})"));
  EXPECT_EQ(doc.constants.size(), 2u);
  EXPECT_TRUE(verify_cotorsor(doc.build(), doc.algebra()).pass());
  EXPECT_THROW(io::parse_cotorsor(json::parse(R"({"cotorsor": "translated", "letters": 2, "truncation": 2})")),
               ParseError);
  EXPECT_THROW(io::parse_cotorsor(json::parse(R"({"cotorsor": "other", "letters": 1, "truncation": 1})")), ParseError);
  EXPECT_THROW(io::parse_cotorsor(json::parse(R"({"cotorsor": "trivial", "letters": -1, "truncation": 1})")),
               ParseError);
}

TEST(GeometryDocument, Parses) {
  auto doc = io::parse_geometry(json::parse(R"({
    "punctures": [["0", "0"], ["1", "0"]],
    "paths": {
      "a": [{"type": "arc", "center": ["1/2", "0"], "points": [["1/4", "0"], ["3/4", "0"]], "orientation": "cw"}],
      "b": [{"type": "line", "points": [["1/4", "0"], ["1/2", "1/4"]]},
            {"type": "bezier", "points": [["1/2", "1/4"], ["0.6", "0.3"], ["0.7", "0.1"], ["3/4", "0"]]}]
    },
    "words": [[0, 1], []],
    "classes": {"c": [{"word": [1], "coefficient": "2"}]},
    "connection": {"rank": 2, "entries": [{"row": 0, "col": 1, "form": 1, "coefficient": ["0", "1"]}]},
    "splitting": [1]
  })"));
  EXPECT_EQ(doc.line.form_count(), 2u);
  EXPECT_EQ(doc.paths.size(), 2u);
  EXPECT_EQ(doc.paths.at("b").segments().size(), 2u);
  EXPECT_EQ(doc.words.size(), 2u);
  EXPECT_EQ(doc.classes.at("c").at(Word{1}), Rational(2));
  ASSERT_TRUE(doc.connection.has_value());
  EXPECT_EQ(doc.connection->entries.at({0, 1}).at(1).im, Rational(1));
}

TEST(GeometryDocument, RejectsMalformed) {
  auto bad = [](const std::string& paths, const std::string& extra = "") {
    return io::parse_geometry(json::parse(R"({"punctures": [["0", "0"]], "paths": )" + paths + extra + "}"));
  };
  const std::string line = R"({"p": [{"type": "line", "points": [["1", "0"], ["2", "0"]]}]})";
  EXPECT_NO_THROW(bad(line));
  EXPECT_THROW(bad(R"({"p": [{"type": "spiral", "points": []}]})"), ParseError);
  EXPECT_THROW(bad(R"({"p": [{"type": "line", "points": [["1", "0"]]}]})"), ParseError);
  EXPECT_THROW(bad(R"({"p": [{"type": "line", "points": [["1", "0"], ["2", "0"]], "speed": 1}]})"), ParseError);
  EXPECT_THROW(bad(R"({"p": [{"type": "line", "points": [["1", "0"], ["2", "0"]]},
                             {"type": "line", "points": [["3", "0"], ["4", "0"]]}]})"),
               ParseError);
  EXPECT_THROW(bad(R"({"p": [{"type": "arc", "center": ["1", "0"], "points": [["1", "0"], ["2", "0"]]}]})"),
               ParseError);
  EXPECT_THROW(bad(line, R"(, "words": [[1]])"), ParseError);
  EXPECT_THROW(bad(line, R"(, "connection": {"rank": 2, "entries": [{"row": 1, "col": 0, "form": 0, "coefficient": "1"}]})"),
               ParseError);
  EXPECT_THROW(io::parse_geometry(json::parse(R"({"punctures": [["0", "0"], ["0", "0"]], "paths": {}})")), ParseError);
}

TEST(Documents, Classify) {
  EXPECT_EQ(io::classify(sphere_doc()), io::DocumentKind::CDGA);
  EXPECT_EQ(io::classify(json::parse(R"({"cotorsor": "trivial"})")), io::DocumentKind::Cotorsor);
  EXPECT_EQ(io::classify(json::parse(R"({"punctures": []})")), io::DocumentKind::Geometry);
  EXPECT_THROW(io::classify(json::parse("[]")), ParseError);
  EXPECT_THROW(io::read_json("/nonexistent/file.json"), ParseError);
}
