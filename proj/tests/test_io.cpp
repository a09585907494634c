#include <gtest/gtest.h>

#include "pseudoseg/enumerate.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/generate.hpp"
#include "pseudoseg/io.hpp"

using namespace pseudoseg;

namespace {

ErrorCode parse_code(std::string_view text) {
  try {
    parse_family_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed";
  return ErrorCode::Structural;
}

}  // namespace

TEST(FamilyFile, CombinatorialRoundTrip) {
  std::vector<CombinatorialFamily> corpus;
  for (int c = 0; c < 4; ++c) corpus.push_back(generate_canonical_quasigrid(3, TouchClass::from_index(c)));
  EnumerationLimits lim;
  lim.max_curves = 3;
  for (auto& f : enumerate_families(lim)) corpus.push_back(std::move(f));
  for (const auto& f : corpus) {
    const auto text = serialize_family(f);
    const auto back = parse_family_file(text);
    EXPECT_EQ(back.family, f);
    EXPECT_EQ(serialize_family_file(back), text);
  }
}

TEST(FamilyFile, GeometricRoundTrip) {
  FamilyFile file;
  file.mode = FileMode::Geometric;
  file.curves = {{0, {{0.1, -0.0}, {1e-7, 3}}}, {1, {{2.5, 1.0 / 3}, {-4, 0}}}};
  const auto text = serialize_family_file(file);
  EXPECT_NE(text.find("\"0.1\""), std::string::npos);
  EXPECT_EQ(text.find("-0\""), std::string::npos);
  const auto back = parse_family_file(text);
  EXPECT_EQ(back.curves[1].points[0].y, 1.0 / 3);
  EXPECT_EQ(serialize_family_file(back), text);
}

TEST(FamilyFile, NumbersAreAcceptedForCoordinates) {
  const auto f = parse_family_file(R"({"version":1,"mode":"geometric","curves":[{"id":0,"points":[[0,0],[1.5,"2"]]}]})");
  EXPECT_EQ(f.curves[0].points[1], (Point{1.5, 2}));
}

TEST(FamilyFile, Errors) {
  EXPECT_EQ(parse_code(R"({"version":1,"mode":)"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version":2,"mode":"geometric","curves":[]})"), ErrorCode::Schema);
  EXPECT_EQ(parse_code(R"({"version":1,"mode":"other"})"), ErrorCode::Schema);
  EXPECT_EQ(parse_code(R"({"version":1,"mode":"combinatorial","curves":[],"hubs":[]})"), ErrorCode::Schema);
  EXPECT_EQ(parse_code(R"({"version":1,"mode":"geometric","curves":[{"id":0,"points":[["x","0"]]}]})"), ErrorCode::Schema);
  EXPECT_EQ(parse_code(R"({"version":1,"mode":"combinatorial","curves":[{"id":0,"source":0,"target":1,"events":[{"other":1,"kind":"graze","meeting":0}]}],"meetings":[],"hubs":[]})"),
            ErrorCode::Schema);
}
