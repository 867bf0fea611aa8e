#include <gtest/gtest.h>

#include <string>

#include "twisted/error.hpp"
#include "twisted/io.hpp"

using namespace twisted;
using twisted::io::Json;

namespace {

// Message of the InputError thrown by f, or "" if none.
template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST(Io, TopologyRoundTrip) {
  const auto t = fintop::FiniteTopology::from_subbasis(3, std::vector<fintop::PointSet>{0b001, 0b011});
  const Json j = io::to_json(t);
  EXPECT_EQ(io::topology_from_json(j, "t"), t);
}

TEST(Io, ErrorsCarryTheirLocation) {
  auto topo = [](const char* text) {
    return error_of([&] { io::topology_from_json(Json::parse(text), "y.json"); });
  };
  EXPECT_TRUE(starts_with(topo(R"({"opens": []})"), "y.json: missing key \"n\"")) << topo(R"({"opens": []})");
  EXPECT_TRUE(starts_with(topo(R"({"n": 2, "opens": [[0], [0, 5]]})"), "y.json/opens/1/1: "));
  EXPECT_TRUE(starts_with(topo(R"({"n": 2, "opens": [[0], ["a"]]})"), "y.json/opens/1/0: expected an integer"));
  EXPECT_TRUE(starts_with(topo(R"({"n": 99, "opens": []})"), "y.json/n: "));
  // a family that is not a topology is reported at the file itself
  EXPECT_TRUE(starts_with(topo(R"({"n": 2, "opens": [[0], [1]]})"), "y.json: "));

  const auto y = fintop::FiniteTopology::discrete(2);
  const auto z = fintop::FiniteTopology::discrete(1);
  EXPECT_TRUE(starts_with(error_of([&] { io::map_from_json(Json::parse(R"({"values": [0, 3]})"), y, z, "f"); }),
                          "f/values/1: value out of range"));

  EXPECT_TRUE(starts_with(
      error_of([] { io::periodic_set_from_json(Json::parse(R"({"m": 0})"), "s"); }), "s: "));
  EXPECT_TRUE(starts_with(
      error_of([] { io::zline_model_from_json(Json::parse(R"({"z": {"n": 1, "opens": [[], [0]]}, "f": {"m": 1, "residue_values": [0], "exceptions": [[1]]}})"), "m"); }),
      "m/f/exceptions/0: "));
  EXPECT_TRUE(starts_with(
      error_of([] { io::aap_function_from_json(Json::parse(R"({"basis": {"lambda": [1.0]}, "ap": [{"k": [1, 2], "re": 1, "im": 0}]})"), "g"); }),
      "g/ap/0/k: index has the wrong dimension"));
  EXPECT_TRUE(starts_with(
      error_of([] { io::aap_set_from_json(Json::parse(R"({"intervals": [[2, 1]]})"), "a"); }),
      "a/intervals/0: "));
}

TEST(Io, MissingFileIsAnInputError) {
  EXPECT_TRUE(starts_with(error_of([] { io::read_json_file("/nonexistent/x.json"); }),
                          "/nonexistent/x.json: "));
}

TEST(Io, ZLineModelAndSet) {
  const auto t = io::zline_model_from_json(
      Json::parse(R"({"z": {"n": 1, "opens": [[], [0]]}, "f": {"m": 1, "residue_values": [0]}, "labels": ["inf"]})"),
      "m");
  ASSERT_TRUE(t.map().has_value());
  EXPECT_EQ(t.labels, std::vector<std::string>{"inf"});
  const auto s = io::zsumset_from_json(Json::parse(R"({"y": {"m": 2, "residues": [0], "added": [1]}, "z": [0]})"), "s");
  EXPECT_TRUE(s.ypart.contains(0));
  EXPECT_TRUE(s.ypart.contains(1));
  EXPECT_FALSE(s.ypart.contains(3));
  EXPECT_EQ(s.zpart, 1u);
  EXPECT_EQ(io::periodic_set_from_json(io::to_json(s.ypart), "r"), s.ypart);
}

TEST(Io, Table) {
  const Json j = Json::parse(R"({"a": 1, "b": {"c": true}})");
  const auto t = io::to_table(j);
  EXPECT_NE(t.find("a"), std::string::npos);
  EXPECT_NE(t.find("b.c"), std::string::npos);
}
