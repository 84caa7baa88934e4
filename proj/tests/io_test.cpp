#include "wlcovers/io.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "wlcovers/bundled.hpp"

namespace wlcovers {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(ParseEdgeListTest, Triangle) {
  EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n2 0\n"), cycle_graph(3));
}

TEST(ParseEdgeListTest, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# a path\n\n3 2\n0 1\n\n# middle\n1 2");
  EXPECT_EQ(g, path_graph(3));
  EXPECT_EQ(parse_edge_list("4 0\n").vertex_count(), 4u);
}

TEST(ParseEdgeListTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3 1\n0 5\n"), 2u);
  EXPECT_EQ(error_line("3 2\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(error_line("# header next\nthree 1\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 x\n"), 2u);
  EXPECT_GT(error_line("3 3\n0 1\n"), 0u);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(SerializeEdgeListTest, Format) {
  EXPECT_EQ(serialize_edge_list(cycle_graph(3)), "3 3\n0 1\n0 2\n1 2\n");
}

TEST(SerializeEdgeListTest, RoundTrip) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(15, 0.2, rng);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(BundledDataTest, FilesMatchBuiltIns) {
  const std::filesystem::path dir = WLCOVERS_DATA_DIR;
  EXPECT_EQ(read_graph_file(dir / "base.el"), rigid_base_graph());
  EXPECT_EQ(read_graph_file(dir / "c6.el"), cycle_graph(6));
  EXPECT_EQ(read_graph_file(dir / "two_c3.el"), disjoint_union(cycle_graph(3), cycle_graph(3)).graph);
  EXPECT_THROW(read_graph_file(dir / "no_such_file.el"), std::runtime_error);
}

TEST(ToDotTest, Content) {
  const std::string plain = to_dot(path_graph(2));
  EXPECT_NE(plain.find("graph G {"), std::string::npos);
  EXPECT_NE(plain.find("0 -- 1"), std::string::npos);
  const std::string coloured = to_dot(path_graph(3), Coloring{{0, 1, 0}}, "P3");
  EXPECT_NE(coloured.find("graph P3 {"), std::string::npos);
  EXPECT_NE(coloured.find("label=\"1\""), std::string::npos);
}

TEST(VoltageJsonTest, RoundTrip) {
  const Graph base = rigid_base_graph();
  const VoltageAssignment va = make_voltage(base, 3, {{1, 2, 0}, {0, 2, 1}});
  const auto j = voltage_to_json(va);
  EXPECT_EQ(j.at("degree"), 3);
  EXPECT_EQ(voltage_from_json(nlohmann::json::parse(j.dump()), base), va);
}

TEST(VoltageJsonTest, AnyOrderAndOrientation) {
  const Graph base = rigid_base_graph();
  const VoltageAssignment va = make_voltage(base, 3, {{1, 2, 0}, {0, 2, 1}});
  const Edge e0 = va.distinguished_edges[0];
  const Edge e1 = va.distinguished_edges[1];
  // Second edge first; first edge reversed, so its permutation is inverted.
  const nlohmann::json j = {{"degree", 3},
                            {"edges", {{e1.u, e1.v}, {e0.v, e0.u}}},
                            {"perms", {{0, 2, 1}, {2, 0, 1}}}};
  EXPECT_EQ(voltage_from_json(j, base), va);
}

TEST(VoltageJsonTest, Rejections) {
  const Graph base = rigid_base_graph();
  EXPECT_THROW(voltage_from_json(nlohmann::json::parse(R"({"degree": 2})"), base), ParseError);
  EXPECT_THROW(voltage_from_json(nlohmann::json::parse(R"({"degree": 2, "edges": [[0, 1]], "perms": [[1, 0]]})"), base),
               ParseError);
  const auto va = make_voltage(base, 2, {{1, 0}, {1, 0}});
  auto bad = voltage_to_json(va);
  bad["perms"][0] = {1, 1};
  EXPECT_THROW(voltage_from_json(nlohmann::json::parse(bad.dump()), base), ParseError);
}

TEST(Sha256Test, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RunManifestTest, Json) {
  RunManifest m;
  m.command = "gen-covers";
  m.arguments = {"base.el", "--degree", "3"};
  m.input_digests = {{"base.el", sha256_hex("x")}};
  m.outputs = {"out/manifest.json"};
  m.wall_time = std::chrono::milliseconds(12);
  const auto j = m.to_json();
  EXPECT_EQ(j.at("command"), "gen-covers");
  EXPECT_EQ(j.at("arguments").size(), 3u);
  EXPECT_EQ(j.at("version"), std::string(kToolVersion));
  EXPECT_EQ(j.at("inputs")[0].at("path"), "base.el");
  EXPECT_EQ(j.at("wall_time_ms"), 12);
}

}  // namespace
}  // namespace wlcovers
