#include "lps/harness/registry.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace lps::harness;

const char* const kMinimal = R"({
  "schema": "lps-config/1",
  "name": "plane",
  "coords": ["x", "y", "z"],
  "phi": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "0"]],
  "xi": ["0", "0", "-1"],
  "eta": ["0", "0", "1"],
  "connection": "zero"
})";

ConfigError load_error(const std::string& text) {
  try {
    load_config_text(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ConfigError("none");
}

std::string with(const std::string& insertion) {
  std::string text = kMinimal;
  text.insert(text.find("\"connection\""), insertion);
  return text;
}

TEST(Config, LoadsMinimalDocument) {
  const auto c = load_config_text(kMinimal);
  EXPECT_EQ(c.structure.name, "plane");
  EXPECT_EQ(c.structure.ac.dim(), 3u);
  EXPECT_FALSE(c.structure.metric.has_value());
  EXPECT_EQ(c.structure.connection_kind, "zero");
  EXPECT_EQ(c.run.check.seed, 42u);
  EXPECT_EQ(c.run.check.points, 20);
}

TEST(Config, RegistryRoundTrip) {
  for (const auto& id : structure_ids()) {
    const auto loaded = load_example(id);
    const json once = export_config(loaded);
    const json twice = export_config(load_config_json(once));
    EXPECT_EQ(once, twice) << id;
    EXPECT_EQ(once["hypersurfaces"].size(), loaded.structure.hypersurfaces.size()) << id;
  }
}

TEST(Config, MetricRequiredForLorentzianSuites) {
  const std::string text = with("\"run\": {\"suites\": [\"ac\", \"lp-sasakian\"]},\n  ");
  const auto e = load_error(text);
  EXPECT_EQ(e.where(), "/run/suites/1");
  EXPECT_EQ(e.line(), 8u);
  EXPECT_NE(std::string(e.what()).find("metric required"), std::string::npos) << e.what();
}

TEST(Config, DimensionMismatch) {
  std::string text = kMinimal;
  text.replace(text.find("[\"0\", \"0\", \"-1\"]"), 16, "[\"0\", \"-1\"]");
  const auto e = load_error(text);
  EXPECT_EQ(e.where(), "/xi");
  EXPECT_NE(std::string(e.what()).find("dimension error"), std::string::npos) << e.what();
}

TEST(Config, RejectsUnknownKeysAndSymbols) {
  EXPECT_EQ(load_error(with("\"colour\": 1,\n  ")).where(), "/colour");
  std::string text = kMinimal;
  text.replace(text.find("[\"0\", \"0\", \"1\"]"), 15, "[\"0\", \"w\", \"1\"]");
  const auto e = load_error(text);
  EXPECT_EQ(e.where(), "/eta/1");
  EXPECT_NE(std::string(e.what()).find("unknown symbol 'w'"), std::string::npos);
}

TEST(Config, RejectsBadJsonAndSchema) {
  EXPECT_NE(std::string(load_error("{\"schema\": ").what()).find("invalid JSON"), std::string::npos);
  std::string text = kMinimal;
  text.replace(text.find("lps-config/1"), 12, "lps-config/9");
  EXPECT_EQ(load_error(text).where(), "/schema");
}

TEST(Config, RunSectionValidated) {
  EXPECT_EQ(load_error(with("\"run\": {\"points\": 0},\n  ")).where(), "/run/points");
  EXPECT_EQ(load_error(with("\"run\": {\"tol\": -1},\n  ")).where(), "/run/tol");
  const auto c = load_config_text(with("\"run\": {\"seed\": 7, \"points\": 5, \"tol\": 1e-6},\n  "));
  EXPECT_EQ(c.run.check.seed, 7u);
  EXPECT_EQ(c.run.check.points, 5);
  EXPECT_DOUBLE_EQ(c.run.check.tol, 1e-6);
}

TEST(Config, LocateLine) {
  const std::string text = "{\n  \"a\": [1,\n    2],\n  \"b\": {\"c\": 3}\n}";
  EXPECT_EQ(locate_line(text, "/a"), 2u);
  EXPECT_EQ(locate_line(text, "/a/1"), 3u);
  EXPECT_EQ(locate_line(text, "/b/c"), 4u);
  EXPECT_EQ(locate_line(text, "/missing"), 0u);
}

TEST(Registry, IdsAreUniqueAndResolvable) {
  std::set<std::pair<std::string, bool>> seen;
  for (const auto& e : examples()) {
    EXPECT_TRUE(seen.insert({e.id, e.hypersurface.has_value()}).second) << e.id;
    EXPECT_NE(registry_document(e.structure), nullptr) << e.id;
    EXPECT_EQ(find_example(e.id, e.hypersurface.has_value()), &e) << e.id;
  }
  for (const char* id : {"6.1", "6.2", "6.3", "6.4"}) EXPECT_TRUE(seen.count({id, false})) << id;
  for (const char* id : {"6.1/M1", "6.1/M2", "6.2", "6.3", "6.4/M1", "6.4/M2"}) EXPECT_TRUE(seen.count({id, true})) << id;
}

}  // namespace
