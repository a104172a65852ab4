#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "factorlab/error.hpp"
#include "factorlab/json_io.hpp"
#include "factorlab/suite.hpp"

namespace factorlab {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(Suite, ListsScenariosInOrder) {
  EXPECT_EQ(list_scenarios(), (std::vector<std::string>{"na-interval", "g-mixed", "x6-mixed", "zxq", "l19", "gl-y23",
                                                         "fg-sanity"}));
}

TEST(Suite, EveryScenarioPasses) {
  SuiteReport report = run_all();
  EXPECT_TRUE(report.pass);
  for (const auto& scenario : report.scenarios) {
    EXPECT_TRUE(scenario.pass) << scenario.id;
    EXPECT_FALSE(scenario.checks.empty()) << scenario.id;
    for (const auto& check : scenario.checks) EXPECT_TRUE(check.pass) << scenario.id << ": " << check.name;
  }
}

TEST(Suite, JsonMatchesGoldenFile) {
  std::string golden = read_file(FACTORLAB_TEST_DATA "/suite_golden.json");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(json_io::to_json(run_all()).dump(2) + "\n", golden);
}

TEST(Suite, OutputIsDeterministic) {
  EXPECT_EQ(json_io::to_json(run_all()).dump(), json_io::to_json(run_all()).dump());
}

TEST(Suite, InjectedFaultIsCaught) {
  SuiteOptions options;
  options.inject_fault = true;
  SuiteReport report = run_all(options);
  EXPECT_FALSE(report.pass);
  for (const char* id : {"na-interval", "g-mixed", "x6-mixed", "fg-sanity"})
    EXPECT_FALSE(run_scenario(id, options).pass) << id;
}

TEST(Suite, UnknownIdNamesValidIds) {
  try {
    run_scenario("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_id);
    EXPECT_NE(std::string(e.what()).find("g-mixed"), std::string::npos);
  }
}

}  // namespace
}  // namespace factorlab
