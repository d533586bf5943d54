#include <doctest.h>

#include "brdyn/families.hpp"
#include "brdyn/run_config.hpp"

using namespace brdyn;

TEST_CASE("run config") {
  RunConfig d = run_config_from_json(nlohmann::json::object());
  CHECK(d.tolerance == 1e-12);
  CHECK(d.output_format == OutputFormat::Text);
  CHECK(d.cap() == default_precision_cap());

  RunConfig c = run_config_from_json(nlohmann::json::parse(R"({"tolerance":1e-9,"output_format":"csv"})"));
  CHECK(c.tolerance == 1e-9);
  CHECK(c.output_format == OutputFormat::Csv);
  nlohmann::json j = c;
  CHECK(nlohmann::json(run_config_from_json(j)).dump() == j.dump());

  CHECK_THROWS_AS(run_config_from_json(nlohmann::json::parse(R"({"tolerance":0})")), BadParameters);
  CHECK_THROWS_AS(run_config_from_json(nlohmann::json::parse(R"({"precision_escalation_cap":1e-3})")), BadParameters);
  CHECK_THROWS_AS(run_config_from_json(nlohmann::json::parse(R"({"output_format":"xml"})")), ParseError);
  CHECK_THROWS_AS(run_config_from_json(nlohmann::json::parse(R"({"tolerence":1e-3})")), ParseError);
  CHECK_THROWS_AS(load_run_config("/nonexistent/config.json"), ParseError);
}
