#include "brdyn/run_config.hpp"

#include <fstream>

#include "brdyn/families.hpp"

namespace brdyn {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ParseError("unknown output format '" + s + "'");
}

Rational RunConfig::cap() const {
  if (precision_escalation_cap == 1e-30) return default_precision_cap();
  return to_rational(precision_escalation_cap);
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"tolerance", c.tolerance},
                     {"output_format", to_string(c.output_format)},
                     {"precision_escalation_cap", c.precision_escalation_cap}};
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "tolerance")
        c.tolerance = value.get<double>();
      else if (key == "output_format")
        c.output_format = output_format_from_string(value.get<std::string>());
      else if (key == "precision_escalation_cap")
        c.precision_escalation_cap = value.get<double>();
      else
        throw ParseError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!(c.tolerance > 0)) throw BadParameters("tolerance must be positive");
  if (!(c.precision_escalation_cap > 0) || c.precision_escalation_cap > c.tolerance)
    throw BadParameters("precision_escalation_cap must lie in (0, tolerance]");
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config '" + path + "': " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace brdyn
