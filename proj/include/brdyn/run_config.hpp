#pragma once

// Run-wide settings for the command line tool, loadable from JSON:
// {"tolerance": 1e-12, "output_format": "text", "precision_escalation_cap": 1e-30}

#include <json.hpp>

#include <string>

#include "brdyn/intpoly.hpp"

namespace brdyn {

enum class OutputFormat { Text, Json, Csv };
std::string to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);  // ParseError

struct RunConfig {
  double tolerance = 1e-12;
  OutputFormat output_format = OutputFormat::Text;
  double precision_escalation_cap = 1e-30;
  // The cap as an exact rational; the default is exactly 10^-30.
  Rational cap() const;
};

void to_json(nlohmann::json& j, const RunConfig& c);
// Missing keys keep their defaults. Throws ParseError on malformed input and
// BadParameters unless 0 < cap <= tolerance.
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

}  // namespace brdyn
