#pragma once

#include <cstdint>
#include <string>

namespace fictio {

enum class Mode { Numeric, Exact };
enum class OutputFormat { Json, Text };

// Run-wide knobs shared by the CLI, the batch runner, and the bindings.
// Resolution order: command-line flags > config file named by FICTIO_CONFIG
// > these defaults.
struct RunConfig {
  Mode mode = Mode::Numeric;
  int truncation_order = 8;
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  OutputFormat output = OutputFormat::Json;
};

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

Mode mode_from_name(const std::string& name);

}  // namespace fictio
