#include "fictio/config.hpp"

#include "fictio/errors.hpp"
#include "fictio/lc_number.hpp"

namespace fictio {

namespace {
int g_truncation_order = 8;
}

int lc_truncation_order() { return g_truncation_order; }

void set_lc_truncation_order(int n) {
  if (n < 2) throw UsageError("truncation order must be at least 2");
  if (n > 512) throw UsageError("truncation order larger than 512 is not supported");
  g_truncation_order = n;
}

Mode mode_from_name(const std::string& name) {
  if (name == "exact") return Mode::Exact;
  if (name == "numeric") return Mode::Numeric;
  throw UsageError("unknown mode '" + name + "' (use exact or numeric)");
}

}  // namespace fictio
