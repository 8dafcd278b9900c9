#pragma once

#include <string>
#include <vector>

namespace actlab {

enum class OutputFormat { Text, Tsv };

// Bounds and plumbing for a verification run. Every bound must be at
// least 1. family_size_bound limits the families that precover and cover
// certificates are checked against; envelope_cap limits injective envelope
// searches (clamped to max_act_size inside the quotients suite, which
// reports any instance it had to skip).
struct RunConfig {
  int max_monoid_order = 4;
  int max_act_size = 4;
  int family_size_bound = 4;
  int envelope_cap = 8;
  int parallelism = 1;
  OutputFormat output_format = OutputFormat::Text;
};

// One instance verdict. On failure the detail embeds the tables and
// witnesses needed to replay the single instance by hand.
struct SuiteLine {
  std::string instance;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteLine> lines;

  bool pass() const;
};

// Suite names accepted by theorem_suite, in canonical order.
const std::vector<std::string>& suite_names();

// Runs the named verification over every enumerated instance within the
// bounds. Instances are computed independently, distributed over
// config.parallelism workers, and merged in enumeration order, so reports
// are byte-identical across parallelism settings. Natural-act instances
// always run at the enumeration cap of size 6.
SuiteReport theorem_suite(const std::string& name, const RunConfig& config);

// Text: one PASS/FAIL line per instance plus a result footer.
// Tsv: one row per instance with columns instance, suite, verdict and
// url-encoded detail.
std::string render_report(const SuiteReport& report, OutputFormat format);

}  // namespace actlab
