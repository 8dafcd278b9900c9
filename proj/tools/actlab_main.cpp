#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "actlab/act.hpp"
#include "actlab/classes.hpp"
#include "actlab/covers.hpp"
#include "actlab/error.hpp"
#include "actlab/io.hpp"
#include "actlab/monoid.hpp"
#include "actlab/nat_act.hpp"
#include "actlab/quotients.hpp"
#include "actlab/suites.hpp"

namespace {

using namespace actlab;

constexpr int kExitPass = 0;
constexpr int kExitSuiteFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join_indices(const std::vector<Idx>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  return os.str();
}

// Resolves the monoid table for an act file: an explicit --monoid flag wins,
// otherwise `<monoid-name>.monoid` next to the act file.
NamedMonoid resolve_monoid(const std::string& act_path,
                           const std::string& act_text,
                           const std::string& monoid_flag) {
  std::string path = monoid_flag;
  if (path.empty()) {
    std::filesystem::path base(act_path);
    path = (base.parent_path() / (act_monoid_name(act_text) + ".monoid"))
               .string();
  }
  return parse_monoid(read_file(path));
}

int apply_thread_override(int parallelism) {
  const char* env = std::getenv("ACTLAB_THREADS");
  if (env == nullptr || *env == '\0') {
    return parallelism;
  }
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "ACTLAB_THREADS must be a positive integer");
  }
  return static_cast<int>(value);
}

ClassLabel label_or_throw(const std::string& label_text) {
  std::optional<ClassLabel> label = parse_class_label(label_text);
  if (!label) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown class label: " + label_text);
  }
  return *label;
}

int run_check(const std::string& act_path, const std::string& label_text,
              const std::string& monoid_flag) {
  ClassLabel label = label_or_throw(label_text);
  std::string text = read_file(act_path);
  ClassVerdict verdict;
  std::string name;
  if (classify_act_text(text) == ActFileKind::Nat) {
    NamedNatAct nx = parse_nat_act(text);
    name = nx.name;
    verdict = nat_class_check(nx.act, label);
  } else {
    NamedMonoid m = resolve_monoid(act_path, text, monoid_flag);
    NamedAct na = parse_act(text, m.monoid);
    name = na.name;
    verdict = act_in_class(na.act, label);
  }
  std::cout << "check " << name << ": class " << to_string(label)
            << " member " << (verdict.member ? "true" : "false");
  if (!verdict.witness.empty()) {
    std::cout << " witness {" << join_indices(verdict.witness) << "}";
  }
  std::cout << '\n';
  if (!verdict.detail.empty()) {
    std::cout << "  " << verdict.detail << '\n';
  }
  return kExitPass;
}

int run_enumerate(int order, bool up_to_iso) {
  std::vector<MonoidPtr> monoids = enumerate_monoids(order, up_to_iso);
  std::cout << "monoids of order " << order
            << (up_to_iso ? " up to isomorphism" : "") << ": "
            << monoids.size() << '\n';
  for (size_t i = 0; i < monoids.size(); ++i) {
    std::cout << serialize_monoid({"m" + std::to_string(i), monoids[i]});
  }
  return kExitPass;
}

int run_cover(const std::string& act_path, const std::string& label_text,
              int bound, const std::string& monoid_flag) {
  ClassLabel label = label_or_throw(label_text);
  std::string text = read_file(act_path);

  if (classify_act_text(text) == ActFileKind::Nat) {
    if (label != ClassLabel::Divisible) {
      throw Error(ErrorCode::InvalidArgument,
                  "natural acts support covers for the divisible class only");
    }
    NamedNatAct nx = parse_nat_act(text);
    NatCoverCertificate cert = nat_divisible_cover(nx.act, bound);
    std::cout << "cover " << nx.name << ": domain size "
              << cert.domain.size << " step {"
              << join_indices(cert.domain.step) << "} inclusion {"
              << join_indices(cert.inclusion) << "}\n";
    std::cout << "  precover " << (cert.precover ? "yes" : "no") << ", cover "
              << (cert.cover ? "yes" : "no") << ", unique factorization "
              << (cert.ump ? "yes" : "no") << " (family bound " << bound
              << ", " << cert.family_size << " members)\n";
    if (!cert.detail.empty()) {
      std::cout << "  " << cert.detail << '\n';
    }
    return cert.precover && cert.cover && cert.ump ? kExitPass
                                                   : kExitInconclusive;
  }

  NamedMonoid m = resolve_monoid(act_path, text, monoid_flag);
  NamedAct na = parse_act(text, m.monoid);
  std::optional<CoverCertificate> cert = search_cover(na.act, label, bound);
  if (!cert) {
    std::cout << "cover " << na.name << ": none within bound " << bound
              << " (inconclusive)\n";
    return kExitInconclusive;
  }
  std::cout << "cover " << na.name << ": kind " << to_string(cert->kind)
            << ", domain size " << cert->map.source()->size() << ", map {"
            << join_indices(cert->map.mapping()) << "}\n";
  std::cout << "  family of " << cert->family.members.size()
            << " test acts, " << cert->factorizations.size()
            << " factorizations, " << cert->endos.size()
            << " coequalising endomorphisms\n";
  return kExitPass;
}

int run_verify(const std::string& suite, const RunConfig& config) {
  SuiteReport report = theorem_suite(suite, config);
  std::cout << render_report(report, config.output_format);
  return report.pass() ? kExitPass : kExitSuiteFail;
}

int run_quotients(const std::string& source, const std::string& act_path) {
  if (source == "nat") {
    if (act_path.empty()) {
      NatQuotientWindow window = nat_quotient_window(4);
      std::cout << "quotients nat: window 4, " << window.classes
                << " classes, difference normal form "
                << (window.difference_normal_form ? "yes" : "no")
                << ", group " << (window.is_group ? "yes" : "no") << '\n';
      return kExitPass;
    }
    std::string text = read_file(act_path);
    NamedNatAct nx = parse_nat_act(text);
    NatQuotientAct q = nat_act_of_quotients(nx.act);
    std::cout << "quotients " << nx.name << ": carrier {"
              << join_indices(q.members) << "} inverse step {"
              << join_indices(q.inverse_step) << "}\n";
    std::cout << "  theta {" << join_indices(q.theta) << "} mono "
              << (q.theta_mono ? "yes" : "no") << '\n';
    NatQuotientWindow window = nat_quotient_window(nx.act.size);
    std::cout << "  exponent window " << nx.act.size << ": "
              << window.classes << " classes, difference normal form "
              << (window.difference_normal_form ? "yes" : "no") << ", group "
              << (window.is_group ? "yes" : "no") << '\n';
    return kExitPass;
  }

  NamedMonoid m = parse_monoid(read_file(source));
  QuotientMonoid q = quotient_monoid(m.monoid);
  bool base_iso = q.quotient->order() == m.monoid->order();
  bool quotient_group = monoid_property(*q.quotient, MonoidKind::Group).holds;
  bool base_cancellative =
      monoid_property(*m.monoid, MonoidKind::Cancellative).holds;
  std::cout << "quotients " << m.name << ": base order " << m.monoid->order()
            << ", quotient order " << q.quotient->order() << ", "
            << q.cancellative.size() << " cancellative elements, "
            << q.units.size() << " units\n";
  std::cout << "  base isomorphic to quotient " << (base_iso ? "yes" : "no")
            << "; quotient a group " << (quotient_group ? "yes" : "no")
            << "; base cancellative " << (base_cancellative ? "yes" : "no")
            << '\n';
  if (act_path.empty()) {
    return kExitPass;
  }
  std::string text = read_file(act_path);
  NamedAct na = parse_act(text, m.monoid);
  QuotientAct qa = act_of_quotients(na.act, q);
  std::cout << "  act " << na.name << ": quotient act size "
            << qa.over_quotient->size() << ", theta {"
            << join_indices(qa.theta.mapping()) << "} mono "
            << (qa.theta_mono ? "yes" : "no") << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite monoids and right acts: class membership, covers, quotients"
      " and theorem suites"};
  app.require_subcommand(1);

  std::string act_path;
  std::string label_text;
  std::string monoid_flag;
  int order = 1;
  bool up_to_iso = false;
  int bound = 4;
  std::string suite;
  std::string source;
  std::string quotients_act;
  RunConfig config;
  std::string format = "text";

  CLI::App* check = app.add_subcommand(
      "check", "decide class membership for an act or natural act");
  check->add_option("act", act_path, "act or natact file")->required();
  check->add_option("--class", label_text, "class label")->required();
  check->add_option("--monoid", monoid_flag,
                    "monoid file (default: <monoid-name>.monoid beside the"
                    " act file)");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list monoid multiplication tables of a given order");
  enumerate->add_option("--order", order, "monoid order")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso,
                      "one representative per isomorphism class");

  CLI::App* cover = app.add_subcommand(
      "cover", "search for a class cover of an act");
  cover->add_option("act", act_path, "act or natact file")->required();
  cover->add_option("--class", label_text, "class label")->required();
  cover->add_option("--bound", bound, "family size bound");
  cover->add_option("--monoid", monoid_flag,
                    "monoid file (default: <monoid-name>.monoid beside the"
                    " act file)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run a theorem suite over enumerated instances");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-order", config.max_monoid_order,
                     "largest monoid order");
  verify->add_option("--max-act-size", config.max_act_size,
                     "largest act size");
  verify->add_option("--family-bound", config.family_size_bound,
                     "test family size bound");
  verify->add_option("--envelope-cap", config.envelope_cap,
                     "injective envelope search cap");
  verify->add_option("--parallelism", config.parallelism,
                     "worker threads (ACTLAB_THREADS overrides)");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}));

  CLI::App* quotients = app.add_subcommand(
      "quotients", "construct the monoid and act of quotients");
  quotients->add_option("source", source, "monoid file, or 'nat'")
      ->required();
  quotients->add_option("act", quotients_act, "act or natact file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) {
      return run_check(act_path, label_text, monoid_flag);
    }
    if (enumerate->parsed()) {
      return run_enumerate(order, up_to_iso);
    }
    if (cover->parsed()) {
      return run_cover(act_path, label_text, bound, monoid_flag);
    }
    if (verify->parsed()) {
      config.parallelism = apply_thread_override(config.parallelism);
      config.output_format =
          format == "tsv" ? OutputFormat::Tsv : OutputFormat::Text;
      return run_verify(suite, config);
    }
    if (quotients->parsed()) {
      return run_quotients(source, quotients_act);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BoundExceeded) {
      std::cerr << "bound exceeded: " << e.what();
      if (!e.witness().empty()) {
        std::cerr << " witness {" << join_indices(e.witness()) << "}";
      }
      std::cerr << '\n';
      return kExitInconclusive;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
