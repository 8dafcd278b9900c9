#include "actlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

#include "actlab/classes.hpp"
#include "actlab/colimit.hpp"
#include "actlab/congruence.hpp"
#include "actlab/covers.hpp"
#include "actlab/error.hpp"
#include "actlab/monoid.hpp"
#include "actlab/nat_act.hpp"
#include "actlab/quotients.hpp"

namespace actlab {

namespace {

constexpr int kNatSuiteSize = 6;
constexpr int kMaxChainInstances = 60;

void validate_config(const RunConfig& config) {
  if (config.max_monoid_order < 1 || config.max_act_size < 1 ||
      config.family_size_bound < 1 || config.envelope_cap < 1 ||
      config.parallelism < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "every run bound must be at least 1");
  }
}

ActPtr self_act(const MonoidPtr& m) {
  const int n = m->order();
  std::vector<std::vector<Idx>> action(static_cast<size_t>(n));
  for (Idx x = 0; x < n; ++x) {
    for (Idx s = 0; s < n; ++s) {
      action[static_cast<size_t>(x)].push_back(m->mul(x, s));
    }
  }
  return FiniteAct::make(m, action);
}

ActPtr one_point_act(const MonoidPtr& m) {
  return FiniteAct::make(
      m, {std::vector<Idx>(static_cast<size_t>(m->order()), 0)});
}

// Carrier 0..size-1 over the two-element semilattice: the identity fixes
// everything and the absorbing element sends everything to the top point.
ActPtr absorbing_tower(const MonoidPtr& sl2, int size) {
  std::vector<std::vector<Idx>> action(static_cast<size_t>(size));
  for (Idx x = 0; x < size; ++x) {
    action[static_cast<size_t>(x)] = {x, size - 1};
  }
  return FiniteAct::make(sl2, action);
}

std::string join_indices(const std::vector<Idx>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[static_cast<size_t>(i)];
  }
  return os.str();
}

std::string monoid_blob(const FiniteMonoid& m) {
  std::ostringstream os;
  os << "monoid{order=" << m.order() << ";identity=" << m.identity()
     << ";table=" << join_indices(m.flat_table()) << "}";
  return os.str();
}

std::string act_blob(const FiniteAct& a) {
  std::ostringstream os;
  os << "act{size=" << a.size() << ";action=" << join_indices(a.flat_action())
     << "}";
  return os.str();
}

std::string nat_blob(const NatAct& x) {
  std::ostringstream os;
  os << "natact{size=" << x.size << ";step=" << join_indices(x.step) << "}";
  return os.str();
}

struct TaskResult {
  SuiteLine line;
  std::exception_ptr error;
};

// Runs every task, distributing over `parallelism` workers; results keep
// task order. The first stored exception (in task order) is rethrown.
std::vector<SuiteLine> run_tasks(
    const std::vector<std::function<SuiteLine()>>& tasks, int parallelism) {
  std::vector<TaskResult> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t index = next.fetch_add(1);
      if (index >= tasks.size()) {
        return;
      }
      try {
        results[index].line = tasks[index]();
      } catch (...) {
        results[index].error = std::current_exception();
      }
    }
  };
  int workers = std::min<int>(parallelism, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  std::vector<SuiteLine> lines;
  lines.reserve(results.size());
  for (TaskResult& r : results) {
    if (r.error) {
      std::rethrow_exception(r.error);
    }
    lines.push_back(std::move(r.line));
  }
  return lines;
}

// Monoid instances in canonical order with stable labels.
struct MonoidInstance {
  std::string label;
  MonoidPtr monoid;
};

std::vector<MonoidInstance> monoid_instances(int max_order) {
  std::vector<MonoidInstance> out;
  for (int order = 1; order <= max_order; ++order) {
    auto monoids = enumerate_monoids(order, true);
    for (size_t i = 0; i < monoids.size(); ++i) {
      std::ostringstream label;
      label << "order " << order << " monoid " << i;
      out.push_back({label.str(), monoids[i]});
    }
  }
  return out;
}

int nat_component_count(const NatAct& x) {
  std::vector<int> parent(static_cast<size_t>(x.size));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      a = parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
    }
    return a;
  };
  for (Idx i = 0; i < x.size; ++i) {
    parent[static_cast<size_t>(find(i))] =
        find(x.step[static_cast<size_t>(i)]);
  }
  int roots = 0;
  for (Idx i = 0; i < x.size; ++i) {
    if (find(i) == i) {
      ++roots;
    }
  }
  return roots;
}

std::vector<Idx> greatest_recurrent_subset(const NatAct& x) {
  std::vector<Idx> best;
  for (unsigned mask = 1; mask < (1u << x.size); ++mask) {
    std::vector<Idx> members;
    for (Idx p = 0; p < x.size; ++p) {
      if (mask & (1u << p)) {
        members.push_back(p);
      }
    }
    std::vector<Idx> image;
    for (Idx p : members) {
      image.push_back(x.step[static_cast<size_t>(p)]);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image == members && members.size() > best.size()) {
      best = members;
    }
  }
  return best;
}

SuiteLine free_cover_line(const MonoidInstance& inst,
                          const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  bool group = monoid_property(*m, MonoidKind::Group).holds;
  ActPtr theta = one_point_act(m);
  ActMap g = free_precover(theta);
  bool epi = g.is_epi();
  bool coessential = is_coessential(g).ok;
  auto cover = search_cover(theta, ClassLabel::Free, config.family_size_bound);
  bool found = cover.has_value();
  bool replayed = !found || cover->replay();

  line.pass = epi && replayed && (found == group) && (coessential == group);
  std::ostringstream os;
  os << "group " << (group ? "yes" : "no") << "; free cover of the one-point"
     << " act " << (found ? "found" : "none") << "; evaluation map"
     << " coessential " << (coessential ? "yes" : "no");
  if (!line.pass) {
    os << "; " << monoid_blob(*m);
  }
  line.detail = os.str();
  return line;
}

SuiteLine divisible_lemma_line(const MonoidInstance& inst,
                               const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  bool self_divisible = act_in_class(self_act(m), ClassLabel::Divisible).member;
  bool property_divisible = monoid_property(*m, MonoidKind::Divisible).holds;

  bool invertible = true;
  Idx offending = -1;
  for (Idx c = 0; c < m->order() && invertible; ++c) {
    if (!element_property(*m, c, ElementKind::LeftCancellative)) {
      continue;
    }
    bool has_left_inverse = false;
    for (Idx x = 0; x < m->order() && !has_left_inverse; ++x) {
      has_left_inverse = m->mul(x, c) == m->identity();
    }
    if (!has_left_inverse) {
      invertible = false;
      offending = c;
    }
  }

  bool all_acts = true;
  std::string act_witness;
  int acts_checked = 0;
  for (const ActPtr& x : enumerate_acts_up_to(m, config.max_act_size, true)) {
    ++acts_checked;
    ClassVerdict verdict = act_in_class(x, ClassLabel::Divisible);
    if (!verdict.member) {
      all_acts = false;
      act_witness = act_blob(*x) + " witness{" +
                    join_indices(verdict.witness) + "}";
      break;
    }
  }

  line.pass = property_divisible == self_divisible &&
              self_divisible == invertible && invertible == all_acts;
  std::ostringstream os;
  os << "self act divisible " << (self_divisible ? "yes" : "no")
     << "; left cancellative elements left invertible "
     << (invertible ? "yes" : "no") << "; all " << acts_checked
     << " acts divisible " << (all_acts ? "yes" : "no");
  if (!line.pass) {
    os << "; " << monoid_blob(*m);
    if (offending >= 0) {
      os << " witness{" << offending << "}";
    }
    if (!act_witness.empty()) {
      os << " " << act_witness;
    }
  }
  line.detail = os.str();
  return line;
}

SuiteLine divisible_cover_monoid_line(const MonoidInstance& inst,
                                      const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  int acts_checked = 0;
  int covered = 0;
  for (const ActPtr& a : enumerate_acts_up_to(m, config.max_act_size, true)) {
    ++acts_checked;
    auto cert = divisible_cover(a, config.family_size_bound);
    auto largest = largest_divisible_subact(a);
    if (cert.has_value() != largest.has_value()) {
      line.pass = false;
      line.detail = "cover and largest divisible subact disagree; " +
                    act_blob(*a) + "; " + monoid_blob(*m);
      return line;
    }
    if (!cert) {
      continue;
    }
    ++covered;
    bool agree = cert->map.image() == largest->members;
    bool kind_ok = cert->kind == CertificateKind::UmpCover;
    bool replayed = cert->replay();
    bool precover = is_precover_rel(cert->map, cert->family).ok();
    bool cover_ok = is_cover(cert->map, cert->family).ok();
    bool ump = has_ump(cert->map, cert->family).ok();
    if (!(agree && kind_ok && replayed && precover && cover_ok && ump)) {
      line.pass = false;
      std::ostringstream os;
      os << "certificate failed re-checks (image agrees "
         << (agree ? "yes" : "no") << ", replay " << (replayed ? "yes" : "no")
         << ", precover " << (precover ? "yes" : "no") << ", cover "
         << (cover_ok ? "yes" : "no") << ", unique factorization "
         << (ump ? "yes" : "no") << "); " << act_blob(*a) << "; "
         << monoid_blob(*m);
      line.detail = os.str();
      return line;
    }
  }
  std::ostringstream os;
  os << acts_checked << " acts; " << covered
     << " with a divisible subact, every certificate re-certified";
  line.detail = os.str();
  return line;
}

SuiteLine divisible_cover_nat_line(int size, const RunConfig& config) {
  SuiteLine line;
  {
    std::ostringstream label;
    label << "natact size " << size;
    line.instance = label.str();
  }
  int checked = 0;
  for (const NatAct& x : enumerate_nat_acts(size, true)) {
    ++checked;
    NatCoverCertificate cert =
        nat_divisible_cover(x, config.family_size_bound);
    bool image_ok = cert.inclusion == greatest_recurrent_subset(x);
    if (!(cert.precover && cert.cover && cert.ump && image_ok)) {
      line.pass = false;
      std::ostringstream os;
      os << "certificate failed (precover " << (cert.precover ? "yes" : "no")
         << ", cover " << (cert.cover ? "yes" : "no")
         << ", unique factorization " << (cert.ump ? "yes" : "no")
         << ", image matches the recurrent subset "
         << (image_ok ? "yes" : "no") << "); " << nat_blob(x);
      if (!cert.detail.empty()) {
        os << "; " << cert.detail;
      }
      line.detail = os.str();
      return line;
    }
  }
  std::ostringstream os;
  os << checked << " step functions; every eventual-image inclusion"
     << " certified as a unique-factorization cover";
  line.detail = os.str();
  return line;
}

SuiteLine injective_necessary_line(const MonoidInstance& inst,
                                   const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  bool reversible = monoid_property(*m, MonoidKind::LeftReversible).holds;
  bool left_zero = monoid_property(*m, MonoidKind::HasLeftZero).holds;

  if (reversible && left_zero) {
    for (const ActPtr& x :
         enumerate_acts_up_to(m, config.max_act_size, true)) {
      if (fixed_points(*x).empty()) {
        line.pass = false;
        line.detail = "left zero present but an act has no fixed point; " +
                      act_blob(*x) + "; " + monoid_blob(*m);
        return line;
      }
    }
    line.detail =
        "left reversible with a left zero; every act within bounds has a"
        " fixed point";
    return line;
  }

  TestFamily family =
      class_family(m, ClassLabel::Injective, config.family_size_bound);

  if (!reversible) {
    // A coproduct of injective acts that is not injective can have no
    // injective precover: a precover would make it a retract of an
    // injective act. Exhibit one and confirm the bounded search agrees.
    for (size_t i = 0; i < family.members.size(); ++i) {
      for (size_t j = i; j < family.members.size(); ++j) {
        ActPtr cp = coproduct({family.members[i], family.members[j]}).act;
        if (act_in_class(cp, ClassLabel::Injective).member) {
          continue;
        }
        bool none_certify = true;
        for (const ActPtr& c : family.members) {
          for (const ActMap& g : enumerate_homs(c, cp)) {
            if (is_precover_rel(g, family).ok()) {
              none_certify = false;
            }
          }
        }
        line.pass = none_certify;
        std::ostringstream os;
        os << "not left reversible; coproduct of injective members " << i
           << " and " << j << " is not injective and admits no relative"
           << " precover within the family";
        if (!line.pass) {
          os << " (a candidate certified unexpectedly); " << act_blob(*cp)
             << "; " << monoid_blob(*m);
        }
        line.detail = os.str();
        return line;
      }
    }
    line.detail =
        "not left reversible; no coproduct counterexample within bounds";
    return line;
  }

  // Left reversible without a left zero: no injective act can map into the
  // monoid acting on itself, since the image of a fixed point would be a
  // left zero.
  ActPtr s = self_act(m);
  for (const ActPtr& c : family.members) {
    if (!enumerate_homs(c, s).empty()) {
      line.pass = false;
      line.detail =
          "an injective act maps into the self act despite the missing left"
          " zero; " +
          act_blob(*c) + "; " + monoid_blob(*m);
      return line;
    }
  }
  std::ostringstream os;
  os << "no left zero; all " << family.members.size()
     << " injective family members have empty hom-sets into the self act,"
     << " so it has no injective precover";
  line.detail = os.str();
  return line;
}

SuiteLine injective_coproduct_line(const MonoidInstance& inst,
                                   const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  bool reversible = monoid_property(*m, MonoidKind::LeftReversible).holds;
  bool left_zero = monoid_property(*m, MonoidKind::HasLeftZero).holds;

  auto acts = enumerate_acts_up_to(m, config.max_act_size, true);
  std::vector<bool> injective(acts.size());
  for (size_t i = 0; i < acts.size(); ++i) {
    injective[i] = act_in_class(acts[i], ClassLabel::Injective).member;
  }

  if (!reversible) {
    for (size_t i = 0; i < acts.size(); ++i) {
      for (size_t j = i; j < acts.size(); ++j) {
        if (!injective[i] || !injective[j]) {
          continue;
        }
        ActPtr cp = coproduct({acts[i], acts[j]}).act;
        if (!act_in_class(cp, ClassLabel::Injective).member) {
          std::ostringstream os;
          os << "not left reversible; injective components with"
             << " non-injective coproduct exhibited: " << act_blob(*acts[i])
             << " + " << act_blob(*acts[j]);
          line.detail = os.str();
          return line;
        }
      }
    }
    line.detail =
        "not left reversible; no coproduct counterexample within bounds";
    return line;
  }

  int pairs = 0;
  for (size_t i = 0; i < acts.size(); ++i) {
    for (size_t j = i; j < acts.size(); ++j) {
      ActPtr cp = coproduct({acts[i], acts[j]}).act;
      bool whole = act_in_class(cp, ClassLabel::Injective).member;
      bool parts = injective[i] && injective[j];
      ++pairs;
      bool ok = left_zero ? (whole == parts) : (!parts || whole);
      if (!ok) {
        line.pass = false;
        std::ostringstream os;
        os << "decomposition failed (components injective "
           << (parts ? "yes" : "no") << ", coproduct injective "
           << (whole ? "yes" : "no") << "); " << act_blob(*acts[i]) << " + "
           << act_blob(*acts[j]) << "; " << monoid_blob(*m);
        line.detail = os.str();
        return line;
      }
    }
  }
  std::ostringstream os;
  os << pairs << " coproduct pairs; injectivity "
     << (left_zero ? "equivalent to" : "implied by")
     << " componentwise injectivity";
  line.detail = os.str();
  return line;
}

SuiteLine injective_dircolim_line(const MonoidInstance& inst,
                                  const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;

  NoetherianCertificate noeth = noetherian_certificate(self_act(m));
  if (!noeth.all_finitely_generated) {
    line.pass = false;
    line.detail = "self act is not Noetherian; " + monoid_blob(*m);
    return line;
  }

  std::vector<ActPtr> members =
      class_family(m, ClassLabel::Injective, config.max_act_size).members;
  int systems = 0;
  bool capped = false;

  auto check_system = [&](const std::vector<ActPtr>& chain_acts,
                          const std::vector<ActMap>& steps) {
    std::map<std::pair<int, int>, ActMap> transitions;
    const int n = static_cast<int>(chain_acts.size());
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n),
                                                         false));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      transitions.emplace(std::make_pair(i, i + 1),
                          steps[static_cast<size_t>(i)]);
    }
    if (n == 3) {
      transitions.emplace(std::make_pair(0, 2), compose(steps[1], steps[0]));
    }
    SystemPtr system =
        DirectSystem::make(chain_acts, std::move(leq), std::move(transitions));
    Cocone cocone = colimit(system);
    bool inj = act_in_class(cocone.apex, ClassLabel::Injective).member;
    bool top = find_act_isomorphism(cocone.apex, chain_acts.back()).has_value();
    UniversalityReport universal =
        verify_universal(cocone, config.family_size_bound);
    ++systems;
    if (!(inj && top && universal.ok)) {
      line.pass = false;
      std::ostringstream os;
      os << "directed colimit check failed (injective " << (inj ? "yes" : "no")
         << ", collapses to the top act " << (top ? "yes" : "no")
         << ", universal " << (universal.ok ? "yes" : "no") << "); "
         << act_blob(*cocone.apex) << "; " << monoid_blob(*m);
      line.detail = os.str();
      return false;
    }
    return true;
  };

  for (size_t i = 0; i < members.size() && !capped && line.pass; ++i) {
    for (size_t j = 0; j < members.size() && !capped && line.pass; ++j) {
      for (const ActMap& f : enumerate_homs(members[i], members[j])) {
        if (!line.pass || systems >= kMaxChainInstances) {
          capped = systems >= kMaxChainInstances;
          break;
        }
        if (!check_system({members[i], members[j]}, {f})) {
          break;
        }
        for (size_t k = 0; k < members.size() && !capped && line.pass; ++k) {
          for (const ActMap& g : enumerate_homs(members[j], members[k])) {
            if (systems >= kMaxChainInstances) {
              capped = true;
              break;
            }
            if (!check_system({members[i], members[j], members[k]}, {f, g})) {
              break;
            }
          }
        }
      }
    }
  }
  if (!line.pass) {
    return line;
  }
  std::ostringstream os;
  os << "Noetherian (congruence count " << noeth.congruence_count << "); "
     << systems << " directed systems of injective acts"
     << (capped ? " (canonical prefix)" : "")
     << "; every colimit injective and universal";
  line.detail = os.str();
  return line;
}

SuiteLine sigma_congruence_monoid_line(const MonoidInstance& inst,
                                       const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  bool crm = monoid_property(*m, MonoidKind::RightOre).holds;
  int acts_checked = 0;
  for (const ActPtr& x : enumerate_acts_up_to(m, config.max_act_size, true)) {
    ++acts_checked;
    WeakTorsionRelation rel = weak_torsion_relation(x);
    if (!rel.is_congruence) {
      line.pass = false;
      line.detail = "relation is not a congruence: " + rel.detail + "; " +
                    act_blob(*x) + "; " + monoid_blob(*m);
      return line;
    }
  }
  std::ostringstream os;
  os << "common right multiples " << (crm ? "yes" : "no") << "; "
     << acts_checked << " acts; weak torsion relation always a congruence";
  line.detail = os.str();
  return line;
}

SuiteLine sigma_congruence_nat_line(int size) {
  SuiteLine line;
  {
    std::ostringstream label;
    label << "natact size " << size;
    line.instance = label.str();
  }
  int checked = 0;
  for (const NatAct& x : enumerate_nat_acts(size, true)) {
    ++checked;
    WeakTorsionRelation rel = nat_weak_torsion(x);
    if (!rel.is_congruence) {
      line.pass = false;
      line.detail = "relation is not a congruence: " + rel.detail + "; " +
                    nat_blob(x);
      return line;
    }
  }
  std::ostringstream os;
  os << checked << " step functions; merged-future relation always a"
     << " congruence";
  line.detail = os.str();
  return line;
}

SuiteLine quotients_monoid_line(const MonoidInstance& inst,
                                const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  int envelope_cap = std::min(config.envelope_cap, config.max_act_size);
  QuotientTheoryReport report =
      quotient_theory_check(m, config.max_act_size, envelope_cap);
  line.pass = report.ok;
  std::ostringstream os;
  os << report.acts_checked << " acts; base isomorphic to its quotient "
     << (report.base_isomorphic_to_quotient ? "yes" : "no")
     << "; quotient a group " << (report.quotient_is_group ? "yes" : "no")
     << "; " << report.skipped.size() << " envelope checks skipped";
  if (!report.ok) {
    for (const std::string& l : report.lines) {
      if (l.rfind("FAIL", 0) == 0) {
        os << "; " << l;
        break;
      }
    }
    os << "; " << monoid_blob(*m);
  }
  line.detail = os.str();
  return line;
}

SuiteLine quotients_nat_line(int size) {
  SuiteLine line;
  {
    std::ostringstream label;
    label << "natact size " << size;
    line.instance = label.str();
  }
  int checked = 0;
  for (const NatAct& x : enumerate_nat_acts(size, true)) {
    ++checked;
    NatQuotientAct q = nat_act_of_quotients(x);
    WeakTorsionRelation rel = nat_weak_torsion(x);
    bool members_ok = q.members == greatest_recurrent_subset(x);
    bool kernel_ok = true;
    for (Idx a = 0; a < x.size && kernel_ok; ++a) {
      for (Idx b = 0; b < x.size && kernel_ok; ++b) {
        kernel_ok = rel.related(a, b) ==
                    (q.theta[static_cast<size_t>(a)] ==
                     q.theta[static_cast<size_t>(b)]);
      }
    }
    bool mono_ok =
        q.theta_mono ==
        nat_class_check(x, ClassLabel::WeaklyTorsionFree).member;
    bool components_ok =
        nat_component_count(x) == nat_component_count(q.act);
    bool split_ok = true;
    if (q.theta_mono && q.act.size == x.size) {
      std::vector<Idx> split = nat_splitting_map(x);
      for (Idx a = 0; a < x.size && split_ok; ++a) {
        split_ok = split[static_cast<size_t>(
                       q.theta[static_cast<size_t>(a)])] == a;
      }
    }
    if (!(members_ok && kernel_ok && mono_ok && components_ok && split_ok)) {
      line.pass = false;
      std::ostringstream os;
      os << "quotient act check failed (carrier matches recurrent subset "
         << (members_ok ? "yes" : "no") << ", theta kernel is the weak"
         << " torsion relation " << (kernel_ok ? "yes" : "no")
         << ", theta mono tracks the class " << (mono_ok ? "yes" : "no")
         << ", component count preserved " << (components_ok ? "yes" : "no")
         << ", splitting inverts theta " << (split_ok ? "yes" : "no")
         << "); " << nat_blob(x);
      line.detail = os.str();
      return line;
    }
  }
  std::ostringstream os;
  os << checked << " step functions; quotient act is the eventual image"
     << " with theta kernel the weak torsion relation";
  line.detail = os.str();
  return line;
}

SuiteLine pwi_regular_line(const MonoidInstance& inst,
                           const RunConfig& config) {
  SuiteLine line{inst.label, true, ""};
  const MonoidPtr& m = inst.monoid;
  bool regular = monoid_property(*m, MonoidKind::Regular).holds;
  int acts_checked = 0;
  for (const ActPtr& x : enumerate_acts_up_to(m, config.max_act_size, true)) {
    ++acts_checked;
    ClassVerdict by_witness =
        act_in_class(x, ClassLabel::PrincipallyWeaklyInjective);
    ClassVerdict by_extension = pwi_by_extension(x);
    if (by_witness.member != by_extension.member) {
      line.pass = false;
      line.detail = "witness criterion and extension test disagree; " +
                    act_blob(*x) + "; " + monoid_blob(*m);
      return line;
    }
    if (regular && !by_witness.member) {
      line.pass = false;
      line.detail =
          "regular monoid with a non principally-weakly-injective act; " +
          act_blob(*x) + " witness{" + join_indices(by_witness.witness) +
          "}; " + monoid_blob(*m);
      return line;
    }
  }
  std::ostringstream os;
  os << "regular " << (regular ? "yes" : "no") << "; " << acts_checked
     << " acts; criteria agree" << (regular ? " and all acts qualify" : "");
  line.detail = os.str();
  return line;
}

SuiteLine example_six_line(int size) {
  SuiteLine line;
  {
    std::ostringstream label;
    label << "size " << size;
    line.instance = label.str();
  }
  MonoidPtr sl2 = FiniteMonoid::make({{0, 1}, {1, 1}}, 0);
  ActPtr x = absorbing_tower(sl2, size);
  bool indecomposable = indecomposable_components(x).size() == 1;
  bool torsion_free = act_in_class(x, ClassLabel::TorsionFree).member;
  bool weakly = act_in_class(x, ClassLabel::WeaklyTorsionFree).member;
  bool injective = act_in_class(x, ClassLabel::Injective).member;
  line.pass = indecomposable && torsion_free && weakly && injective;
  std::ostringstream os;
  os << "indecomposable " << (indecomposable ? "yes" : "no")
     << "; torsion free " << (torsion_free ? "yes" : "no")
     << "; weakly torsion free " << (weakly ? "yes" : "no") << "; injective "
     << (injective ? "yes" : "no");
  if (!line.pass) {
    os << "; " << act_blob(*x);
  }
  line.detail = os.str();
  return line;
}

using MonoidLineFn = SuiteLine (*)(const MonoidInstance&, const RunConfig&);

std::vector<std::function<SuiteLine()>> monoid_tasks(
    const RunConfig& config, MonoidLineFn fn) {
  std::vector<std::function<SuiteLine()>> tasks;
  for (const MonoidInstance& inst : monoid_instances(config.max_monoid_order)) {
    tasks.push_back([inst, config, fn]() { return fn(inst, config); });
  }
  return tasks;
}

void append_nat_tasks(std::vector<std::function<SuiteLine()>>& tasks,
                      const RunConfig& config,
                      SuiteLine (*fn)(int, const RunConfig&)) {
  for (int size = 1; size <= kNatSuiteSize; ++size) {
    tasks.push_back([size, config, fn]() { return fn(size, config); });
  }
}

std::string url_encode(const std::string& in) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : in) {
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 15]);
    }
  }
  return out;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const SuiteLine& l) { return l.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "free-cover",         "divisible-lemma",   "divisible-cover",
      "injective-necessary", "injective-coproduct", "injective-dircolim",
      "sigma-congruence",   "quotients",         "pwi-regular",
      "example-6",
  };
  return names;
}

SuiteReport theorem_suite(const std::string& name, const RunConfig& config) {
  validate_config(config);
  SuiteReport report;
  report.suite = name;
  std::vector<std::function<SuiteLine()>> tasks;

  if (name == "free-cover") {
    tasks = monoid_tasks(config, free_cover_line);
  } else if (name == "divisible-lemma") {
    tasks = monoid_tasks(config, divisible_lemma_line);
  } else if (name == "divisible-cover") {
    tasks = monoid_tasks(config, divisible_cover_monoid_line);
    append_nat_tasks(tasks, config, [](int size, const RunConfig& c) {
      return divisible_cover_nat_line(size, c);
    });
  } else if (name == "injective-necessary") {
    tasks = monoid_tasks(config, injective_necessary_line);
  } else if (name == "injective-coproduct") {
    tasks = monoid_tasks(config, injective_coproduct_line);
  } else if (name == "injective-dircolim") {
    tasks = monoid_tasks(config, injective_dircolim_line);
  } else if (name == "sigma-congruence") {
    tasks = monoid_tasks(config, sigma_congruence_monoid_line);
    append_nat_tasks(tasks, config, [](int size, const RunConfig&) {
      return sigma_congruence_nat_line(size);
    });
  } else if (name == "quotients") {
    tasks = monoid_tasks(config, quotients_monoid_line);
    append_nat_tasks(tasks, config, [](int size, const RunConfig&) {
      return quotients_nat_line(size);
    });
  } else if (name == "pwi-regular") {
    tasks = monoid_tasks(config, pwi_regular_line);
  } else if (name == "example-6") {
    for (int size = 1; size <= 8; ++size) {
      tasks.push_back([size]() { return example_six_line(size); });
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite: " + name);
  }

  report.lines = run_tasks(tasks, config.parallelism);
  return report;
}

std::string render_report(const SuiteReport& report, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Tsv) {
    for (const SuiteLine& line : report.lines) {
      os << line.instance << '\t' << report.suite << '\t'
         << (line.pass ? "PASS" : "FAIL") << '\t' << url_encode(line.detail)
         << '\n';
    }
    return os.str();
  }
  os << "suite " << report.suite << '\n';
  for (const SuiteLine& line : report.lines) {
    os << (line.pass ? "PASS " : "FAIL ") << line.instance << ": "
       << line.detail << '\n';
  }
  os << "result " << (report.pass() ? "PASS" : "FAIL") << " ("
     << report.lines.size() << " instances)\n";
  return os.str();
}

}  // namespace actlab
