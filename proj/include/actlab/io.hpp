#pragma once

#include <string>

#include "actlab/act.hpp"
#include "actlab/monoid.hpp"
#include "actlab/nat_act.hpp"

namespace actlab {

// Line-oriented text formats. `#` starts a comment line, blank lines are
// skipped, all indices are 0-based. Serialization emits the canonical form
// (single spaces, no comments), so serialize(parse(text)) is idempotent.
//
//   monoid <name> order <n> identity <i>
//   <n rows of n indices; row s lists the products s*t>
//
//   act <name> over <monoid-name> size <m>
//   <m rows of order-many indices; row x lists x*s>
//
//   natact <name> size <m>
//   step <m indices, the image of each element>

struct NamedMonoid {
  std::string name;
  MonoidPtr monoid;
};

struct NamedAct {
  std::string name;
  std::string monoid_name;
  ActPtr act;
};

struct NamedNatAct {
  std::string name;
  NatAct act;
};

enum class ActFileKind { Finite, Nat };

// Reports which grammar the first content line of an act file uses, so
// callers know whether a monoid file must be resolved first.
ActFileKind classify_act_text(const std::string& text);

NamedMonoid parse_monoid(const std::string& text);

// The act grammar names its monoid but does not embed the table; the caller
// resolves `monoid_name` and passes the parsed monoid in.
NamedAct parse_act(const std::string& text, const MonoidPtr& monoid);

// Reads just the monoid name out of an act header, for resolving the monoid
// file before the full parse.
std::string act_monoid_name(const std::string& text);

NamedNatAct parse_nat_act(const std::string& text);

std::string serialize_monoid(const NamedMonoid& m);
std::string serialize_act(const NamedAct& a);
std::string serialize_nat_act(const NamedNatAct& x);

}  // namespace actlab
