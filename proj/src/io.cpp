#include "actlab/io.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "actlab/error.hpp"

namespace actlab {

namespace {

struct ContentLine {
  int number = 0;
  std::string text;
};

std::vector<ContentLine> content_lines(const std::string& text) {
  std::vector<ContentLine> out;
  std::istringstream stream(text);
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    out.push_back({number, line});
  }
  return out;
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

int parse_int(const std::string& token, int line) {
  size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (consumed != token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::vector<Idx> parse_row(const ContentLine& line, int expected) {
  std::vector<std::string> tokens = tokens_of(line.text);
  if (static_cast<int>(tokens.size()) != expected) {
    throw ParseError(line.number,
                     "expected " + std::to_string(expected) +
                         " indices, got " + std::to_string(tokens.size()));
  }
  std::vector<Idx> row;
  row.reserve(tokens.size());
  for (const std::string& token : tokens) {
    row.push_back(parse_int(token, line.number));
  }
  return row;
}

void expect_keyword(const std::vector<std::string>& tokens, size_t at,
                    const std::string& keyword, int line) {
  if (at >= tokens.size() || tokens[at] != keyword) {
    throw ParseError(line, "expected '" + keyword + "' in the header");
  }
}

void check_name(const std::string& name, int line) {
  if (name.empty() || name[0] == '#') {
    throw ParseError(line, "missing name in the header");
  }
}

std::string join_row(const std::vector<Idx>& row) {
  std::ostringstream os;
  for (size_t i = 0; i < row.size(); ++i) {
    os << (i ? " " : "") << row[i];
  }
  return os.str();
}

}  // namespace

ActFileKind classify_act_text(const std::string& text) {
  std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty file");
  }
  std::vector<std::string> tokens = tokens_of(lines.front().text);
  if (!tokens.empty() && tokens.front() == "act") {
    return ActFileKind::Finite;
  }
  if (!tokens.empty() && tokens.front() == "natact") {
    return ActFileKind::Nat;
  }
  throw ParseError(lines.front().number,
                   "expected an 'act' or 'natact' header");
}

NamedMonoid parse_monoid(const std::string& text) {
  std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty file");
  }
  const ContentLine& header = lines.front();
  std::vector<std::string> tokens = tokens_of(header.text);
  if (tokens.empty() || tokens.front() != "monoid") {
    throw ParseError(header.number, "expected a 'monoid' header");
  }
  if (tokens.size() != 6) {
    throw ParseError(header.number,
                     "expected 'monoid <name> order <n> identity <i>'");
  }
  check_name(tokens[1], header.number);
  expect_keyword(tokens, 2, "order", header.number);
  expect_keyword(tokens, 4, "identity", header.number);
  int order = parse_int(tokens[3], header.number);
  int identity = parse_int(tokens[5], header.number);
  if (order < 1) {
    throw ParseError(header.number, "order must be positive");
  }
  if (static_cast<int>(lines.size()) != order + 1) {
    throw ParseError(header.number,
                     "expected " + std::to_string(order) + " table rows, got " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Idx>> table;
  table.reserve(static_cast<size_t>(order));
  for (int s = 0; s < order; ++s) {
    table.push_back(parse_row(lines[static_cast<size_t>(s) + 1], order));
  }
  return {tokens[1], FiniteMonoid::make(table, identity)};
}

NamedAct parse_act(const std::string& text, const MonoidPtr& monoid) {
  std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty file");
  }
  const ContentLine& header = lines.front();
  std::vector<std::string> tokens = tokens_of(header.text);
  if (tokens.empty() || tokens.front() != "act") {
    throw ParseError(header.number, "expected an 'act' header");
  }
  if (tokens.size() != 6) {
    throw ParseError(header.number,
                     "expected 'act <name> over <monoid-name> size <m>'");
  }
  check_name(tokens[1], header.number);
  expect_keyword(tokens, 2, "over", header.number);
  check_name(tokens[3], header.number);
  expect_keyword(tokens, 4, "size", header.number);
  int size = parse_int(tokens[5], header.number);
  if (size < 1) {
    throw ParseError(header.number, "size must be positive");
  }
  if (static_cast<int>(lines.size()) != size + 1) {
    throw ParseError(header.number,
                     "expected " + std::to_string(size) + " action rows, got " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Idx>> action;
  action.reserve(static_cast<size_t>(size));
  for (int x = 0; x < size; ++x) {
    action.push_back(
        parse_row(lines[static_cast<size_t>(x) + 1], monoid->order()));
  }
  return {tokens[1], tokens[3], FiniteAct::make(monoid, action)};
}

std::string act_monoid_name(const std::string& text) {
  std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty file");
  }
  const ContentLine& header = lines.front();
  std::vector<std::string> tokens = tokens_of(header.text);
  if (tokens.size() != 6 || tokens.front() != "act" || tokens[2] != "over") {
    throw ParseError(header.number,
                     "expected 'act <name> over <monoid-name> size <m>'");
  }
  check_name(tokens[3], header.number);
  return tokens[3];
}

NamedNatAct parse_nat_act(const std::string& text) {
  std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty file");
  }
  const ContentLine& header = lines.front();
  std::vector<std::string> tokens = tokens_of(header.text);
  if (tokens.empty() || tokens.front() != "natact") {
    throw ParseError(header.number, "expected a 'natact' header");
  }
  if (tokens.size() != 4) {
    throw ParseError(header.number, "expected 'natact <name> size <m>'");
  }
  check_name(tokens[1], header.number);
  expect_keyword(tokens, 2, "size", header.number);
  int size = parse_int(tokens[3], header.number);
  if (size < 1) {
    throw ParseError(header.number, "size must be positive");
  }
  if (lines.size() != 2) {
    throw ParseError(header.number, "expected exactly one 'step' line");
  }
  const ContentLine& step_line = lines[1];
  std::vector<std::string> step_tokens = tokens_of(step_line.text);
  if (step_tokens.empty() || step_tokens.front() != "step") {
    throw ParseError(step_line.number, "expected a 'step' line");
  }
  if (static_cast<int>(step_tokens.size()) != size + 1) {
    throw ParseError(step_line.number,
                     "expected " + std::to_string(size) + " indices, got " +
                         std::to_string(step_tokens.size() - 1));
  }
  std::vector<Idx> step;
  step.reserve(static_cast<size_t>(size));
  for (size_t i = 1; i < step_tokens.size(); ++i) {
    step.push_back(parse_int(step_tokens[i], step_line.number));
  }
  return {tokens[1], NatAct::make(step)};
}

std::string serialize_monoid(const NamedMonoid& m) {
  std::ostringstream os;
  os << "monoid " << m.name << " order " << m.monoid->order() << " identity "
     << m.monoid->identity() << '\n';
  for (Idx s = 0; s < m.monoid->order(); ++s) {
    std::vector<Idx> row;
    for (Idx t = 0; t < m.monoid->order(); ++t) {
      row.push_back(m.monoid->mul(s, t));
    }
    os << join_row(row) << '\n';
  }
  return os.str();
}

std::string serialize_act(const NamedAct& a) {
  std::ostringstream os;
  os << "act " << a.name << " over " << a.monoid_name << " size "
     << a.act->size() << '\n';
  const MonoidPtr& m = a.act->monoid();
  for (Idx x = 0; x < a.act->size(); ++x) {
    std::vector<Idx> row;
    for (Idx s = 0; s < m->order(); ++s) {
      row.push_back(a.act->act(x, s));
    }
    os << join_row(row) << '\n';
  }
  return os.str();
}

std::string serialize_nat_act(const NamedNatAct& x) {
  std::ostringstream os;
  os << "natact " << x.name << " size " << x.act.size << '\n';
  os << "step";
  for (Idx i : x.act.step) {
    os << ' ' << i;
  }
  os << '\n';
  return os.str();
}

}  // namespace actlab
