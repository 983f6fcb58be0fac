#include "eqchoose/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

namespace eqchoose {

namespace {

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) {
    throw StructuralError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

std::int64_t IntField(const Json& j, const char* name) {
  const Json& v = Field(j, name);
  if (!v.is_number_integer()) {
    throw StructuralError(std::string("field \"") + name +
                          "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

int SmallIntField(const Json& j, const char* name) {
  const std::int64_t v = IntField(j, name);
  if (v < 1 || v > (1 << 20)) {
    throw StructuralError(std::string("field \"") + name +
                          "\" must be a positive integer of sane size");
  }
  return static_cast<int>(v);
}

std::string StringField(const Json& j, const char* name) {
  const Json& v = Field(j, name);
  if (!v.is_string()) {
    throw StructuralError(std::string("field \"") + name +
                          "\" must be a string");
  }
  return v.get<std::string>();
}

std::vector<Color> Colors(const Json& j, const std::string& what) {
  if (!j.is_array()) throw StructuralError(what + " must be an array");
  std::vector<Color> out;
  out.reserve(j.size());
  for (const Json& c : j) {
    if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
      throw StructuralError(what + " must hold non-negative integers");
    }
    out.push_back(c.get<Color>());
  }
  return out;
}

std::vector<ColorList> Lists(const Json& j, const char* name) {
  const Json& v = Field(j, name);
  if (!v.is_array()) {
    throw StructuralError(std::string("field \"") + name +
                          "\" must be an array of lists");
  }
  std::vector<ColorList> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(Colors(v[i], std::string(name) + "[" + std::to_string(i) +
                                   "]"));
  }
  return out;
}

template <typename F>
auto Translate(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw StructuralError(e.what());
  }
}

}  // namespace

Json ToJson(const KAssignment& a) {
  return {{"n", a.n()},
          {"m", a.m()},
          {"k", a.k()},
          {"lists_uprime", a.lists_uprime()},
          {"lists_a", a.lists_a()}};
}

KAssignment KAssignmentFromJson(const Json& j) {
  const int n = SmallIntField(j, "n");
  const int m = SmallIntField(j, "m");
  const int k = SmallIntField(j, "k");
  return KAssignment(Instance(n, m), k, Lists(j, "lists_uprime"),
                     Lists(j, "lists_a"));
}

Json ToJson(const EquitableColoring& c) {
  return {{"colors_uprime", c.colors_uprime}, {"colors_a", c.colors_a}};
}

EquitableColoring ColoringFromJson(const Json& j) {
  return {Colors(Field(j, "colors_uprime"), "colors_uprime"),
          Colors(Field(j, "colors_a"), "colors_a")};
}

Json ToJson(const ChoosabilityVerdict& v) {
  return {{"status", ToString(v.status)}, {"rule", ToString(v.rule)}};
}

ChoosabilityVerdict VerdictFromJson(const Json& j) {
  return Translate([&] {
    return ChoosabilityVerdict{ParseStatus(StringField(j, "status")),
                               ParseRule(StringField(j, "rule"))};
  });
}

Json ToJson(const SpectrumReport& r) {
  Json entries = Json::array();
  for (const SpectrumEntry& e : r.entries) {
    Json row = ToJson(e.verdict);
    row["k"] = e.k;
    entries.push_back(std::move(row));
  }
  return {{"n", r.n}, {"m", r.m}, {"entries", std::move(entries)}};
}

SpectrumReport SpectrumFromJson(const Json& j) {
  SpectrumReport r{IntField(j, "n"), IntField(j, "m"), 0, {}};
  const Json& entries = Field(j, "entries");
  if (!entries.is_array()) throw StructuralError("entries must be an array");
  for (const Json& e : entries) {
    r.entries.push_back({IntField(e, "k"), VerdictFromJson(e)});
  }
  r.k_max = static_cast<std::int64_t>(r.entries.size());
  return r;
}

Json ToJson(const OracleVerdict& v) {
  return {{"status", ToString(v.status)},
          {"witness", v.witness ? ToJson(*v.witness) : Json(nullptr)},
          {"assignments_examined", v.assignments_examined},
          {"colorings_examined", v.colorings_examined}};
}

OracleVerdict OracleVerdictFromJson(const Json& j) {
  OracleVerdict v;
  v.status = Translate(
      [&] { return ParseOracleStatus(StringField(j, "status")); });
  const Json& witness = Field(j, "witness");
  if (!witness.is_null()) v.witness = KAssignmentFromJson(witness);
  v.assignments_examined = IntField(j, "assignments_examined");
  v.colorings_examined = IntField(j, "colorings_examined");
  return v;
}

Json ToJson(const CheckResult& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) violations.push_back(v.Describe());
  return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

std::string TraceToJsonLines(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const TraceStep& step : trace) {
    Json ids = Json::array();
    for (const Vertex& v : step.vertices) ids.push_back(ToString(v));
    const Json line = {{"t", step.t},
                       {"phase", step.phase},
                       {"color", step.color},
                       {"vertices", std::move(ids)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

}  // namespace eqchoose
