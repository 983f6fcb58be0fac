// JSON wire formats.
//
//   KAssignment        {"n","m","k","lists_uprime":[[..]..],"lists_a":[[..]..]}
//   EquitableColoring  {"colors_uprime":[..],"colors_a":[..]}
//   SpectrumReport     {"n","m","entries":[{"k","status","rule"}..]}
//   OracleVerdict      {"status","witness":<KAssignment|null>,
//                       "assignments_examined","colorings_examined"}
//
// The *FromJson functions throw StructuralError naming the offending field.

#ifndef EQCHOOSE_JSON_IO_H_
#define EQCHOOSE_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "eqchoose/colorer.h"
#include "eqchoose/core.h"
#include "eqchoose/criteria.h"
#include "eqchoose/oracle.h"

namespace eqchoose {

using Json = nlohmann::json;

Json ToJson(const KAssignment& a);
KAssignment KAssignmentFromJson(const Json& j);

Json ToJson(const EquitableColoring& c);
EquitableColoring ColoringFromJson(const Json& j);

Json ToJson(const ChoosabilityVerdict& v);
ChoosabilityVerdict VerdictFromJson(const Json& j);

Json ToJson(const SpectrumReport& r);
SpectrumReport SpectrumFromJson(const Json& j);

Json ToJson(const OracleVerdict& v);
OracleVerdict OracleVerdictFromJson(const Json& j);

Json ToJson(const CheckResult& r);

// One object per line: {"t","phase","color","vertices":["u1","v3",..]}.
std::string TraceToJsonLines(const std::vector<TraceStep>& trace);

// Reads and parses a file; StructuralError on I/O or syntax failure.
Json ReadJsonFile(const std::string& path);

}  // namespace eqchoose

#endif  // EQCHOOSE_JSON_IO_H_
