// Brute-force ground truth: exhaustive coloring search for one assignment,
// and a full equitable k-choosability decision by enumerating k-assignments
// up to color relabeling and same-side vertex permutation.

#ifndef EQCHOOSE_ORACLE_H_
#define EQCHOOSE_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "eqchoose/core.h"

namespace eqchoose {

// Complete backtracking search, u-side vertices first. `nodes`, when given,
// is incremented once per tentative (vertex, color) placement.
std::optional<EquitableColoring> FindEquitableColoring(
    const KAssignment& assignment, std::int64_t* nodes = nullptr);

// The uniform assignment {0..k-1} everywhere. Requires
// m > ceil((m+n)/k) * (k-1), under which it has no equitable L-coloring.
KAssignment BadkCounterexample(int n, int m, int k);

enum class OracleStatus { kChoosable, kNotChoosable };

std::string_view ToString(OracleStatus s);
OracleStatus ParseOracleStatus(std::string_view s);

struct OracleVerdict {
  OracleStatus status = OracleStatus::kChoosable;
  std::optional<KAssignment> witness;  // set iff kNotChoosable
  std::int64_t assignments_examined = 0;
  std::int64_t colorings_examined = 0;

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

struct OracleOptions {
  // Colors available to the enumeration; capped at k*(n+m), which already
  // realizes every intersection pattern.
  std::optional<int> universe_size;
  // Maximum number of canonical assignments examined.
  std::int64_t budget = 10'000'000;
  // Worker threads for DecideChoosable; 0 means the OpenMP default.
  int jobs = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::int64_t budget);
  std::int64_t budget() const { return budget_; }

 private:
  std::int64_t budget_;
};

// Effective universe size for the given options; throws PreconditionError if
// it is smaller than k.
int EnumerationUniverse(int n, int m, int k, const OracleOptions& options);

// Calls `visit` on every canonical k-assignment of K_{n,m} over colors
// 0..universe-1, in lexicographic order of the concatenated lists
// (u-side first). Returning false from `visit` stops the walk.
//
// Canonical means: colors first appear in increasing order, and lists on the
// same side are lexicographically nondecreasing. Every k-assignment is
// equivalent to at least one canonical one; some classes are visited more
// than once.
void ForEachCanonicalAssignment(
    int n, int m, int k, int universe,
    const std::function<bool(const KAssignment&)>& visit);

// Serial reference. Stops at the first assignment in canonical order with
// no equitable L-coloring and returns it as the witness. Throws
// BudgetExceeded when more than options.budget assignments would be needed.
OracleVerdict DecideChoosableSerial(int n, int m, int k,
                                    const OracleOptions& options = {});

// OpenMP version; returns exactly what DecideChoosableSerial returns for
// any number of workers.
OracleVerdict DecideChoosable(int n, int m, int k,
                              const OracleOptions& options = {});

}  // namespace eqchoose

#endif  // EQCHOOSE_ORACLE_H_
