// Arithmetic choosability criteria for K_{n,m}.
//
// All predicates use exact integer arithmetic; interval endpoints are exact
// rationals. Nothing here touches floating point.

#ifndef EQCHOOSE_CRITERIA_H_
#define EQCHOOSE_CRITERIA_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace eqchoose {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t CeilDiv(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

// Sufficient condition: m <= ceil((m+n)/k) * (k-n).
bool HoldsThmMain(std::int64_t n, std::int64_t m, std::int64_t k);

// Sufficient condition for NOT choosable: m > ceil((m+n)/k) * (k-1).
bool HoldsThmBadk(std::int64_t n, std::int64_t m, std::int64_t k);

// Known result for k >= max(n, m), silent on K_{2l+1,2l+1}.
bool HoldsKpw(std::int64_t n, std::int64_t m, std::int64_t k);

// The iff-inequality for K_{small,m} with small in {1, 2}:
// m <= ceil((m+small)/k) * (k-1).
bool HoldsStarOrK2m(std::int64_t small, std::int64_t m, std::int64_t k);

enum class Status { kYes, kNo, kUnknown };

enum class Rule {
  kThmMain,
  kThmBadk,
  kCorStar,
  kThmK2m,
  kKpwMaxdeg,
  kTrivialK1,
  kNone,
};

std::string_view ToString(Status s);
std::string_view ToString(Rule r);
// Throw std::invalid_argument on unknown names.
Status ParseStatus(std::string_view s);
Rule ParseRule(std::string_view s);

struct ChoosabilityVerdict {
  Status status = Status::kUnknown;
  Rule rule = Rule::kNone;

  friend bool operator==(const ChoosabilityVerdict&,
                         const ChoosabilityVerdict&) = default;
};

// Raised when a YES rule and a NO rule fire on the same input. The rules
// are exclusive, so this can only mean a bug in the predicates.
class CriteriaContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Combines the criteria, evaluating orientation-sensitive rules both ways.
// min(n,m) == 1 or 2 is decided by the iff-characterizations; otherwise the
// general sufficient conditions may leave the verdict UNKNOWN.
ChoosabilityVerdict Classify(std::int64_t n, std::int64_t m, std::int64_t k);

struct KInterval {
  enum class Kind { kYes, kNo };
  Rational lower;  // inclusive
  Rational upper;  // exclusive
  Kind kind;
  std::int64_t index_i;

  bool Contains(std::int64_t k) const { return lower <= k && Rational(k) < upper; }
};

// Smallest t >= 1 with t*t*n >= n + m, i.e. ceil(sqrt(1 + m/n)).
std::int64_t CeilSqrtOnePlusRatio(std::int64_t n, std::int64_t m);

// For i = 2 .. ceil(sqrt(1 + m/n)): [(m + i n)/i, (m + n)/(i - 1)).
std::vector<KInterval> YesIntervals(std::int64_t n, std::int64_t m);

// For i = n+1 .. n+m: [(m + n)/i, (m + i)/i).
std::vector<KInterval> NoIntervals(std::int64_t n, std::int64_t m);

struct SpectrumEntry {
  std::int64_t k;
  ChoosabilityVerdict verdict;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumReport {
  std::int64_t n;
  std::int64_t m;
  std::int64_t k_max;
  std::vector<SpectrumEntry> entries;  // k = 1 .. k_max in order

  friend bool operator==(const SpectrumReport&,
                         const SpectrumReport&) = default;
};

// Serial reference.
SpectrumReport SpectrumSerial(std::int64_t n, std::int64_t m,
                              std::int64_t k_max);

// OpenMP-parallel over k; identical output to SpectrumSerial.
SpectrumReport Spectrum(std::int64_t n, std::int64_t m, std::int64_t k_max);

}  // namespace eqchoose

#endif  // EQCHOOSE_CRITERIA_H_
