#include "eqchoose/criteria.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "eqchoose/core.h"

namespace eqchoose {

namespace {

void RequirePositive(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 1 || m < 1 || k < 1) {
    throw PreconditionError("criteria need n, m, k >= 1");
  }
}

constexpr std::array<std::pair<Status, std::string_view>, 3> kStatusNames{{
    {Status::kYes, "YES"},
    {Status::kNo, "NO"},
    {Status::kUnknown, "UNKNOWN"},
}};

constexpr std::array<std::pair<Rule, std::string_view>, 7> kRuleNames{{
    {Rule::kThmMain, "THM_MAIN"},
    {Rule::kThmBadk, "THM_BADK"},
    {Rule::kCorStar, "COR_STAR"},
    {Rule::kThmK2m, "THM_K2M"},
    {Rule::kKpwMaxdeg, "KPW_MAXDEG"},
    {Rule::kTrivialK1, "TRIVIAL_K1"},
    {Rule::kNone, "NONE"},
}};

template <typename Enum, std::size_t N>
std::string_view NameOf(const std::array<std::pair<Enum, std::string_view>, N>&
                            table,
                        Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum ValueOf(const std::array<std::pair<Enum, std::string_view>, N>& table,
             std::string_view name, const char* what) {
  for (const auto& [e, s] : table) {
    if (s == name) return e;
  }
  throw std::invalid_argument(std::string("unknown ") + what + ": " +
                              std::string(name));
}

}  // namespace

std::string_view ToString(Status s) { return NameOf(kStatusNames, s); }
std::string_view ToString(Rule r) { return NameOf(kRuleNames, r); }
Status ParseStatus(std::string_view s) {
  return ValueOf(kStatusNames, s, "status");
}
Rule ParseRule(std::string_view s) { return ValueOf(kRuleNames, s, "rule"); }

bool HoldsThmMain(std::int64_t n, std::int64_t m, std::int64_t k) {
  RequirePositive(n, m, k);
  return m <= CeilDiv(m + n, k) * (k - n);
}

bool HoldsThmBadk(std::int64_t n, std::int64_t m, std::int64_t k) {
  RequirePositive(n, m, k);
  return m > CeilDiv(m + n, k) * (k - 1);
}

bool HoldsKpw(std::int64_t n, std::int64_t m, std::int64_t k) {
  RequirePositive(n, m, k);
  const bool odd_balanced = n == m && n % 2 == 1;
  return k >= std::max(n, m) && !odd_balanced;
}

bool HoldsStarOrK2m(std::int64_t small, std::int64_t m, std::int64_t k) {
  RequirePositive(small, m, k);
  return m <= CeilDiv(m + small, k) * (k - 1);
}

ChoosabilityVerdict Classify(std::int64_t n, std::int64_t m, std::int64_t k) {
  RequirePositive(n, m, k);
  const std::int64_t small = std::min(n, m);
  const std::int64_t large = std::max(n, m);

  if (small <= 2) {
    const Rule rule = small == 1 ? Rule::kCorStar : Rule::kThmK2m;
    return {HoldsStarOrK2m(small, large, k) ? Status::kYes : Status::kNo,
            rule};
  }

  ChoosabilityVerdict yes{Status::kUnknown, Rule::kNone};
  if (HoldsThmMain(n, m, k) || HoldsThmMain(m, n, k)) {
    yes = {Status::kYes, Rule::kThmMain};
  } else if (HoldsKpw(n, m, k)) {
    yes = {Status::kYes, Rule::kKpwMaxdeg};
  }
  const bool no = HoldsThmBadk(n, m, k) || HoldsThmBadk(m, n, k);

  if (yes.status == Status::kYes && no) {
    throw CriteriaContradiction(
        "criteria contradict at n=" + std::to_string(n) + " m=" +
        std::to_string(m) + " k=" + std::to_string(k) + ": " +
        std::string(ToString(yes.rule)) + " and THM_BADK both fire");
  }
  if (no) return {Status::kNo, Rule::kThmBadk};
  return yes;
}

std::int64_t CeilSqrtOnePlusRatio(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw PreconditionError("need n, m >= 1");
  std::int64_t t = 1;
  while (t * t * n < n + m) ++t;
  return t;
}

std::vector<KInterval> YesIntervals(std::int64_t n, std::int64_t m) {
  const std::int64_t top = CeilSqrtOnePlusRatio(n, m);
  std::vector<KInterval> out;
  for (std::int64_t i = 2; i <= top; ++i) {
    out.push_back({Rational(m + i * n, i), Rational(m + n, i - 1),
                   KInterval::Kind::kYes, i});
  }
  return out;
}

std::vector<KInterval> NoIntervals(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw PreconditionError("need n, m >= 1");
  std::vector<KInterval> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = n + 1; i <= n + m; ++i) {
    out.push_back({Rational(m + n, i), Rational(m + i, i),
                   KInterval::Kind::kNo, i});
  }
  return out;
}

SpectrumReport SpectrumSerial(std::int64_t n, std::int64_t m,
                              std::int64_t k_max) {
  if (k_max < 1) throw PreconditionError("spectrum needs k_max >= 1");
  SpectrumReport report{n, m, k_max, {}};
  report.entries.reserve(static_cast<std::size_t>(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    report.entries.push_back({k, Classify(n, m, k)});
  }
  return report;
}

SpectrumReport Spectrum(std::int64_t n, std::int64_t m, std::int64_t k_max) {
  if (k_max < 1) throw PreconditionError("spectrum needs k_max >= 1");
  RequirePositive(n, m, 1);
  SpectrumReport report{n, m, k_max,
                        std::vector<SpectrumEntry>(
                            static_cast<std::size_t>(k_max))};
  // Classify only throws on an internal contradiction; capture it and
  // rethrow outside the parallel region.
  std::string failure;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 1; k <= k_max; ++k) {
    try {
      report.entries[k - 1] = {k, Classify(n, m, k)};
    } catch (const CriteriaContradiction& e) {
#pragma omp critical
      failure = e.what();
    }
  }
  if (!failure.empty()) throw CriteriaContradiction(failure);
  return report;
}

}  // namespace eqchoose
