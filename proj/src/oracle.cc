#include "eqchoose/oracle.h"

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "eqchoose/criteria.h"

namespace eqchoose {

namespace {

using SmallList = std::vector<int>;

// Backtracking over compact color ids 0..num_colors-1.
class CompactSearch {
 public:
  CompactSearch(int n, int m, int k, int num_colors)
      : n_(n),
        total_(n + m),
        bound_(static_cast<int>(CeilDiv(n + m, k))),
        on_u_(num_colors, 0),
        on_a_(num_colors, 0),
        chosen_(n + m, -1) {}

  // lists[i] is the list of vertex i (u-side first).
  bool Run(std::span<const SmallList* const> lists, std::int64_t& nodes) {
    lists_ = lists;
    nodes_ = 0;
    std::fill(on_u_.begin(), on_u_.end(), 0);
    std::fill(on_a_.begin(), on_a_.end(), 0);
    const bool found = Place(0);
    nodes += nodes_;
    return found;
  }

  const std::vector<int>& chosen() const { return chosen_; }

 private:
  bool Place(int i) {
    if (i == total_) return true;
    const bool u_side = i < n_;
    std::vector<int>& mine = u_side ? on_u_ : on_a_;
    const std::vector<int>& other = u_side ? on_a_ : on_u_;
    for (int c : *lists_[i]) {
      if (other[c] > 0 || mine[c] >= bound_) continue;
      ++nodes_;
      ++mine[c];
      chosen_[i] = c;
      if (Place(i + 1)) return true;
      --mine[c];
    }
    return false;
  }

  int n_;
  int total_;
  int bound_;
  std::vector<int> on_u_;
  std::vector<int> on_a_;
  std::vector<int> chosen_;
  std::span<const SmallList* const> lists_;
  std::int64_t nodes_ = 0;
};

// Candidate lists per number of colors already introduced, sorted
// lexicographically: k-subsets whose new colors are exactly the next few
// unused labels.
class Enumeration {
 public:
  Enumeration(int n, int m, int k, int universe)
      : n_(n), m_(m), k_(k), universe_(universe),
        candidates_(universe + 1) {
    for (int used = 0; used <= universe; ++used) {
      std::vector<SmallList>& out = candidates_[used];
      for (int fresh = 0; fresh <= k && used + fresh <= universe; ++fresh) {
        const int old_count = k - fresh;
        if (old_count > used) continue;
        // All old_count-subsets of 0..used-1, then the fresh prefix.
        std::vector<int> pick(old_count);
        for (int i = 0; i < old_count; ++i) pick[i] = i;
        while (true) {
          SmallList list = pick;
          for (int f = 0; f < fresh; ++f) list.push_back(used + f);
          out.push_back(std::move(list));
          int i = old_count - 1;
          while (i >= 0 && pick[i] == used - old_count + i) --i;
          if (i < 0) break;
          ++pick[i];
          for (int j = i + 1; j < old_count; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
      std::sort(out.begin(), out.end());
    }
  }

  int n() const { return n_; }
  int total() const { return n_ + m_; }
  int universe() const { return universe_; }

  // Walks canonical sequences from position `pos` up to `depth`, calling
  // leaf(lists, used) on every complete prefix. Returns false if stopped.
  template <typename Leaf>
  bool Walk(std::vector<const SmallList*>& lists, int pos, int used,
            int depth, Leaf& leaf) const {
    if (pos == depth) return leaf(lists, used);
    const std::vector<SmallList>& cands = candidates_[used];
    auto it = cands.begin();
    if (pos != 0 && pos != n_) {
      it = std::lower_bound(cands.begin(), cands.end(), *lists[pos - 1]);
    }
    for (; it != cands.end(); ++it) {
      const int introduced = static_cast<int>(
          std::count_if(it->begin(), it->end(),
                        [used](int c) { return c >= used; }));
      lists[pos] = &*it;
      if (!Walk(lists, pos + 1, used + introduced, depth, leaf)) return false;
    }
    return true;
  }

 private:
  int n_;
  int m_;
  int k_;
  int universe_;
  std::vector<std::vector<SmallList>> candidates_;
};

KAssignment ToAssignment(int n, int m, int k,
                         std::span<const SmallList* const> lists) {
  std::vector<ColorList> uprime;
  std::vector<ColorList> a;
  for (int i = 0; i < n + m; ++i) {
    ColorList list(lists[i]->begin(), lists[i]->end());
    (i < n ? uprime : a).push_back(std::move(list));
  }
  return KAssignment(Instance(n, m), k, std::move(uprime), std::move(a));
}

// Outcome of walking one slice of the canonical order.
struct SliceResult {
  std::int64_t examined = 0;
  std::int64_t colorings = 0;
  bool capped = false;  // examined exceeded the allowance
  std::optional<KAssignment> witness;
};

// Examines assignments in order until a bad one, the end, or more than
// `allowance` assignments.
template <typename WalkFn>
SliceResult RunSlice(int n, int m, int k, int universe,
                     std::int64_t allowance, WalkFn&& walk) {
  SliceResult result;
  CompactSearch search(n, m, k, universe);
  auto leaf = [&](std::vector<const SmallList*>& lists, int) {
    if (++result.examined > allowance) {
      result.capped = true;
      return false;
    }
    if (!search.Run(lists, result.colorings)) {
      result.witness = ToAssignment(n, m, k, lists);
      return false;
    }
    return true;
  };
  walk(leaf);
  return result;
}

OracleVerdict VerdictFrom(const SliceResult& r) {
  OracleVerdict v;
  v.status = r.witness ? OracleStatus::kNotChoosable : OracleStatus::kChoosable;
  v.witness = r.witness;
  v.assignments_examined = r.examined;
  v.colorings_examined = r.colorings;
  return v;
}

struct Prefix {
  std::vector<const SmallList*> lists;
  int used;
};

// Slices are fixed by the instance alone, never by the worker count.
constexpr std::size_t kMinSlices = 256;
constexpr std::size_t kWaveSize = 64;

std::vector<Prefix> SplitIntoPrefixes(const Enumeration& e) {
  std::vector<Prefix> prefixes;
  for (int depth = 1; depth <= e.total(); ++depth) {
    prefixes.clear();
    std::vector<const SmallList*> lists(e.total(), nullptr);
    auto collect = [&](std::vector<const SmallList*>& l, int used) {
      prefixes.push_back({l, used});
      return true;
    };
    e.Walk(lists, 0, 0, depth, collect);
    if (prefixes.size() >= kMinSlices) break;
  }
  return prefixes;
}

void CheckArguments(int n, int m, int k) {
  static_cast<void>(Instance(n, m));
  if (k < 1) throw PreconditionError("k must be >= 1");
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::int64_t budget)
    : std::runtime_error("oracle budget of " + std::to_string(budget) +
                         " canonical assignments exceeded"),
      budget_(budget) {}

std::string_view ToString(OracleStatus s) {
  return s == OracleStatus::kChoosable ? "CHOOSABLE" : "NOT_CHOOSABLE";
}

OracleStatus ParseOracleStatus(std::string_view s) {
  if (s == "CHOOSABLE") return OracleStatus::kChoosable;
  if (s == "NOT_CHOOSABLE") return OracleStatus::kNotChoosable;
  throw std::invalid_argument("unknown oracle status: " + std::string(s));
}

std::optional<EquitableColoring> FindEquitableColoring(
    const KAssignment& assignment, std::int64_t* nodes) {
  std::vector<Color> palette;
  for (const auto* side : {&assignment.lists_uprime(), &assignment.lists_a()}) {
    for (const ColorList& list : *side) {
      palette.insert(palette.end(), list.begin(), list.end());
    }
  }
  Normalize(palette);
  auto compact = [&](Color c) {
    return static_cast<int>(
        std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
  };

  const int n = assignment.n();
  const int m = assignment.m();
  std::vector<SmallList> lists;
  lists.reserve(n + m);
  for (const auto* side : {&assignment.lists_uprime(), &assignment.lists_a()}) {
    for (const ColorList& list : *side) {
      SmallList small;
      for (Color c : list) small.push_back(compact(c));
      lists.push_back(std::move(small));
    }
  }
  std::vector<const SmallList*> ptrs;
  for (const SmallList& l : lists) ptrs.push_back(&l);

  CompactSearch search(n, m, assignment.k(), static_cast<int>(palette.size()));
  std::int64_t local = 0;
  const bool found = search.Run(ptrs, local);
  if (nodes) *nodes += local;
  if (!found) return std::nullopt;

  EquitableColoring out;
  for (int i = 0; i < n + m; ++i) {
    const Color c = palette[search.chosen()[i]];
    (i < n ? out.colors_uprime : out.colors_a).push_back(c);
  }
  return out;
}

KAssignment BadkCounterexample(int n, int m, int k) {
  CheckArguments(n, m, k);
  if (!HoldsThmBadk(n, m, k)) {
    throw PreconditionError(
        "uniform counterexample needs m > ceil((m+n)/k)*(k-1); otherwise the "
        "uniform assignment is colorable");
  }
  return KAssignment::Uniform(Instance(n, m), k);
}

int EnumerationUniverse(int n, int m, int k, const OracleOptions& options) {
  CheckArguments(n, m, k);
  const int cap = k * (n + m);
  const int universe =
      options.universe_size ? std::min(*options.universe_size, cap) : cap;
  if (universe < k) {
    throw PreconditionError("universe of " + std::to_string(universe) +
                            " colors cannot hold a list of " +
                            std::to_string(k));
  }
  return universe;
}

void ForEachCanonicalAssignment(
    int n, int m, int k, int universe,
    const std::function<bool(const KAssignment&)>& visit) {
  CheckArguments(n, m, k);
  if (universe < k) throw PreconditionError("universe smaller than k");
  const Enumeration e(n, m, k, universe);
  std::vector<const SmallList*> lists(e.total(), nullptr);
  auto leaf = [&](std::vector<const SmallList*>& l, int) {
    return visit(ToAssignment(n, m, k, l));
  };
  e.Walk(lists, 0, 0, e.total(), leaf);
}

OracleVerdict DecideChoosableSerial(int n, int m, int k,
                                    const OracleOptions& options) {
  const int universe = EnumerationUniverse(n, m, k, options);
  const Enumeration e(n, m, k, universe);
  SliceResult r = RunSlice(n, m, k, universe, options.budget, [&](auto& leaf) {
    std::vector<const SmallList*> lists(e.total(), nullptr);
    e.Walk(lists, 0, 0, e.total(), leaf);
  });
  if (r.capped) throw BudgetExceeded(options.budget);
  return VerdictFrom(r);
}

OracleVerdict DecideChoosable(int n, int m, int k,
                              const OracleOptions& options) {
  const int universe = EnumerationUniverse(n, m, k, options);
  const Enumeration e(n, m, k, universe);
  const std::vector<Prefix> prefixes = SplitIntoPrefixes(e);
  const int depth =
      prefixes.empty() ? 0
                       : static_cast<int>(std::count_if(
                             prefixes.front().lists.begin(),
                             prefixes.front().lists.end(),
                             [](const SmallList* l) { return l != nullptr; }));
  const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();

  SliceResult total;
  for (std::size_t wave = 0; wave < prefixes.size(); wave += kWaveSize) {
    const std::size_t end = std::min(prefixes.size(), wave + kWaveSize);
    const std::int64_t allowance = options.budget - total.examined;
    std::vector<SliceResult> results(end - wave);
    std::string failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t p = wave; p < end; ++p) {
      try {
        results[p - wave] = RunSlice(n, m, k, universe, allowance,
                                     [&](auto& leaf) {
          std::vector<const SmallList*> lists = prefixes[p].lists;
          e.Walk(lists, depth, prefixes[p].used, e.total(), leaf);
        });
      } catch (const std::exception& ex) {
#pragma omp critical
        failure = ex.what();
      }
    }
    if (!failure.empty()) throw InvariantViolation(failure);

    // Fold in canonical order; later slices of the wave may have run but
    // never count once an earlier one decides.
    for (SliceResult& r : results) {
      total.examined += r.examined;
      total.colorings += r.colorings;
      // A slice may run past the serial budget point because it only knows
      // the allowance at the start of its wave; the budget check comes first.
      if (r.capped || total.examined > options.budget) {
        throw BudgetExceeded(options.budget);
      }
      if (r.witness) {
        total.witness = std::move(r.witness);
        return VerdictFrom(total);
      }
    }
  }
  return VerdictFrom(total);
}

}  // namespace eqchoose
