#include "eqchoose/colorer.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "eqchoose/criteria.h"

namespace eqchoose {

namespace {

bool Contains(const ColorList& list, Color c) {
  return std::binary_search(list.begin(), list.end(), c);
}

void Erase(ColorList& list, Color c) {
  auto it = std::lower_bound(list.begin(), list.end(), c);
  if (it != list.end() && *it == c) list.erase(it);
}

// Lowest color present in at least `threshold` of the selected lists.
std::optional<Color> LowestFrequentColor(std::span<const ColorList> lists,
                                         std::span<const int> selected,
                                         std::int64_t threshold) {
  std::map<Color, std::int64_t> freq;
  for (int v : selected) {
    for (Color c : lists[v]) ++freq[c];
  }
  for (const auto& [c, count] : freq) {
    if (count >= threshold) return c;
  }
  return std::nullopt;
}

std::vector<Vertex> AVertices(std::span<const int> ids) {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back({Side::kA, i});
  return out;
}

// Greedy distinct representatives: walk the lists in order, taking the
// lowest color not yet taken. Callers guarantee each list is longer than
// the number of lists before it.
std::vector<Color> DistinctRepresentatives(std::span<const ColorList> lists) {
  std::set<Color> taken;
  std::vector<Color> out;
  out.reserve(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    auto it = std::find_if(lists[i].begin(), lists[i].end(),
                           [&](Color c) { return !taken.contains(c); });
    if (it == lists[i].end()) {
      throw InvariantViolation("no free color for distinct representative " +
                               std::to_string(i + 1));
    }
    taken.insert(*it);
    out.push_back(*it);
  }
  return out;
}

// Runs GreedySigmaColor on a subset of a-side vertices and writes the result
// back, translating trace ids.
void FinishWithSigmaGreedy(std::vector<ColorList>& residual,
                           std::span<const int> remaining, int eta,
                           std::int64_t sigma, int t_offset,
                           std::vector<Color>& colors_a,
                           std::vector<TraceStep>& trace) {
  std::vector<ColorList> sub;
  sub.reserve(remaining.size());
  for (int v : remaining) sub.push_back(residual[v]);
  SigmaColoring part;
  try {
    part = GreedySigmaColor(sub, eta, sigma);
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string("sigma-greedy gate failed: ") +
                             e.what());
  }
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    colors_a[remaining[i]] = part.colors[i];
  }
  int t = t_offset;
  for (const GreedyRound& round : part.trace.rounds) {
    std::vector<int> ids;
    for (int i : round.vertices) ids.push_back(remaining[i]);
    trace.push_back({"sigma", ++t, round.color, AVertices(ids)});
  }
  for (int i : part.trace.leftover) {
    const int v = remaining[i];
    trace.push_back({"greedy", t + 1, colors_a[v], {{Side::kA, v}}});
  }
}

// Exhaustive search over all colorings; only used for tiny instances.
std::optional<EquitableColoring> SmallCaseSearch(const KAssignment& l) {
  const int n = l.n();
  const int total = l.instance().num_vertices();
  const std::int64_t bound = EquityBound(l.instance(), l.k());
  std::vector<Color> chosen(total);
  std::map<Color, std::pair<int, int>> uses;  // (u-side, a-side)

  auto list_of = [&](int i) -> const ColorList& {
    return i < n ? l.lists_uprime()[i] : l.lists_a()[i - n];
  };
  auto recurse = [&](auto&& self, int i) -> bool {
    if (i == total) return true;
    const bool on_u = i < n;
    for (Color c : list_of(i)) {
      auto& [u, a] = uses[c];
      if ((on_u ? a : u) > 0 || u + a >= bound) continue;
      (on_u ? u : a) += 1;
      chosen[i] = c;
      if (self(self, i + 1)) return true;
      (on_u ? u : a) -= 1;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return EquitableColoring{{chosen.begin(), chosen.begin() + n},
                           {chosen.begin() + n, chosen.end()}};
}

}  // namespace

SigmaColoring GreedySigmaColor(std::span<const ColorList> lists, int eta,
                               std::int64_t sigma) {
  if (eta < 1 || sigma < 1) {
    throw PreconditionError("sigma-greedy needs eta >= 1 and sigma >= 1");
  }
  if (static_cast<std::int64_t>(lists.size()) > sigma * eta) {
    throw PreconditionError(
        "sigma-greedy: " + std::to_string(lists.size()) +
        " vertices exceed sigma*eta = " + std::to_string(sigma * eta));
  }
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (static_cast<int>(lists[i].size()) < eta) {
      throw PreconditionError("sigma-greedy: list " + std::to_string(i + 1) +
                              " has fewer than eta colors");
    }
  }

  const int count = static_cast<int>(lists.size());
  std::vector<ColorList> residual(lists.begin(), lists.end());
  for (ColorList& list : residual) Normalize(list);
  std::vector<int> uncolored(count);
  for (int i = 0; i < count; ++i) uncolored[i] = i;

  SigmaColoring out;
  out.colors.assign(count, Color{-1});
  while (!uncolored.empty()) {
    const std::optional<Color> c =
        LowestFrequentColor(residual, uncolored, sigma);
    if (!c) break;
    GreedyRound round{*c, {}};
    std::vector<int> still;
    for (int v : uncolored) {
      if (static_cast<std::int64_t>(round.vertices.size()) < sigma &&
          Contains(residual[v], *c)) {
        round.vertices.push_back(v);
        out.colors[v] = *c;
      } else {
        Erase(residual[v], *c);
        still.push_back(v);
      }
    }
    uncolored = std::move(still);
    out.trace.rounds.push_back(std::move(round));
  }

  // Every color now lies in fewer than sigma residual lists, so taking any
  // residual color keeps each class below sigma.
  for (int v : uncolored) {
    if (residual[v].empty()) {
      throw InvariantViolation("sigma-greedy: residual list of vertex " +
                               std::to_string(v + 1) + " is empty");
    }
    out.colors[v] = residual[v].front();
    out.trace.leftover.push_back(v);
  }
  return out;
}

ColoringOutcome ColorKnmMain(const KAssignment& assignment) {
  const int n = assignment.n();
  const int m = assignment.m();
  const int k = assignment.k();
  if (!HoldsThmMain(n, m, k)) {
    throw PreconditionError("main construction needs m <= ceil((m+n)/k)*(k-n)");
  }
  const std::int64_t sigma = EquityBound(assignment.instance(), k);

  ColoringOutcome out;
  out.coloring.colors_uprime = DistinctRepresentatives(assignment.lists_uprime());
  for (int i = 0; i < n; ++i) {
    out.trace.push_back({"uprime", 0, out.coloring.colors_uprime[i],
                         {{Side::kUPrime, i}}});
  }

  std::vector<ColorList> residual = assignment.lists_a();
  for (ColorList& list : residual) {
    for (Color c : out.coloring.colors_uprime) Erase(list, c);
  }
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  out.coloring.colors_a.assign(m, Color{-1});
  FinishWithSigmaGreedy(residual, all, k - n, sigma, 0, out.coloring.colors_a,
                   out.trace);
  return out;
}

PairCounts ComputePairCounts(const KAssignment& assignment) {
  if (assignment.n() != 2) throw PreconditionError("pair counts need n == 2");
  const ColorList& first = assignment.lists_uprime()[0];
  const ColorList& second = assignment.lists_uprime()[1];
  PairCounts counts;
  counts.beta.assign(first.size(),
                     std::vector<std::int64_t>(second.size(), 0));
  counts.gamma.reserve(assignment.m());
  for (const ColorList& list : assignment.lists_a()) {
    std::vector<std::size_t> hits_first;
    std::vector<std::size_t> hits_second;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (Contains(list, first[i])) hits_first.push_back(i);
    }
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (Contains(list, second[j])) hits_second.push_back(j);
    }
    for (std::size_t i : hits_first) {
      for (std::size_t j : hits_second) ++counts.beta[i][j];
    }
    counts.gamma.push_back(static_cast<std::int64_t>(hits_first.size()) *
                           static_cast<std::int64_t>(hits_second.size()));
  }
  return counts;
}

PairChoice ChooseDisjointPair(const KAssignment& assignment) {
  if (assignment.n() != 2) throw PreconditionError("pair choice needs n == 2");
  const ColorList& first = assignment.lists_uprime()[0];
  const ColorList& second = assignment.lists_uprime()[1];
  for (Color c : first) {
    if (Contains(second, c)) {
      throw PreconditionError("pair choice needs disjoint u-lists; color " +
                              std::to_string(c) + " is shared");
    }
  }

  const PairCounts counts = ComputePairCounts(assignment);
#ifdef EQCHOOSE_CHECK_INVARIANTS
  std::int64_t beta_sum = 0;
  for (const auto& row : counts.beta) {
    for (std::int64_t b : row) beta_sum += b;
  }
  std::int64_t gamma_sum = 0;
  for (std::int64_t g : counts.gamma) gamma_sum += g;
  if (beta_sum != gamma_sum) {
    throw InvariantViolation("pair counts: sum beta != sum gamma");
  }
#endif

  const std::int64_t m = assignment.m();
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (4 * counts.beta[i][j] <= m) {
        return {first[i], second[j], counts.beta[i][j]};
      }
    }
  }
  throw InvariantViolation("no color pair with 4*beta <= m");
}

namespace {

ColoringOutcome ColorK2mDisjoint(const KAssignment& assignment) {
  const int m = assignment.m();
  const int k = assignment.k();
  const std::int64_t sigma = EquityBound(assignment.instance(), k);

  const PairChoice pair = ChooseDisjointPair(assignment);
  ColoringOutcome out;
  out.coloring.colors_uprime = {pair.cq, pair.cr};
  out.trace.push_back({"uprime", 0, pair.cq, {{Side::kUPrime, 0}}});
  out.trace.push_back({"uprime", 0, pair.cr, {{Side::kUPrime, 1}}});

  std::vector<ColorList> residual = assignment.lists_a();
  for (ColorList& list : residual) {
    Erase(list, pair.cq);
    Erase(list, pair.cr);
  }
  std::vector<Color>& colors_a = out.coloring.colors_a;
  colors_a.assign(m, Color{-1});
  std::vector<bool> colored(m, false);

  auto uncolored = [&] {
    std::vector<int> ids;
    for (int v = 0; v < m; ++v) {
      if (!colored[v]) ids.push_back(v);
    }
    return ids;
  };
  auto deficient = [&](int t) {
    std::vector<int> ids;
    const int floor_len = k - 1 - t;
    for (int v = 0; v < m; ++v) {
      if (!colored[v] && static_cast<int>(residual[v].size()) == floor_len) {
        ids.push_back(v);
      }
    }
    return ids;
  };
  auto strip_from_uncolored = [&](Color c) {
    for (int v = 0; v < m; ++v) {
      if (!colored[v]) Erase(residual[v], c);
    }
  };

  // Rounds on the deficient set. It cannot survive to t = k-2: that would
  // need (k-2)*sigma deficient vertices, more than the m/4 the pair allows.
  int t = 1;
  std::vector<int> deficient_set = deficient(t);
  std::vector<int> previous = deficient_set;
  while (true) {
#ifdef EQCHOOSE_CHECK_INVARIANTS
    if (!std::includes(previous.begin(), previous.end(),
                       deficient_set.begin(), deficient_set.end())) {
      throw InvariantViolation("deficient sets are not nested");
    }
#endif
    const std::optional<Color> c =
        LowestFrequentColor(residual, deficient_set, sigma);
    if (!c) break;
    if (t >= k - 2) {
      throw InvariantViolation("deficient-set process did not stop by k-2");
    }
    std::vector<int> picked;
    for (int v : deficient_set) {
      if (static_cast<std::int64_t>(picked.size()) == sigma) break;
      if (Contains(residual[v], *c)) picked.push_back(v);
    }
    for (int v : picked) {
      colored[v] = true;
      colors_a[v] = *c;
    }
    strip_from_uncolored(*c);
    out.trace.push_back({"round", t, *c, AVertices(picked)});
    ++t;
    previous = std::move(deficient_set);
    deficient_set = deficient(t);
  }
  const int alpha = t;

  std::vector<int> remaining = uncolored();
  const std::optional<Color> patch =
      LowestFrequentColor(residual, remaining, sigma);
  if (!patch) {
    for (int v : remaining) {
      if (residual[v].empty()) {
        throw InvariantViolation("empty residual list after the rounds");
      }
      colors_a[v] = residual[v].front();
      out.trace.push_back({"greedy", alpha, colors_a[v], {{Side::kA, v}}});
    }
    return out;
  }

  // Patch round: every deficient holder of the patch color, topped up to
  // exactly sigma uses with the lowest-index other holders.
  std::vector<int> patched;
  for (int v : deficient_set) {
    if (Contains(residual[v], *patch)) patched.push_back(v);
  }
  if (static_cast<std::int64_t>(patched.size()) >= sigma) {
    throw InvariantViolation("patch color reaches sigma inside the deficient set");
  }
  const std::int64_t need = sigma - static_cast<std::int64_t>(patched.size());
  std::vector<int> extra;
  for (int v : remaining) {
    if (static_cast<std::int64_t>(extra.size()) == need) break;
    if (Contains(residual[v], *patch) &&
        !std::binary_search(patched.begin(), patched.end(), v)) {
      extra.push_back(v);
    }
  }
  if (static_cast<std::int64_t>(extra.size()) < need) {
    throw InvariantViolation("patch color has only " +
                             std::to_string(patched.size() + extra.size()) +
                             " holders, need " + std::to_string(sigma));
  }
  patched.insert(patched.end(), extra.begin(), extra.end());
  std::sort(patched.begin(), patched.end());
  for (int v : patched) {
    colored[v] = true;
    colors_a[v] = *patch;
  }
  strip_from_uncolored(*patch);
  out.trace.push_back({"patch", alpha, *patch, AVertices(patched)});

  remaining = uncolored();
  FinishWithSigmaGreedy(residual, remaining, k - 1 - alpha, sigma, alpha, colors_a,
                   out.trace);
  return out;
}

}  // namespace

ColoringOutcome ColorK2m(const KAssignment& assignment) {
  if (assignment.n() != 2) throw PreconditionError("K_{2,m} colorer needs n == 2");
  const int m = assignment.m();
  const int k = assignment.k();
  if (!HoldsStarOrK2m(2, m, k)) {
    throw PreconditionError("K_{2,m} colorer needs m <= ceil((m+2)/k)*(k-1)");
  }

  if (k >= m + 2) {
    std::vector<ColorList> lists = assignment.lists_uprime();
    lists.insert(lists.end(), assignment.lists_a().begin(),
                 assignment.lists_a().end());
    const std::vector<Color> colors = DistinctRepresentatives(lists);
    ColoringOutcome out;
    out.coloring.colors_uprime.assign(colors.begin(), colors.begin() + 2);
    out.coloring.colors_a.assign(colors.begin() + 2, colors.end());
    for (int i = 0; i < 2 + m; ++i) {
      const Vertex v = i < 2 ? Vertex{Side::kUPrime, i} : Vertex{Side::kA, i - 2};
      out.trace.push_back({"distinct", 0, colors[i], {v}});
    }
    return out;
  }

  if (k <= 2) {
    std::optional<EquitableColoring> found = SmallCaseSearch(assignment);
    if (!found) {
      throw InvariantViolation("small-case search found no equitable coloring");
    }
    return {*std::move(found), {}};
  }

  const ColorList& first = assignment.lists_uprime()[0];
  const ColorList& second = assignment.lists_uprime()[1];
  std::optional<Color> shared;
  for (Color c : first) {
    if (Contains(second, c)) {
      shared = c;
      break;
    }
  }
  if (!shared) return ColorK2mDisjoint(assignment);

  ColoringOutcome out;
  out.coloring.colors_uprime = {*shared, *shared};
  out.trace.push_back({"uprime", 0, *shared,
                       {{Side::kUPrime, 0}, {Side::kUPrime, 1}}});
  std::vector<ColorList> residual = assignment.lists_a();
  for (ColorList& list : residual) Erase(list, *shared);
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  out.coloring.colors_a.assign(m, Color{-1});
  FinishWithSigmaGreedy(residual, all, k - 1,
                   EquityBound(assignment.instance(), k), 0,
                   out.coloring.colors_a, out.trace);
  return out;
}

KAssignment SwapSides(const KAssignment& assignment) {
  return KAssignment(Instance(assignment.m(), assignment.n()), assignment.k(),
                     assignment.lists_a(), assignment.lists_uprime());
}

EquitableColoring SwapSides(const EquitableColoring& coloring) {
  return {coloring.colors_a, coloring.colors_uprime};
}

}  // namespace eqchoose
