// Constructive equitable L-colorings.
//
// Every choice the underlying existence arguments leave open ("pick a color",
// "color some holders") is resolved as lowest color id, then lowest vertex
// index, so identical inputs always give identical colorings and traces.

#ifndef EQCHOOSE_COLORER_H_
#define EQCHOOSE_COLORER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqchoose/core.h"

namespace eqchoose {

// One round of the sigma-bounded greedy process on an edgeless vertex set.
// Vertex ids are indices into the lists passed to GreedySigmaColor.
struct GreedyRound {
  Color color;
  std::vector<int> vertices;
};

struct GreedyTrace {
  std::vector<GreedyRound> rounds;
  std::vector<int> leftover;  // colored one by one after the rounds stop
};

struct SigmaColoring {
  std::vector<Color> colors;
  GreedyTrace trace;
};

// Colors an edgeless vertex set from the given lists so that no color is
// used more than `sigma` times. While some color lies in at least sigma of
// the uncolored lists, the lowest such color goes to its sigma
// lowest-index holders and is then removed from every other list; the
// remaining vertices take the lowest color left in their list.
//
// Requires eta >= 1, sigma >= 1, every list of size >= eta and
// lists.size() <= sigma * eta; throws PreconditionError otherwise.
SigmaColoring GreedySigmaColor(std::span<const ColorList> lists, int eta,
                               std::int64_t sigma);

// A step of a whole-graph construction, for debugging traces.
struct TraceStep {
  std::string phase;  // "uprime", "round", "patch", "sigma", "greedy", ...
  int t;
  Color color;
  std::vector<Vertex> vertices;
};

struct ColoringOutcome {
  EquitableColoring coloring;
  std::vector<TraceStep> trace;
};

// Requires m <= ceil((m+n)/k) * (k-n). Colors the u-side with distinct
// colors, removes them from the a-side lists, and finishes with
// GreedySigmaColor(eta = k-n, sigma = ceil((m+n)/k)).
ColoringOutcome ColorKnmMain(const KAssignment& assignment);

struct PairChoice {
  Color cq;           // from L(u_1)
  Color cr;           // from L(u_2)
  std::int64_t beta;  // #{v in A : {cq, cr} subset of L(v)}

  friend bool operator==(const PairChoice&, const PairChoice&) = default;
};

// beta[i][j] counts a-side lists containing both the i-th color of L(u_1)
// and the j-th color of L(u_2); gamma[v] = |L(u_1) n L(v)| * |L(u_2) n L(v)|.
struct PairCounts {
  std::vector<std::vector<std::int64_t>> beta;
  std::vector<std::int64_t> gamma;
};

// Requires n == 2.
PairCounts ComputePairCounts(const KAssignment& assignment);

// Requires n == 2 and L(u_1), L(u_2) disjoint. Returns the lexicographically
// least (cq, cr) with 4 * beta <= m; one always exists.
PairChoice ChooseDisjointPair(const KAssignment& assignment);

// Requires n == 2 and m <= ceil((m+2)/k) * (k-1).
//
//   k >= m+2      every vertex gets its own color.
//   k <= 2        exhaustive search (only m <= 3 passes the gate at k = 2).
//   otherwise     shared color on both u's if the u-lists meet; else the
//                 deficient-set process driven by ChooseDisjointPair.
ColoringOutcome ColorK2m(const KAssignment& assignment);

// Exchanges the roles of the two sides.
KAssignment SwapSides(const KAssignment& assignment);
EquitableColoring SwapSides(const EquitableColoring& coloring);

}  // namespace eqchoose

#endif  // EQCHOOSE_COLORER_H_
