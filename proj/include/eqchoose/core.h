// Core types for equitable list coloring of complete bipartite graphs K_{n,m}.
//
// The two partite sets are called the "u-side" (n vertices u_1..u_n) and the
// "a-side" (m vertices v_1..v_m). Every edge crosses between the sides, so a
// coloring is proper exactly when no color is used on both sides.

#ifndef EQCHOOSE_CORE_H_
#define EQCHOOSE_CORE_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqchoose {

using Color = std::int64_t;
using ColorList = std::vector<Color>;

// Raised for malformed input: bad sizes, negative colors, length mismatches.
// Distinct from a coloring that is well formed but fails a check.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an algorithm reaches a state its correctness argument rules
// out. Always a bug in this library, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Side { kUPrime, kA };

struct Vertex {
  Side side;
  int index;  // 0-based within its side

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string ToString(Vertex v);

// K_{n,m}. Both sides are nonempty.
class Instance {
 public:
  Instance(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int num_vertices() const { return n_ + m_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int n_;
  int m_;
};

// ceil((n+m)/k), the largest allowed color class in an equitable coloring.
std::int64_t EquityBound(const Instance& inst, std::int64_t k);

// Sorts and deduplicates a list in place.
void Normalize(ColorList& list);

// A k-assignment: every vertex gets a list of exactly k distinct colors.
// Lists are stored sorted ascending.
class KAssignment {
 public:
  // Throws StructuralError if any list does not hold exactly k distinct
  // non-negative colors after deduplication, or if list counts mismatch.
  KAssignment(Instance inst, int k, std::vector<ColorList> lists_uprime,
              std::vector<ColorList> lists_a);

  // Every list equal to {0, ..., k-1}.
  static KAssignment Uniform(Instance inst, int k);

  const Instance& instance() const { return inst_; }
  int n() const { return inst_.n(); }
  int m() const { return inst_.m(); }
  int k() const { return k_; }
  const std::vector<ColorList>& lists_uprime() const { return lists_uprime_; }
  const std::vector<ColorList>& lists_a() const { return lists_a_; }
  const ColorList& list(Vertex v) const;

  friend bool operator==(const KAssignment&, const KAssignment&) = default;

 private:
  Instance inst_;
  int k_;
  std::vector<ColorList> lists_uprime_;
  std::vector<ColorList> lists_a_;
};

// A candidate equitable L-coloring; nothing is validated on construction.
struct EquitableColoring {
  std::vector<Color> colors_uprime;
  std::vector<Color> colors_a;

  friend bool operator==(const EquitableColoring&,
                         const EquitableColoring&) = default;
};

struct Violation {
  enum class Kind {
    kNotInList,   // f(v) not in L(v)
    kCrossSide,   // color used on both sides
    kClassSize,   // color class exceeds the equity bound
  };
  Kind kind;
  Color color;
  Vertex vertex{Side::kUPrime, -1};  // kNotInList only
  std::int64_t class_size = 0;       // kClassSize only
  std::int64_t bound = 0;            // kClassSize only

  std::string Describe() const;
};

struct CheckResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Reports every violated constraint. Throws StructuralError if the coloring
// does not have one color per vertex of the assignment's instance.
CheckResult CheckEquitable(const KAssignment& assignment,
                           const EquitableColoring& coloring);

}  // namespace eqchoose

#endif  // EQCHOOSE_CORE_H_
