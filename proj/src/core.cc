#include "eqchoose/core.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace eqchoose {

std::string ToString(Vertex v) {
  return (v.side == Side::kUPrime ? "u" : "v") + std::to_string(v.index + 1);
}

Instance::Instance(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    throw StructuralError("K_{n,m} needs n >= 1 and m >= 1, got n=" +
                          std::to_string(n) + " m=" + std::to_string(m));
  }
}

std::int64_t EquityBound(const Instance& inst, std::int64_t k) {
  if (k < 1) throw PreconditionError("equity bound needs k >= 1");
  const std::int64_t vertices = inst.num_vertices();
  return (vertices + k - 1) / k;
}

void Normalize(ColorList& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

namespace {

void NormalizeSide(std::vector<ColorList>& lists, int expected_count, int k,
                   const char* side) {
  if (static_cast<int>(lists.size()) != expected_count) {
    throw StructuralError(std::string(side) + " side has " +
                          std::to_string(lists.size()) + " lists, expected " +
                          std::to_string(expected_count));
  }
  for (std::size_t i = 0; i < lists.size(); ++i) {
    ColorList& list = lists[i];
    Normalize(list);
    if (!list.empty() && list.front() < 0) {
      throw StructuralError("negative color in " + std::string(side) +
                            " list " + std::to_string(i + 1));
    }
    if (static_cast<int>(list.size()) != k) {
      throw StructuralError(std::string(side) + " list " +
                            std::to_string(i + 1) + " has " +
                            std::to_string(list.size()) +
                            " distinct colors, expected k=" +
                            std::to_string(k));
    }
  }
}

}  // namespace

KAssignment::KAssignment(Instance inst, int k,
                         std::vector<ColorList> lists_uprime,
                         std::vector<ColorList> lists_a)
    : inst_(inst),
      k_(k),
      lists_uprime_(std::move(lists_uprime)),
      lists_a_(std::move(lists_a)) {
  if (k < 1) throw StructuralError("k must be >= 1");
  NormalizeSide(lists_uprime_, inst_.n(), k_, "u'");
  NormalizeSide(lists_a_, inst_.m(), k_, "a");
}

KAssignment KAssignment::Uniform(Instance inst, int k) {
  if (k < 1) throw StructuralError("k must be >= 1");
  ColorList all(k);
  std::iota(all.begin(), all.end(), Color{0});
  return KAssignment(inst, k, std::vector<ColorList>(inst.n(), all),
                     std::vector<ColorList>(inst.m(), all));
}

const ColorList& KAssignment::list(Vertex v) const {
  return v.side == Side::kUPrime ? lists_uprime_.at(v.index)
                                 : lists_a_.at(v.index);
}

std::string Violation::Describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kNotInList:
      out << "color " << color << " on " << ToString(vertex)
          << " is not in its list";
      break;
    case Kind::kCrossSide:
      out << "color " << color << " is used on both sides (improper)";
      break;
    case Kind::kClassSize:
      out << "color " << color << " used " << class_size
          << " times, equity bound is " << bound;
      break;
  }
  return out.str();
}

CheckResult CheckEquitable(const KAssignment& assignment,
                           const EquitableColoring& coloring) {
  const int n = assignment.n();
  const int m = assignment.m();
  if (static_cast<int>(coloring.colors_uprime.size()) != n ||
      static_cast<int>(coloring.colors_a.size()) != m) {
    throw StructuralError(
        "coloring has " + std::to_string(coloring.colors_uprime.size()) +
        "+" + std::to_string(coloring.colors_a.size()) +
        " colors, instance has " + std::to_string(n) + "+" +
        std::to_string(m) + " vertices");
  }

  CheckResult result;
  // color -> (uses on u-side, uses on a-side); ordered for stable reports.
  std::map<Color, std::pair<std::int64_t, std::int64_t>> uses;
  auto visit = [&](Side side, std::span<const Color> colors) {
    for (int i = 0; i < static_cast<int>(colors.size()); ++i) {
      const Vertex v{side, i};
      const ColorList& list = assignment.list(v);
      if (!std::binary_search(list.begin(), list.end(), colors[i])) {
        result.violations.push_back(
            {.kind = Violation::Kind::kNotInList, .color = colors[i],
             .vertex = v});
      }
      auto& [on_u, on_a] = uses[colors[i]];
      (side == Side::kUPrime ? on_u : on_a) += 1;
    }
  };
  visit(Side::kUPrime, coloring.colors_uprime);
  visit(Side::kA, coloring.colors_a);

  const std::int64_t bound = EquityBound(assignment.instance(), assignment.k());
  for (const auto& [color, count] : uses) {
    if (count.first > 0 && count.second > 0) {
      result.violations.push_back(
          {.kind = Violation::Kind::kCrossSide, .color = color});
    }
    const std::int64_t size = count.first + count.second;
    if (size > bound) {
      result.violations.push_back({.kind = Violation::Kind::kClassSize,
                                   .color = color,
                                   .class_size = size,
                                   .bound = bound});
    }
  }
  return result;
}

}  // namespace eqchoose
