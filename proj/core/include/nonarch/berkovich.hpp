#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/exact.hpp"
#include "nonarch/hahn.hpp"

namespace nonarch {

/// Closed disc |y - center| <= radius. An infinite radius val degenerates the
/// disc to the single point `center`.
struct Disc {
  HahnSeries center;
  LogNorm radius;
};

enum class AlgebraicIntersection { kEmpty, kNonempty, kUnknown };

/**
 * What the caller asserts about the full infinite chain a finite prefix was
 * cut from: the limit of the radius vals, whether the centers are eventually
 * constant, and whether the intersection contains a point algebraic over the
 * base. None of this is computable from a prefix; the classifier checks the
 * prefix for consistency with it and otherwise takes it on trust (reported
 * as an assumption, not a theorem).
 */
struct LimitDeclaration {
  ExtRational limit_val;
  bool centers_stabilize = false;
  AlgebraicIntersection intersection = AlgebraicIntersection::kUnknown;
};

struct DiscChain {
  std::vector<Disc> discs;
  std::optional<LimitDeclaration> declared;
};

/// Verdict of the exact nesting check on consecutive discs.
struct NestedCheck {
  bool nested;                // |c_{n+1} - c_n| <= r_n throughout
  bool strictly_decreasing;   // radius vals strictly increase
  std::size_t first_violation;  // index of the earlier disc of the first bad pair
  std::string detail;

  bool pass() const { return nested && strictly_decreasing; }
};

/// Requires >= 2 discs (a single disc makes no chain).
NestedCheck check_nested(const DiscChain& chain);

enum class PointType { kType1 = 1, kType2 = 2, kType3 = 3, kType4 = 4 };

/// Residue extension invariants (E, F) attached to each point type:
/// 1 -> (0,0), 2 -> (0,1), 3 -> (1,0), 4 -> (0,0).
struct EFInvariants {
  int e;
  int f;
};
EFInvariants ef_invariants(PointType type);

/// E + F <= 1 for every type.
bool abhyankar_ok(PointType type);

struct ClassifyResult {
  std::optional<PointType> type;  // empty = indeterminate
  std::string reason;
};

/**
 * Classify the point the chain converges to:
 *   - declared limit val +infinity            -> type 1 (radii shrink to 0)
 *   - finite limit, centers stabilize         -> type 2 if the limit val is an
 *                                                integer (radius in the value
 *                                                group), else type 3
 *   - finite limit, centers never stabilize,
 *     algebraic intersection declared empty   -> type 4
 *   - anything else                           -> indeterminate
 *
 * The prefix must pass check_nested and every observed radius val must stay
 * at or below a declared finite limit; violations throw invalid_argument.
 * Requires a declaration (classification is undecidable from a prefix).
 */
ClassifyResult classify(const DiscChain& chain);

}  // namespace nonarch
