#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanohost/hodge.hpp"
#include "fanohost/models.hpp"

namespace fano {

/// Outcome of the necessary condition
///   sum_{p-q=i} h^{p,q}(Y) <= sum_{p-q=i} h^{p,q}(X)  for all i
/// for a fully faithful D(Y) -> D(X). Passing never certifies an embedding.
struct ObstructionResult {
  std::vector<int> violated;  // ascending

  bool obstructed() const { return !violated.empty(); }
};

ObstructionResult embedding_obstruction(const HodgeDiamond& y, const HodgeDiamond& x);

/// A dimension bound with where it came from.
struct Bound {
  int value = 0;
  std::string provenance;

  friend bool operator==(const Bound&, const Bound&) = default;
};

namespace provenance {
inline constexpr const char* kTrivial = "trivial";
inline constexpr const char* kTopHodge = "hodge-lower-bound";               // p* = n
inline constexpr const char* kTopHodgeExtended = "hodge-lower-bound-extended";  // p* < n
inline constexpr const char* kAdjunction = "hodge-lower-bound-via-adjunction";
inline constexpr const char* kOrbifoldCY = "orbifold-calabi-yau-lower-bound";
inline constexpr const char* kHostSearch = "cayley-host-search";
inline constexpr const char* kOrbifoldHostSearch = "orbifold-cayley-host-search";
}  // namespace provenance

/// p* + 2 for p* = max{p > 0 : h^{p,0} > 0}; 1 with provenance "trivial"
/// when no such p exists. A Fano host X has h^{p,0}(X) = 0 for p > 0, which
/// empties the anti-diagonal p* of any host of dimension <= p* + 1.
Bound fano_lower_bound(const HodgeDiamond& y);

/// Same bound for complete intersections without a computable diamond:
/// kappa >= 0 makes K_Y = O(kappa)|_Y effective, hence h^{n,0} > 0.
Bound fano_lower_bound_by_adjunction(const CIModel& ci);

struct VisitorReport {
  Bound lower;
  std::vector<Bound> uppers;  // sorted by (value, provenance)
  bool exact = false;

  std::optional<Bound> best_upper() const;
};

/// Throws InternalInconsistency when an upper bound undercuts the lower one.
VisitorReport assemble_report(Bound lower, std::vector<Bound> uppers);

}  // namespace fano
