#include "fanohost/criterion.hpp"

#include <algorithm>
#include <tuple>

#include "fanohost/error.hpp"

namespace fano {

ObstructionResult embedding_obstruction(const HodgeDiamond& y, const HodgeDiamond& x) {
  ObstructionResult res;
  const int span = std::max(y.dim(), x.dim());
  for (int i = -span; i <= span; ++i)
    if (antidiagonal_sum(y, i) > antidiagonal_sum(x, i)) res.violated.push_back(i);
  return res;
}

Bound fano_lower_bound(const HodgeDiamond& y) {
  const int n = y.dim();
  for (int p = n; p > 0; --p)
    if (y(p, 0) > 0)
      return {p + 2, p == n ? provenance::kTopHodge : provenance::kTopHodgeExtended};
  return {1, provenance::kTrivial};
}

Bound fano_lower_bound_by_adjunction(const CIModel& ci) {
  if (canonical_degree(ci) >= 0) return {dimension(ci) + 2, provenance::kAdjunction};
  return {1, provenance::kTrivial};
}

std::optional<Bound> VisitorReport::best_upper() const {
  if (uppers.empty()) return std::nullopt;
  return uppers.front();
}

VisitorReport assemble_report(Bound lower, std::vector<Bound> uppers) {
  for (const auto& u : uppers)
    if (u.value < lower.value)
      throw InternalInconsistency("upper bound " + std::to_string(u.value) + " (" +
                                  u.provenance + ") is below lower bound " +
                                  std::to_string(lower.value) + " (" + lower.provenance + ")");
  std::sort(uppers.begin(), uppers.end(), [](const Bound& a, const Bound& b) {
    return std::tie(a.value, a.provenance) < std::tie(b.value, b.provenance);
  });
  uppers.erase(std::unique(uppers.begin(), uppers.end()), uppers.end());
  VisitorReport r{std::move(lower), std::move(uppers), false};
  r.exact = !r.uppers.empty() && r.uppers.front().value == r.lower.value;
  return r;
}

}  // namespace fano
