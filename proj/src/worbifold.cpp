#include "fanohost/worbifold.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cayley_grid.hpp"
#include "fanohost/error.hpp"

namespace fano {

namespace {

std::string join(std::span<const int> xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// reachable[k]: k is a non-negative integer combination of `gens`.
std::vector<bool> representable(const std::vector<int>& gens, int upto) {
  std::vector<bool> reach(static_cast<std::size_t>(upto + 1), false);
  reach[0] = true;
  for (int g : gens)
    for (int k = g; k <= upto; ++k)
      if (reach[k - g]) reach[k] = true;
  return reach;
}

}  // namespace

bool well_formed(std::span<const int> weights) {
  if (weights.size() < 2) return false;
  for (std::size_t skip = 0; skip < weights.size(); ++skip) {
    int g = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (i != skip) g = std::gcd(g, weights[i]);
    if (g != 1) return false;
  }
  return true;
}

bool quasi_smooth_general_hypersurface(std::span<const int> weights, int d) {
  if (d < 1) throw InvalidInput("degree must be positive");
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 1; }))
    throw InvalidInput("weights must be positive");
  const int n1 = static_cast<int>(weights.size());
  if (n1 > 24) throw InvalidInput("too many coordinates for subset enumeration");
  // A linear cone has a nonzero constant partial derivative.
  if (std::find(weights.begin(), weights.end(), d) != weights.end()) return true;

  for (unsigned mask = 1; mask < (1u << n1); ++mask) {
    std::vector<int> in_weights;
    for (int i = 0; i < n1; ++i)
      if (mask & (1u << i)) in_weights.push_back(weights[i]);
    const auto reach = representable(in_weights, d);
    if (reach[d]) continue;  // a pure monomial in I exists
    int linear = 0;
    for (int e = 0; e < n1; ++e)
      if (!(mask & (1u << e)) && weights[e] <= d && reach[d - weights[e]]) ++linear;
    if (linear < static_cast<int>(in_weights.size())) return false;
  }
  return true;
}

Amplitude amplitude(std::span<const int> weights, std::span<const int> degrees) {
  const int value = std::accumulate(degrees.begin(), degrees.end(), 0) -
                    std::accumulate(weights.begin(), weights.end(), 0);
  return {value, classify(value)};
}

WeightedCIModel::WeightedCIModel(std::vector<int> weights, std::vector<int> degrees,
                                 bool quasi_smooth_asserted, bool general)
    : weights_(std::move(weights)),
      degrees_(std::move(degrees)),
      quasi_smooth_asserted_(quasi_smooth_asserted),
      general_(general) {
  if (weights_.size() < 2) throw InvalidInput("weighted ambient needs at least two weights");
  if (degrees_.empty()) throw InvalidInput("weighted complete intersection needs a degree");
  if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w < 1; }))
    throw InvalidInput("weights must be positive");
  if (std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d < 1; }))
    throw InvalidInput("degrees must be positive");
  std::sort(weights_.begin(), weights_.end());
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  if (dimension() < 1)
    throw InvalidInput("weighted complete intersection " + label() + " has dimension < 1");
}

std::string WeightedCIModel::label() const {
  return "P(" + join(weights_) + ")[" + join(degrees_) + "]";
}

std::optional<OrbifoldHostDescriptor> orbifold_host_search(const WeightedCIModel& wci,
                                                           const HostSearchOptions& opts) {
  if (!well_formed(wci.weights()))
    throw InvalidInput("P(" + join(wci.weights()) + ") is not well formed");
  if (wci.codim() == 1) {
    if (!quasi_smooth_general_hypersurface(wci.weights(), wci.degrees()[0]))
      throw InvalidInput("a general hypersurface " + wci.label() + " is not quasi-smooth");
  } else if (!wci.quasi_smooth_asserted()) {
    throw InvalidInput("quasi-smoothness of " + wci.label() +
                       " cannot be checked in codimension >= 2 and was not asserted");
  }

  detail::GridProblem problem;
  problem.ambient_dim = wci.ambient_dim();
  problem.ambient_index = std::accumulate(wci.weights().begin(), wci.weights().end(), 0);
  problem.degrees.assign(wci.degrees().begin(), wci.degrees().end());
  problem.allow_pad = true;
  problem.allow_absorb = opts.allow_absorb && wci.general();
  problem.pad_max = opts.pad_max >= 0
                        ? opts.pad_max
                        : detail::grid_pad_bound(problem.ambient_index, wci.degrees());
  problem.twist_max = opts.twist_max >= 0 ? opts.twist_max : wci.degrees().front();

  auto best = detail::search_grid(problem);
  if (!best) return std::nullopt;

  OrbifoldHostDescriptor od{.visitor = wci,
                            .padding = best->padding,
                            .absorbed = best->absorbed,
                            .bundle_degrees = best->bundle,
                            .twist = best->twist,
                            .base_dim = best->base_dim,
                            .host_dim = best->host_dim,
                            .certificate = *best->test.certificate,
                            .evidence = best->test.evidence,
                            .sod = {},
                            .cover_ambient_dim = 0,
                            .lifted_degrees = {},
                            .fixed_locus_assumed = true};
  od.sod = sod_shape(od.rank());
  od.cover_ambient_dim = wci.ambient_dim() + best->padding;
  od.lifted_degrees.assign(wci.degrees().begin(), wci.degrees().end());
  od.lifted_degrees.insert(od.lifted_degrees.end(), best->padding, 1);
  return od;
}

Rational age(int order, std::span<const int> exponents) {
  if (order < 1) throw InvalidInput("group order must be positive");
  int sum = 0;
  for (int a : exponents) {
    if (a < 0 || a >= order)
      throw InvalidInput("exponent " + std::to_string(a) + " outside [0, " +
                         std::to_string(order - 1) + "]");
    sum += a;
  }
  return Rational(sum, order);
}

int orbifold_cy_lower_bound(int dim_y) {
  if (dim_y < 1) throw InvalidInput("dimension must be positive");
  return dim_y + 2;
}

}  // namespace fano
