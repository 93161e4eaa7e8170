#include "fanohost/cayley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "cayley_grid.hpp"
#include "fanohost/error.hpp"

namespace fano {

std::string_view to_string(Branch b) {
  return b == Branch::AmpleNef ? "branch-1" : "branch-2";
}

std::string FanoTestResult::failure_reason() const {
  if (certified()) return {};
  const auto& e = evidence;
  std::ostringstream os;
  os << "index - sum(d) = " << e.base_index << " - " << e.degree_sum << " = "
     << e.untwisted_value << " < 0";
  if (!e.twist_nef)
    os << "; twist h = " << e.twist << " exceeds min degree " << e.min_degree;
  else
    os << "; index - sum(d) + (r-1)h = " << e.twisted_value << " <= 0";
  return os.str();
}

FanoTestResult fano_test(int base_dim, int base_index, std::span<const int> bundle_degrees,
                         int twist) {
  const int r = static_cast<int>(bundle_degrees.size());
  if (r < 2) throw InvalidInput("Cayley's trick needs a bundle of rank >= 2");
  if (base_dim < 1) throw InvalidInput("base dimension must be positive");
  if (base_index < 1) throw InvalidInput("base index must be positive");
  if (twist < 0) throw InvalidInput("twist must be non-negative");
  if (std::any_of(bundle_degrees.begin(), bundle_degrees.end(), [](int d) { return d < 1; }))
    throw InvalidInput("bundle degrees must be positive");

  FanoTestResult res;
  auto& e = res.evidence;
  e.base_dim = base_dim;
  e.base_index = base_index;
  e.rank = r;
  e.degree_sum = std::accumulate(bundle_degrees.begin(), bundle_degrees.end(), 0);
  e.min_degree = *std::min_element(bundle_degrees.begin(), bundle_degrees.end());
  e.twist = twist;
  e.untwisted_value = base_index - e.degree_sum;
  e.twisted_value = e.untwisted_value + (r - 1) * twist;
  e.twist_nef = twist <= e.min_degree;

  if (e.untwisted_value >= 0)
    res.certificate = Branch::AmpleNef;
  else if (e.twist_nef && e.twisted_value > 0)
    res.certificate = Branch::TwistedNef;
  return res;
}

SodShape sod_shape(int rank) {
  if (rank < 2) throw InvalidInput("semiorthogonal decomposition needs rank >= 2");
  SodShape shape;
  for (int t = 0; t <= rank - 2; ++t) shape.push_back({SodComponent::Kind::Base, t});
  shape.push_back({SodComponent::Kind::Visitor, 0});
  return shape;
}

SodShape sod_shape(const HostDescriptor& hd) { return sod_shape(hd.rank()); }

namespace detail {

int grid_pad_bound(int ambient_index, std::span<const int> degrees) {
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  return std::max(sum - ambient_index + static_cast<int>(degrees.size()), 2) + 1;
}

namespace {

// All sub-multisets of a descending list, each returned descending.
std::vector<std::vector<int>> sub_multisets(std::span<const int> degrees) {
  std::map<int, int, std::greater<>> counts;
  for (int d : degrees) ++counts[d];
  std::vector<std::vector<int>> out{{}};
  for (const auto& [value, count] : counts) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : out)
      for (int k = 0; k <= count; ++k) {
        auto s = partial;
        s.insert(s.end(), k, value);
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<int> multiset_minus(std::span<const int> all, std::span<const int> removed) {
  std::multiset<int> rest(all.begin(), all.end());
  for (int d : removed) rest.erase(rest.find(d));
  return {rest.rbegin(), rest.rend()};
}

auto order_key(const GridPoint& p) {
  return std::make_tuple(p.host_dim, static_cast<int>(p.bundle.size()), p.padding, -p.twist,
                         p.bundle);
}

}  // namespace

std::optional<GridPoint> search_grid(const GridProblem& problem) {
  std::optional<GridPoint> best;
  const auto absorb_options = problem.allow_absorb ? sub_multisets(problem.degrees)
                                                   : std::vector<std::vector<int>>{{}};
  const int pad_top = problem.allow_pad ? problem.pad_max : 0;
  for (int pad = 0; pad <= pad_top; ++pad) {
    for (const auto& absorbed : absorb_options) {
      GridPoint pt;
      pt.padding = pad;
      pt.absorbed = absorbed;
      pt.bundle = multiset_minus(problem.degrees, absorbed);
      pt.bundle.insert(pt.bundle.end(), pad, 1);
      const int r = static_cast<int>(pt.bundle.size());
      pt.base_dim = problem.ambient_dim + pad - static_cast<int>(absorbed.size());
      pt.base_index =
          problem.ambient_index + pad - std::accumulate(absorbed.begin(), absorbed.end(), 0);
      if (r < 2 || pt.base_dim < 2 || pt.base_index < 1) continue;
      pt.host_dim = pt.base_dim + r - 2;

      const int sum = std::accumulate(pt.bundle.begin(), pt.bundle.end(), 0);
      if (pt.base_index - sum >= 0) {
        pt.twist = 0;
      } else {
        // Certification is monotone in h up to min(d), so the largest
        // admissible twist decides.
        pt.twist = std::min(pt.bundle.back(), problem.twist_max);
        if (pt.twist < 1) continue;
      }
      pt.test = fano_test(pt.base_dim, pt.base_index, pt.bundle, pt.twist);
      if (!pt.test.certified()) continue;
      if (!best || order_key(pt) < order_key(*best)) best = std::move(pt);
    }
  }
  return best;
}

}  // namespace detail

namespace {

void require_host_ambient(const CIModel& ci) {
  if (ci.ambient().is_weighted())
    throw InvalidInput("weighted ambients are handled by the orbifold host search");
  if (!is_supported_host_ambient(ci.ambient()))
    throw Unsupported("ambient " + ci.ambient().label() +
                      " is not a supported Picard-rank-one host base");
}

AmbientModel padded(const AmbientModel& a, int pad) {
  return pad == 0 ? a : AmbientModel::projective(a.dim() + pad);
}

HostDescriptor make_descriptor(const CIModel& ci, const detail::GridPoint& pt) {
  HostDescriptor hd{
      .visitor = ci,
      .base = CIModel(padded(ci.ambient(), pt.padding), pt.absorbed, ci.general()),
      .padding = pt.padding,
      .absorbed = pt.absorbed,
      .bundle_degrees = pt.bundle,
      .twist = pt.twist,
      .host_dim = pt.host_dim,
      .certificate = *pt.test.certificate,
      .evidence = pt.test.evidence,
      .sod = sod_shape(static_cast<int>(pt.bundle.size())),
  };
  return hd;
}

}  // namespace

HostAttempt host_from(const CIModel& ci, int pad, std::span<const int> absorb, int twist) {
  require_host_ambient(ci);
  if (pad < 0) throw InvalidInput("padding must be non-negative");
  if (pad > 0 && !ci.ambient().is_projective())
    throw InvalidInput("padding is only defined for projective ambients");
  if (!absorb.empty() && !ci.general())
    throw InvalidInput("absorbing equations into the base requires the 'general' flag");

  std::vector<int> idx(absorb.begin(), absorb.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw InvalidInput("absorbed equation indices must be distinct");
  if (!idx.empty() && (idx.front() < 0 || idx.back() >= ci.codim()))
    throw InvalidInput("absorbed equation index out of range");
  std::vector<int> absorbed, bundle;
  for (int i = 0; i < ci.codim(); ++i) {
    const bool taken = std::binary_search(idx.begin(), idx.end(), i);
    (taken ? absorbed : bundle).push_back(ci.degrees()[i]);
  }
  bundle.insert(bundle.end(), pad, 1);

  detail::GridPoint pt;
  pt.padding = pad;
  pt.absorbed = absorbed;
  pt.bundle = bundle;
  pt.base_dim = ci.ambient().dim() + pad - static_cast<int>(absorbed.size());
  pt.base_index =
      ci.ambient().index() + pad - std::accumulate(absorbed.begin(), absorbed.end(), 0);
  pt.twist = twist;
  if (pt.base_dim < 2) throw InvalidInput("base must have dimension >= 2");
  if (pt.base_index < 1) throw InvalidInput("base must have positive index");
  if (bundle.size() < 2) throw InvalidInput("bundle rank must be >= 2");
  pt.host_dim = pt.base_dim + static_cast<int>(bundle.size()) - 2;

  HostAttempt attempt;
  attempt.test = fano_test(pt.base_dim, pt.base_index, bundle, twist);
  pt.test = attempt.test;
  if (attempt.test.certified()) attempt.descriptor = make_descriptor(ci, pt);
  return attempt;
}

int default_pad_max(const CIModel& ci) {
  return detail::grid_pad_bound(ci.ambient().index(), ci.degrees());
}

std::optional<HostDescriptor> host_search(const CIModel& ci, const HostSearchOptions& opts) {
  require_host_ambient(ci);
  detail::GridProblem problem;
  problem.ambient_dim = ci.ambient().dim();
  problem.ambient_index = ci.ambient().index();
  problem.degrees.assign(ci.degrees().begin(), ci.degrees().end());
  problem.allow_pad = ci.ambient().is_projective();
  problem.allow_absorb = opts.allow_absorb && ci.general();
  problem.pad_max = opts.pad_max >= 0 ? opts.pad_max : default_pad_max(ci);
  const int max_degree = ci.codim() ? ci.degrees().front() : 1;
  problem.twist_max = opts.twist_max >= 0 ? opts.twist_max : max_degree;

  auto best = detail::search_grid(problem);
  if (!best) return std::nullopt;
  return make_descriptor(ci, *best);
}

RuledTestResult ruled_host_test(int base_dim, int base_index, std::span<const int> e_degrees,
                                std::span<const int> f_degrees, int h1, int h2) {
  if (f_degrees.size() != 2) throw InvalidInput("F must be a rank-2 bundle");
  if (e_degrees.size() < 2) throw InvalidInput("E must have rank >= 2");
  if (base_dim < 1) throw InvalidInput("base dimension must be positive");
  if (base_index != base_dim + 1) throw InvalidInput("base must be P^m with index m + 1");
  if (std::any_of(e_degrees.begin(), e_degrees.end(), [](int d) { return d < 1; }))
    throw InvalidInput("E degrees must be positive");
  if (h1 < 0 || h2 < 0) throw InvalidInput("twists must be non-negative");

  const int r = static_cast<int>(e_degrees.size());
  RuledTestResult res;
  res.e_twist_nef = std::all_of(e_degrees.begin(), e_degrees.end(), [&](int e) { return e >= h1; });
  res.f_twist_nef = std::all_of(f_degrees.begin(), f_degrees.end(), [&](int f) { return f >= h2; });
  const int esum = std::accumulate(e_degrees.begin(), e_degrees.end(), 0);
  const int fsum = std::accumulate(f_degrees.begin(), f_degrees.end(), 0);
  res.value = base_index - esum - fsum + (r - 1) * h1 + 2 * h2;
  res.host_dim = base_dim + r - 1;
  res.certified = res.e_twist_nef && res.f_twist_nef && res.value > 0;
  return res;
}

}  // namespace fano
