#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanohost/cayley.hpp"
#include "fanohost/models.hpp"

namespace fano {

using Rational = boost::multiprecision::cpp_rational;

/// gcd of the weights with any single one omitted is 1.
bool well_formed(std::span<const int> weights);

/// Whether a general weighted hypersurface of degree d is quasi-smooth.
/// For every nonempty coordinate subset I, either a degree-d monomial uses
/// only variables in I, or there are at least |I| monomials x_I^M * x_e of
/// degree d with pairwise distinct e outside I. A linear cone (d equal to
/// a weight) is always quasi-smooth. Weights need not be well formed.
bool quasi_smooth_general_hypersurface(std::span<const int> weights, int d);

struct Amplitude {
  int value;  // sum(d) - sum(w)
  Classification classification;
};

Amplitude amplitude(std::span<const int> weights, std::span<const int> degrees);

class WeightedCIModel {
 public:
  WeightedCIModel(std::vector<int> weights, std::vector<int> degrees,
                  bool quasi_smooth_asserted = false, bool general = false);

  std::span<const int> weights() const { return weights_; }
  std::span<const int> degrees() const { return degrees_; }
  bool quasi_smooth_asserted() const { return quasi_smooth_asserted_; }
  bool general() const { return general_; }

  int ambient_dim() const { return static_cast<int>(weights_.size()) - 1; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int dimension() const { return ambient_dim() - codim(); }
  std::string label() const;

  friend bool operator==(const WeightedCIModel&, const WeightedCIModel&) = default;

 private:
  std::vector<int> weights_;  // ascending
  std::vector<int> degrees_;  // descending
  bool quasi_smooth_asserted_;
  bool general_;
};

struct OrbifoldHostDescriptor {
  WeightedCIModel visitor;
  int padding = 0;            // weight-one coordinates and degree-one equations added
  std::vector<int> absorbed;  // descending
  std::vector<int> bundle_degrees;
  int twist = 0;
  int base_dim = 0;
  int host_dim = 0;
  Branch certificate = Branch::AmpleNef;
  FanoEvidence evidence;  // index here is sum(w) + padding - sum(absorbed)
  SodShape sod;
  // mu_a-cover: Cayley's trick on P^N with the lifted equations.
  int cover_ambient_dim = 0;
  std::vector<int> lifted_degrees;
  // Fixed loci of the cover group are assumed to have codimension >= 2;
  // only well-formedness is checked.
  bool fixed_locus_assumed = true;

  int rank() const { return static_cast<int>(bundle_degrees.size()); }
};

/// Smallest orbifold host over padding, twist and (when general) absorption,
/// certified by -alpha + (r-1) h > 0 (or -alpha >= 0) on the cover.
/// Requires a well-formed ambient and quasi-smoothness: checked for
/// hypersurfaces, asserted by the model otherwise. Empty when nothing in
/// the grid certifies.
std::optional<OrbifoldHostDescriptor> orbifold_host_search(const WeightedCIModel& wci,
                                                           const HostSearchOptions& opts = {});

/// Age sum(a_i)/m of a cyclic element acting with eigenvalues eps^{a_i},
/// 0 <= a_i <= m-1.
Rational age(int order, std::span<const int> exponents);

/// An n-dimensional Calabi-Yau orbifold has no orbifold Fano host of
/// dimension below n + 2.
int orbifold_cy_lower_bound(int dim_y);

}  // namespace fano
