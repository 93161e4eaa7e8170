#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fano {

struct ProjectiveSpace {
  int dim;
  friend bool operator==(const ProjectiveSpace&, const ProjectiveSpace&) = default;
};

/// Picard-rank-one homogeneous variety with -K = index * O(1) for the
/// Pluecker polarization. Only (dim, index) enter any computation.
struct Homogeneous {
  std::string name;
  int dim;
  int index;
  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
};

struct WeightedProjective {
  std::vector<int> weights;
  friend bool operator==(const WeightedProjective&, const WeightedProjective&) = default;
};

class AmbientModel {
 public:
  using Kind = std::variant<ProjectiveSpace, Homogeneous, WeightedProjective>;

  static AmbientModel projective(int dim);
  static AmbientModel homogeneous(std::string name, int dim, int index);
  static AmbientModel weighted(std::vector<int> weights);

  /// Parses "P4", "P(1,1,3)", "Q5", "Gr(2,5)", "Gr(2,6)", "OG(5,10)",
  /// "SpGr(3,6)".
  static AmbientModel parse(std::string_view text);

  const Kind& kind() const { return kind_; }
  bool is_projective() const { return std::holds_alternative<ProjectiveSpace>(kind_); }
  bool is_homogeneous() const { return std::holds_alternative<Homogeneous>(kind_); }
  bool is_weighted() const { return std::holds_alternative<WeightedProjective>(kind_); }

  int dim() const;
  /// Fano index; for weighted spaces the sum of the weights.
  int index() const;

  /// Canonical form: P(1,...,1) and homogeneous(dim N, index N+1) both
  /// become projective(N). Idempotent.
  AmbientModel normalized() const;

  std::string label() const;

  friend bool operator==(const AmbientModel&, const AmbientModel&) = default;

 private:
  explicit AmbientModel(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// True for projective spaces, the built-in homogeneous table and quadrics
/// Q^n with n >= 3. Other ambients are rejected by the host constructions.
bool is_supported_host_ambient(const AmbientModel& ambient);

/// Built-in Mukai ambients: Gr(2,5), OG(5,10), Gr(2,6), SpGr(3,6).
std::vector<AmbientModel> builtin_homogeneous_ambients();

enum class Classification { FanoType, CalabiYau, GeneralType };

std::string_view to_string(Classification c);
Classification classify(int canonical_degree);

/// A complete intersection of hypersurfaces of the given degrees in an
/// ambient. Degrees are kept sorted in descending order.
class CIModel {
 public:
  CIModel(AmbientModel ambient, std::vector<int> degrees, bool general = false);

  const AmbientModel& ambient() const { return ambient_; }
  std::span<const int> degrees() const { return degrees_; }
  bool general() const { return general_; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int degree_sum() const;

  std::string label() const;

  friend bool operator==(const CIModel&, const CIModel&) = default;

 private:
  AmbientModel ambient_;
  std::vector<int> degrees_;
  bool general_;
};

int dimension(const CIModel& ci);

/// sum(d_j) - index(ambient): K_Y = O(kappa)|_Y. Throws for weighted
/// ambients, where the amplitude applies instead.
int canonical_degree(const CIModel& ci);

}  // namespace fano
