#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanohost/models.hpp"

namespace fano {

/// Which sufficient condition made the Cayley hypersurface Fano.
///  AmpleNef:   E ample and K_S^v (x) det E^v nef, i.e. index - sum(d) >= 0.
///  TwistedNef: H = O(h) nef, E (x) H^v nef and K_S^v (x) det E^v (x) H^{r-1}
///              ample, i.e. h <= min(d) and index - sum(d) + (r-1)h > 0.
enum class Branch { AmpleNef, TwistedNef };

std::string_view to_string(Branch b);

/// Every quantity the Fano test looked at.
struct FanoEvidence {
  int base_dim = 0;
  int base_index = 0;
  int rank = 0;
  int degree_sum = 0;
  int min_degree = 0;
  int twist = 0;
  int untwisted_value = 0;  // index - sum(d)
  int twisted_value = 0;    // index - sum(d) + (r-1) h
  bool twist_nef = false;   // h <= min(d)
};

struct FanoTestResult {
  std::optional<Branch> certificate;
  FanoEvidence evidence;

  bool certified() const { return certificate.has_value(); }
  /// Human-readable account of the inequality that failed; empty on success.
  std::string failure_reason() const;
};

/// Degree-sign reduction of the nef/ample conditions for a split bundle
/// E = (+) O(d_j) on a Picard-rank-one base of the given index.
/// A failure only means this construction is unverified.
FanoTestResult fano_test(int base_dim, int base_index, std::span<const int> bundle_degrees,
                         int twist);

struct SodComponent {
  enum class Kind { Base, Visitor };
  Kind kind;
  int twist = 0;  // meaningful for Base only

  friend bool operator==(const SodComponent&, const SodComponent&) = default;
};

/// <D(S), D(S)(1), ..., D(S)(r-2), D(Y)>
using SodShape = std::vector<SodComponent>;

SodShape sod_shape(int rank);

struct HostDescriptor {
  CIModel visitor;                  // Y
  CIModel base;                     // S: padded ambient cut by absorbed equations
  int padding = 0;                  // extra coordinates / degree-one summands
  std::vector<int> absorbed;        // degrees absorbed into S, descending
  std::vector<int> bundle_degrees;  // E on S, descending, padding included
  int twist = 0;
  int host_dim = 0;
  Branch certificate = Branch::AmpleNef;
  FanoEvidence evidence;
  SodShape sod;

  int rank() const { return static_cast<int>(bundle_degrees.size()); }
};

SodShape sod_shape(const HostDescriptor& hd);

struct HostAttempt {
  std::optional<HostDescriptor> descriptor;
  FanoTestResult test;
};

/// Single Cayley construction: pad a projective ambient by `pad`
/// coordinates, absorb the equations at `absorb` (indices into the
/// descending degree list) into the base, and twist by O(twist).
/// Precondition violations throw InvalidInput; an uncertified construction
/// is reported through HostAttempt::test.
HostAttempt host_from(const CIModel& ci, int pad, std::span<const int> absorb, int twist);

struct HostSearchOptions {
  int pad_max = -1;    // -1: automatic bound
  int twist_max = -1;  // -1: largest degree
  bool allow_absorb = true;
};

/// Upper bound of the padding grid that provably contains a certified point
/// for projective ambients.
int default_pad_max(const CIModel& ci);

/// Smallest certified host over the grid (padding, absorbed sub-multiset,
/// twist). Ties: smaller rank, smaller padding, larger twist, then
/// lexicographically smaller bundle degrees. Empty when nothing certifies.
std::optional<HostDescriptor> host_search(const CIModel& ci, const HostSearchOptions& opts = {});

/// Ruled varieties P(F^v|_C) for C cut out by E on P^m and F = O(f1)+O(f2).
struct RuledTestResult {
  bool certified = false;
  bool e_twist_nef = false;  // e_j - h1 >= 0 for all j
  bool f_twist_nef = false;  // f_k - h2 >= 0 for both k
  int value = 0;             // index - sum(e) - sum(f) + (r-1) h1 + 2 h2
  int host_dim = 0;          // m + r - 1
};

RuledTestResult ruled_host_test(int base_dim, int base_index, std::span<const int> e_degrees,
                                std::span<const int> f_degrees, int h1, int h2);

}  // namespace fano
