#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanohost/criterion.hpp"
#include "fanohost/formula.hpp"
#include "fanohost/json_io.hpp"
#include "fanohost/models.hpp"
#include "fanohost/worbifold.hpp"

namespace fano {

/// One known visitor result. Bounds are formulas in the entry's parameters
/// (currently the genus `g` for curve families) and are evaluated on query.
struct CatalogEntry {
  std::string id;
  std::string family;  // curve, k3, calabi-yau, surface, orbifold
  int genus_min = 0;
  std::optional<int> genus_max;
  std::map<std::string, bool> when;  // hyperelliptic / general / plane
  std::optional<CIModel> model;
  std::optional<WeightedCIModel> weighted_model;
  std::optional<Formula> upper;
  std::optional<Formula> lower;
  std::string provenance;

  bool has_model() const { return model || weighted_model; }
  std::map<std::string, long long> parameters(int g) const { return {{"g", g}}; }
};

class Catalog {
 public:
  /// Compiled-in copy of data/catalog.json.
  static const Catalog& builtin();
  static Catalog from_json(const Json& j);
  static Catalog load(const std::string& path);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<CatalogEntry>& entries() { return entries_; }
  const CatalogEntry* find(const std::string& id) const;
  int version() const { return version_; }

 private:
  int version_ = 0;
  std::vector<CatalogEntry> entries_;
};

struct Mismatch {
  std::string id;
  std::string field;  // upper, lower, genus, order
  long long expected = 0;
  long long actual = 0;
  std::string detail;
};

/// Recomputes every model-backed entry and checks lower <= upper for the
/// trusted ones. An empty result is the release gate.
std::vector<Mismatch> validate_catalog(const Catalog& catalog);

struct CurveFlags {
  std::optional<bool> hyperelliptic;
  bool general = false;
  bool plane = false;
};

VisitorReport curve_report(const Catalog& catalog, int genus, CurveFlags flags);

/// A K3 surface given by a complete intersection model and/or as the zero
/// locus of an ample rank-r bundle on an m-dimensional Fano variety.
struct K3Presentation {
  std::optional<CIModel> model;
  std::optional<int> base_dim;
  std::optional<int> rank;
};

VisitorReport k3_report(const K3Presentation& presentation);

}  // namespace fano
