#include "fanohost/catalog.hpp"

#include <algorithm>
#include <set>

#include "fanohost/cayley.hpp"
#include "fanohost/error.hpp"
#include "fanohost/hodge.hpp"

namespace fano {

extern const char* const kBuiltinCatalogJson;

namespace {

const std::set<std::string> kFamilies = {"curve", "k3", "calabi-yau", "surface", "orbifold"};
const std::set<std::string> kConditions = {"hyperelliptic", "general", "plane"};

// Genus range scanned when checking lower <= upper on open-ended entries.
constexpr int kOpenRangeSpan = 30;

std::optional<Formula> formula_field(const Json& j, const char* key, const std::string& id) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw InvalidInput(id + ": '" + key + "' must be a formula string");
  return Formula(it->get<std::string>());
}

CatalogEntry entry_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("catalog entries must be objects");
  CatalogEntry e;
  auto id = j.find("id");
  if (id == j.end() || !id->is_string()) throw InvalidInput("catalog entry without an id");
  e.id = id->get<std::string>();
  auto fam = j.find("family");
  if (fam == j.end() || !fam->is_string() || !kFamilies.count(fam->get<std::string>()))
    throw InvalidInput(e.id + ": unknown or missing family");
  e.family = fam->get<std::string>();

  if (auto g = j.find("genus"); g != j.end()) {
    if (!g->is_object() || !g->contains("min") || !(*g)["min"].is_number_integer())
      throw InvalidInput(e.id + ": genus must be {\"min\": int, \"max\"?: int}");
    e.genus_min = (*g)["min"].get<int>();
    if (auto mx = g->find("max"); mx != g->end()) {
      if (!mx->is_number_integer()) throw InvalidInput(e.id + ": genus max must be an integer");
      e.genus_max = mx->get<int>();
    }
    if (e.genus_min < 0 || (e.genus_max && *e.genus_max < e.genus_min))
      throw InvalidInput(e.id + ": empty genus range");
  }
  if (auto w = j.find("when"); w != j.end()) {
    if (!w->is_object()) throw InvalidInput(e.id + ": 'when' must be an object");
    for (const auto& [k, v] : w->items()) {
      if (!kConditions.count(k) || !v.is_boolean())
        throw InvalidInput(e.id + ": bad condition '" + k + "'");
      e.when[k] = v.get<bool>();
    }
  }
  try {
    if (auto m = j.find("model"); m != j.end()) e.model = ci_from_json(*m);
    if (auto m = j.find("weighted_model"); m != j.end()) e.weighted_model = wci_from_json(*m);
  } catch (const InvalidInput& ex) {
    throw InvalidInput(e.id + ": " + ex.what());
  }
  if (e.model && e.weighted_model) throw InvalidInput(e.id + ": two models");
  e.upper = formula_field(j, "upper", e.id);
  e.lower = formula_field(j, "lower", e.id);
  if (!e.upper && !e.lower) throw InvalidInput(e.id + ": entry carries no bound");
  if (auto p = j.find("provenance"); p != j.end() && p->is_string()) e.provenance = p->get<std::string>();
  return e;
}

std::string catalog_tag(const CatalogEntry& e) { return "catalog:" + e.id; }

void check_value(std::vector<Mismatch>& out, const CatalogEntry& e, const char* field,
                 long long stated, long long recomputed, std::string detail = {}) {
  if (stated != recomputed) out.push_back({e.id, field, recomputed, stated, std::move(detail)});
}

void validate_model_entry(std::vector<Mismatch>& out, const CatalogEntry& e) {
  const auto params = e.parameters(e.genus_min);
  const auto& ci = *e.model;
  if (e.upper) {
    auto hd = host_search(ci);
    if (!hd)
      out.push_back({e.id, "upper", 0, e.upper->evaluate(params), "no certified host found"});
    else
      check_value(out, e, "upper", e.upper->evaluate(params), hd->host_dim);
  }
  if (ci.ambient().is_projective()) {
    const auto diamond = hodge_diamond(ci);
    if (e.lower) check_value(out, e, "lower", e.lower->evaluate(params), fano_lower_bound(diamond).value);
    if (e.family == "curve") {
      if (dimension(ci) != 1)
        out.push_back({e.id, "genus", 1, dimension(ci), "curve entry whose model is not a curve"});
      else
        check_value(out, e, "genus", e.genus_min, diamond(1, 0).convert_to<long long>());
    }
  } else if (e.lower) {
    check_value(out, e, "lower", e.lower->evaluate(params), fano_lower_bound_by_adjunction(ci).value);
  }
}

void validate_weighted_entry(std::vector<Mismatch>& out, const CatalogEntry& e) {
  const auto params = e.parameters(e.genus_min);
  const auto& w = *e.weighted_model;
  if (e.upper) {
    try {
      if (auto od = orbifold_host_search(w))
        check_value(out, e, "upper", e.upper->evaluate(params), od->host_dim);
      else
        out.push_back({e.id, "upper", 0, e.upper->evaluate(params), "no certified host found"});
    } catch (const InvalidInput& ex) {
      out.push_back({e.id, "upper", 0, e.upper->evaluate(params), ex.what()});
    }
  }
  if (e.lower) {
    const auto a = amplitude(w.weights(), w.degrees());
    if (a.classification == Classification::CalabiYau)
      check_value(out, e, "lower", e.lower->evaluate(params), orbifold_cy_lower_bound(w.dimension()));
    else
      out.push_back({e.id, "lower", 0, e.lower->evaluate(params),
                     "no lower bound is computable for a non-Calabi-Yau weighted model"});
  }
}

void validate_order(std::vector<Mismatch>& out, const CatalogEntry& e) {
  if (!e.upper || !e.lower) return;
  const int last = e.genus_max.value_or(e.genus_min + kOpenRangeSpan);
  for (int g = e.genus_min; g <= last; ++g) {
    const auto p = e.parameters(g);
    const long long lo = e.lower->evaluate(p), up = e.upper->evaluate(p);
    if (lo > up) {
      out.push_back({e.id, "order", lo, up, "lower exceeds upper at g=" + std::to_string(g)});
      return;
    }
  }
}

int plane_degree_for_genus(int g) {
  for (int d = 1; (d - 1) * (d - 2) / 2 <= g; ++d)
    if ((d - 1) * (d - 2) / 2 == g && d >= 2) return d;
  throw InvalidInput("no smooth plane curve has genus " + std::to_string(g));
}

bool condition_holds(const std::string& key, bool want, const CurveFlags& f) {
  if (key == "hyperelliptic") return f.hyperelliptic.has_value() && *f.hyperelliptic == want;
  if (key == "general") return f.general == want;
  return f.plane == want;
}

}  // namespace

const Catalog& Catalog::builtin() {
  static const Catalog cat = from_json(parse_json_text(kBuiltinCatalogJson, "built-in catalog"));
  return cat;
}

Catalog Catalog::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("version") || !j["version"].is_number_integer())
    throw InvalidInput("catalog must be an object with an integer version");
  Catalog c;
  c.version_ = j["version"].get<int>();
  if (c.version_ != 1) throw InvalidInput("unsupported catalog version " + std::to_string(c.version_));
  auto it = j.find("entries");
  if (it == j.end() || !it->is_array()) throw InvalidInput("catalog must list its entries");
  std::set<std::string> seen;
  for (const auto& ej : *it) {
    auto e = entry_from_json(ej);
    if (!seen.insert(e.id).second) throw InvalidInput("duplicate catalog id '" + e.id + "'");
    c.entries_.push_back(std::move(e));
  }
  return c;
}

Catalog Catalog::load(const std::string& path) { return from_json(load_json_file(path)); }

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<Mismatch> validate_catalog(const Catalog& catalog) {
  std::vector<Mismatch> out;
  for (const auto& e : catalog.entries()) {
    if (e.model)
      validate_model_entry(out, e);
    else if (e.weighted_model)
      validate_weighted_entry(out, e);
    else
      validate_order(out, e);
  }
  return out;
}

VisitorReport curve_report(const Catalog& catalog, int g, CurveFlags f) {
  if (g < 0) throw InvalidInput("genus must be non-negative");
  if (g == 2) {
    if (f.hyperelliptic == false) throw InvalidInput("every genus-2 curve is hyperelliptic");
    f.hyperelliptic = true;
  }
  if (g <= 1 && f.hyperelliptic == true)
    throw InvalidInput("hyperelliptic curves have genus at least 2");
  if (f.general && g >= 3) {
    if (f.hyperelliptic == true)
      throw InvalidInput("a general curve of genus >= 3 is not hyperelliptic");
    f.hyperelliptic = false;
  }
  std::optional<int> plane_d;
  if (f.plane) {
    plane_d = plane_degree_for_genus(g);
    if (*plane_d >= 4) {
      if (f.hyperelliptic == true) throw InvalidInput("plane curves of degree >= 4 are not hyperelliptic");
      f.hyperelliptic = false;
    }
    if (f.general && *plane_d >= 5)
      throw InvalidInput("a general curve of genus " + std::to_string(g) + " is not a plane curve");
  }

  Bound lower{1, provenance::kTrivial};
  std::vector<Bound> uppers;
  for (const auto& e : catalog.entries()) {
    if (e.family != "curve" || g < e.genus_min || (e.genus_max && g > *e.genus_max)) continue;
    if (!std::all_of(e.when.begin(), e.when.end(),
                     [&](const auto& kv) { return condition_holds(kv.first, kv.second, f); }))
      continue;
    const auto p = e.parameters(g);
    if (e.lower) {
      const auto v = static_cast<int>(e.lower->evaluate(p));
      if (v > lower.value) lower = {v, catalog_tag(e)};
    }
    if (e.upper) uppers.push_back({static_cast<int>(e.upper->evaluate(p)), catalog_tag(e)});
  }
  if (plane_d)
    if (auto hd = host_search(CIModel(AmbientModel::projective(2), {*plane_d})))
      uppers.push_back({hd->host_dim, provenance::kHostSearch});
  return assemble_report(std::move(lower), std::move(uppers));
}

VisitorReport k3_report(const K3Presentation& k) {
  if (!k.model && !k.base_dim && !k.rank)
    throw InvalidInput("a K3 presentation needs a model, a base dimension or a rank");
  std::vector<Bound> uppers;
  if (k.model) {
    if (dimension(*k.model) != 2 || canonical_degree(*k.model) != 0)
      throw InvalidInput(k.model->label() + " is not a K3 complete intersection");
    if (auto hd = host_search(*k.model)) uppers.push_back({hd->host_dim, provenance::kHostSearch});
  }
  if (k.base_dim && k.rank && *k.base_dim - *k.rank != 2)
    throw InvalidInput("a rank-r zero locus of dimension 2 needs a base of dimension r + 2");
  if (k.base_dim) {
    if (*k.base_dim < 4) throw InvalidInput("the linear-section bound needs a base of dimension >= 4");
    uppers.push_back({2 * *k.base_dim - 4, "linear-section-bound"});
  }
  if (k.rank) {
    if (*k.rank < 2) throw InvalidInput("the ample-bundle bound needs rank >= 2");
    uppers.push_back({2 * *k.rank, "ample-bundle-zero-locus-bound"});
  }
  return assemble_report({4, provenance::kTopHodge}, std::move(uppers));
}

}  // namespace fano
