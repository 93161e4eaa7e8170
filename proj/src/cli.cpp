#include "fanohost/cli.hpp"

#include <CLI11.hpp>
#include <optional>

#include "fanohost/catalog.hpp"
#include "fanohost/cayley.hpp"
#include "fanohost/criterion.hpp"
#include "fanohost/error.hpp"
#include "fanohost/hodge.hpp"
#include "fanohost/json_io.hpp"
#include "fanohost/worbifold.hpp"

namespace fano::cli {

namespace {

struct ModelFlags {
  std::string json_path;
  std::string ambient;
  std::vector<int> degrees;
  std::vector<int> weights;
  bool general = false;
  bool quasi_smooth = false;
};

struct SearchFlags {
  int pad_max = -1;
  int twist_max = -1;
  bool no_absorb = false;

  HostSearchOptions options() const { return {pad_max, twist_max, !no_absorb}; }
  Json to_json() const {
    return {{"pad_max", pad_max < 0 ? Json("auto") : Json(pad_max)},
            {"twist_max", twist_max < 0 ? Json("auto") : Json(twist_max)},
            {"allow_absorb", !no_absorb}};
  }
};

void add_model_flags(CLI::App* app, ModelFlags& f, bool weighted) {
  app->add_option("--json", f.json_path, "model JSON file");
  app->add_option("--degrees", f.degrees, "hypersurface degrees, comma separated")->delimiter(',');
  app->add_flag("--general", f.general, "general member (allows absorbing equations)");
  if (weighted) {
    app->add_option("--weights", f.weights, "weights, comma separated")->delimiter(',');
    app->add_flag("--quasi-smooth", f.quasi_smooth,
                  "assert quasi-smoothness (required in codimension >= 2)");
  } else {
    app->add_option("--ambient", f.ambient, "P4, Q5, Gr(2,5), OG(5,10), Gr(2,6), SpGr(3,6)");
  }
}

void add_search_flags(CLI::App* app, SearchFlags& s) {
  app->add_option("--pad-max", s.pad_max, "largest padding tried");
  app->add_option("--twist-max", s.twist_max, "largest twist h tried");
  app->add_flag("--no-absorb", s.no_absorb, "never absorb equations into the base");
}

bool has_weights(const Json& j) {
  if (!j.is_object()) return false;
  if (j.contains("weights")) return true;
  for (const char* k : {"model", "visitor"})
    if (auto it = j.find(k); it != j.end() && it->is_object() && it->contains("weights")) return true;
  return false;
}

CIModel ci_from_flags(const ModelFlags& f) {
  if (!f.json_path.empty()) {
    if (!f.ambient.empty() || !f.degrees.empty())
      throw InvalidInput("--json cannot be combined with --ambient/--degrees");
    return ci_from_json(load_json_file(f.json_path));
  }
  if (f.ambient.empty()) throw InvalidInput("--ambient is required");
  if (f.degrees.empty()) throw InvalidInput("--degrees is required");
  return CIModel(AmbientModel::parse(f.ambient), f.degrees, f.general);
}

WeightedCIModel wci_from_flags(const ModelFlags& f) {
  if (!f.json_path.empty()) {
    if (!f.weights.empty() || !f.degrees.empty())
      throw InvalidInput("--json cannot be combined with --weights/--degrees");
    return wci_from_json(load_json_file(f.json_path));
  }
  if (f.weights.empty()) throw InvalidInput("--weights is required");
  if (f.degrees.empty()) throw InvalidInput("--degrees is required");
  return WeightedCIModel(f.weights, f.degrees, f.quasi_smooth, f.general);
}

std::optional<WeightedCIModel> as_weighted(const CIModel& ci) {
  if (const auto* w = std::get_if<WeightedProjective>(&ci.ambient().kind()))
    return WeightedCIModel(w->weights, {ci.degrees().begin(), ci.degrees().end()}, false,
                           ci.general());
  return std::nullopt;
}

Json check_json(bool holds, Json lhs, Json rhs, std::string what) {
  return {{"name", std::move(what)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)},
          {"holds", holds}};
}

// hodge ------------------------------------------------------------------

int cmd_hodge(const ModelFlags& f, std::ostream& out) {
  const auto ci = ci_from_flags(f);
  const auto d = hodge_diamond(ci);
  const int n = d.dim();
  Json sums = Json::array();
  for (int i = -n; i <= n; ++i) sums.push_back({{"i", i}, {"sum", to_json(antidiagonal_sum(d, i))}});
  Json chi = Json::array();
  for (const auto& c : chi_y_coefficients(ci)) chi.push_back(to_json(c));
  const BigInt e_diamond = euler_number(d);
  const BigInt e_chern = euler_characteristic_oracle(ci);
  const Bound lower = fano_lower_bound(d);
  Json body{
      {"model", to_json(ci)},
      {"dimension", n},
      {"diamond", to_json(d)},
      {"antidiagonal_sums", std::move(sums)},
      {"euler", to_json(e_diamond)},
      {"chi_y", std::move(chi)},
      {"lower_bound", to_json(lower)},
      {"evidence",
       {{"checks", Json::array({
                       check_json(e_diamond == e_chern, to_json(e_diamond), to_json(e_chern),
                                  "euler from diamond = euler from Chern classes"),
                       check_json(d.hodge_symmetric(), nullptr, nullptr, "h^{p,q} = h^{q,p}"),
                       check_json(d.serre_dual(), nullptr, nullptr, "h^{p,q} = h^{n-p,n-q}"),
                   })}}},
  };
  out << body.dump(2) << '\n';
  return kOk;
}

// host -------------------------------------------------------------------

int cmd_host(const ModelFlags& f, const SearchFlags& s, std::ostream& out) {
  const auto ci = ci_from_flags(f);
  const auto hd = host_search(ci, s.options());
  Json body{{"model", to_json(ci)}, {"certified", hd.has_value()}, {"search", s.to_json()}};
  if (hd) {
    body["descriptor"] = to_json(*hd);
    body["evidence"] = to_json(hd->evidence);
  } else {
    body["descriptor"] = nullptr;
    body["note"] = "construction unverified; this does not show that no Fano host exists";
    body["evidence"] = {{"certified_points", 0}, {"grid", s.to_json()}};
  }
  out << body.dump(2) << '\n';
  return hd ? kOk : kNegative;
}

// wci --------------------------------------------------------------------

Json wci_result(const WeightedCIModel& w, const SearchFlags& s, bool& certified) {
  const auto a = amplitude(w.weights(), w.degrees());
  Json body{{"model", to_json(w)},
            {"dimension", w.dimension()},
            {"well_formed", well_formed(w.weights())},
            {"amplitude", {{"value", a.value}, {"classification", to_string(a.classification)}}}};
  if (w.codim() == 1 && well_formed(w.weights()))
    body["quasi_smooth"] = quasi_smooth_general_hypersurface(w.weights(), w.degrees()[0]);
  else
    body["quasi_smooth"] = w.quasi_smooth_asserted() ? Json("asserted") : Json(nullptr);
  if (a.classification == Classification::CalabiYau)
    body["lower_bound"] = to_json(Bound{orbifold_cy_lower_bound(w.dimension()), provenance::kOrbifoldCY});
  const auto od = orbifold_host_search(w, s.options());
  certified = od.has_value();
  body["certified"] = certified;
  if (od) {
    body["descriptor"] = to_json(*od);
    body["evidence"] = to_json(od->evidence);
  } else {
    body["descriptor"] = nullptr;
    body["note"] = "construction unverified; this does not show that no orbifold Fano host exists";
    body["evidence"] = {{"certified_points", 0}, {"grid", s.to_json()}};
  }
  return body;
}

std::vector<WeightedCIModel> load_wci_fixtures(const std::string& path) {
  const Json j = load_json_file(path);
  if (!j.is_object() || !j.contains("families") || !j["families"].is_array())
    throw InvalidInput(path + ": fixtures must be an object with a 'families' array");
  const bool k3 = j.value("family", std::string()) == "k3";
  std::vector<WeightedCIModel> out;
  int i = 0;
  for (const auto& fam : j["families"]) {
    const std::string where = path + ": family " + std::to_string(i++);
    try {
      auto w = wci_from_json(fam);
      if (!well_formed(w.weights())) throw InvalidInput(w.label() + " is not well formed");
      if (k3 && (w.dimension() != 2 || amplitude(w.weights(), w.degrees()).value != 0))
        throw InvalidInput(w.label() + " is not a K3 surface");
      out.push_back(std::move(w));
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
  }
  return out;
}

int cmd_wci(const ModelFlags& f, const SearchFlags& s, const std::string& fixtures,
            std::ostream& out) {
  if (fixtures.empty()) {
    bool certified = false;
    Json body = wci_result(wci_from_flags(f), s, certified);
    out << body.dump(2) << '\n';
    return certified ? kOk : kNegative;
  }
  if (!f.json_path.empty() || !f.weights.empty() || !f.degrees.empty())
    throw InvalidInput("--fixtures cannot be combined with a single model");
  Json results = Json::array();
  int certified_count = 0, exact_count = 0;
  for (const auto& w : load_wci_fixtures(fixtures)) {
    bool certified = false;
    Json r = wci_result(w, s, certified);
    certified_count += certified;
    if (certified && r.contains("lower_bound") &&
        r["descriptor"]["host_dim"] == r["lower_bound"]["value"])
      ++exact_count;
    results.push_back(std::move(r));
  }
  const int total = static_cast<int>(results.size());
  Json body{{"results", std::move(results)},
            {"evidence",
             {{"families", total},
              {"certified", certified_count},
              {"host_dim_equals_lower_bound", exact_count}}}};
  out << body.dump(2) << '\n';
  return certified_count == total ? kOk : kNegative;
}

// check ------------------------------------------------------------------

int cmd_check(const std::string& y_path, const std::string& x_path, std::ostream& out) {
  if (y_path.empty() || x_path.empty()) throw InvalidInput("--y and --x are required");
  const auto y = diamond_from_json(load_json_file(y_path));
  const auto x = diamond_from_json(load_json_file(x_path));
  const auto res = embedding_obstruction(y, x);
  const int span = std::max(y.dim(), x.dim());
  Json ineq = Json::array();
  for (int i = -span; i <= span; ++i) {
    const auto ys = antidiagonal_sum(y, i), xs = antidiagonal_sum(x, i);
    ineq.push_back({{"i", i}, {"visitor", to_json(ys)}, {"host", to_json(xs)}, {"holds", ys <= xs}});
  }
  Json body = to_json(res);
  body["evidence"] = {{"inequalities", std::move(ineq)}};
  out << body.dump(2) << '\n';
  return res.obstructed() ? kNegative : kOk;
}

// report -----------------------------------------------------------------

struct ReportFlags {
  ModelFlags model;
  std::optional<int> genus;
  bool hyperelliptic = false;
  bool non_hyperelliptic = false;
  bool plane = false;
  bool k3 = false;
  std::optional<int> base_dim;
  std::optional<int> rank;
  std::string fixtures;
};

Json report_body(const VisitorReport& r, Json subject, Json extra_evidence) {
  Json body = to_json(r);
  body["subject"] = std::move(subject);
  Json uppers = Json::array();
  for (const auto& u : r.uppers) uppers.push_back(to_json(u));
  extra_evidence["lower"] = to_json(r.lower);
  extra_evidence["uppers"] = std::move(uppers);
  extra_evidence["checks"] = Json::array(
      {check_json(true, r.lower.value, r.best_upper() ? Json(r.best_upper()->value) : Json(nullptr),
                  "lower <= every upper")});
  body["evidence"] = std::move(extra_evidence);
  return body;
}

bool same_model(const CIModel& a, const CIModel& b) {
  return a.ambient() == b.ambient() &&
         std::equal(a.degrees().begin(), a.degrees().end(), b.degrees().begin(), b.degrees().end());
}

int report_model(const CIModel& ci, const Catalog& cat, std::ostream& out) {
  if (auto w = as_weighted(ci)) {
    std::optional<Bound> lower;
    if (amplitude(w->weights(), w->degrees()).classification == Classification::CalabiYau)
      lower = Bound{orbifold_cy_lower_bound(w->dimension()), provenance::kOrbifoldCY};
    std::vector<Bound> uppers;
    Json host = nullptr;
    if (auto od = orbifold_host_search(*w)) {
      uppers.push_back({od->host_dim, provenance::kOrbifoldHostSearch});
      host = to_json(*od);
    }
    for (const auto& e : cat.entries())
      if (e.weighted_model && e.weighted_model->weights().size() == w->weights().size() &&
          std::equal(e.weighted_model->weights().begin(), e.weighted_model->weights().end(),
                     w->weights().begin()) &&
          std::ranges::equal(e.weighted_model->degrees(), w->degrees()) && e.upper)
        uppers.push_back({static_cast<int>(e.upper->evaluate(e.parameters(e.genus_min))),
                          "catalog:" + e.id});
    auto r = assemble_report(lower.value_or(Bound{1, provenance::kTrivial}), std::move(uppers));
    out << report_body(r, to_json(*w), {{"host", std::move(host)}}).dump(2) << '\n';
    return kOk;
  }
  const Bound lower = ci.ambient().is_projective() ? fano_lower_bound(hodge_diamond(ci))
                                                   : fano_lower_bound_by_adjunction(ci);
  std::vector<Bound> uppers;
  Json host = nullptr;
  if (auto hd = host_search(ci)) {
    uppers.push_back({hd->host_dim, provenance::kHostSearch});
    host = to_json(*hd);
  }
  for (const auto& e : cat.entries())
    if (e.model && e.upper && same_model(*e.model, ci))
      uppers.push_back({static_cast<int>(e.upper->evaluate(e.parameters(e.genus_min))),
                        "catalog:" + e.id});
  auto r = assemble_report(lower, std::move(uppers));
  out << report_body(r, to_json(ci), {{"host", std::move(host)}}).dump(2) << '\n';
  return kOk;
}

int cmd_report(const ReportFlags& f, std::ostream& out) {
  const Catalog cat = f.fixtures.empty() ? Catalog::builtin() : Catalog::load(f.fixtures);
  const bool has_model =
      !f.model.json_path.empty() || !f.model.ambient.empty() || !f.model.degrees.empty();
  if (f.hyperelliptic && f.non_hyperelliptic)
    throw InvalidInput("--hyperelliptic and --non-hyperelliptic are contradictory");

  if (f.genus) {
    if (has_model || f.k3) throw InvalidInput("--genus cannot be combined with a model or --k3");
    CurveFlags flags;
    if (f.hyperelliptic) flags.hyperelliptic = true;
    if (f.non_hyperelliptic) flags.hyperelliptic = false;
    flags.general = f.model.general;
    flags.plane = f.plane;
    auto r = curve_report(cat, *f.genus, flags);
    Json subject{{"family", "curve"},
                 {"genus", *f.genus},
                 {"hyperelliptic", flags.hyperelliptic ? Json(*flags.hyperelliptic) : Json(nullptr)},
                 {"general", flags.general},
                 {"plane", flags.plane}};
    out << report_body(r, std::move(subject), Json::object()).dump(2) << '\n';
    return kOk;
  }
  if (f.hyperelliptic || f.non_hyperelliptic || f.plane)
    throw InvalidInput("curve flags need --genus");
  if (f.k3) {
    K3Presentation p;
    if (has_model) p.model = ci_from_flags(f.model);
    p.base_dim = f.base_dim;
    p.rank = f.rank;
    auto r = k3_report(p);
    Json subject{{"family", "k3"},
                 {"model", p.model ? to_json(*p.model) : Json(nullptr)},
                 {"base_dim", p.base_dim ? Json(*p.base_dim) : Json(nullptr)},
                 {"rank", p.rank ? Json(*p.rank) : Json(nullptr)}};
    out << report_body(r, std::move(subject), Json::object()).dump(2) << '\n';
    return kOk;
  }
  if (f.base_dim || f.rank) throw InvalidInput("--base-dim/--rank need --k3");
  if (!f.model.json_path.empty() && f.model.ambient.empty() && f.model.degrees.empty()) {
    const Json j = load_json_file(f.model.json_path);
    if (has_weights(j)) {
      const auto w = wci_from_json(j);
      std::vector<int> ws(w.weights().begin(), w.weights().end());
      return report_model(CIModel(AmbientModel::weighted(ws), {w.degrees().begin(), w.degrees().end()},
                                  w.general()),
                          cat, out);
    }
  }
  return report_model(ci_from_flags(f.model), cat, out);
}

// validate ---------------------------------------------------------------

int cmd_validate(const std::string& fixtures, std::ostream& out) {
  const Catalog cat = fixtures.empty() ? Catalog::builtin() : Catalog::load(fixtures);
  const auto mismatches = validate_catalog(cat);
  Json ms = Json::array();
  for (const auto& m : mismatches)
    ms.push_back({{"id", m.id},
                  {"field", m.field},
                  {"expected", m.expected},
                  {"actual", m.actual},
                  {"detail", m.detail}});
  Json recomputed = Json::array(), trusted = Json::array();
  for (const auto& e : cat.entries()) (e.has_model() ? recomputed : trusted).push_back(e.id);
  Json body{{"catalog_version", cat.version()},
            {"entries", cat.entries().size()},
            {"mismatches", std::move(ms)},
            {"ok", mismatches.empty()},
            {"evidence", {{"recomputed", std::move(recomputed)}, {"trusted", std::move(trusted)}}}};
  out << body.dump(2) << '\n';
  return mismatches.empty() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano host construction and bounds for complete intersections", "fanohost"};
  app.require_subcommand(1);

  ModelFlags hodge_f, host_f, wci_f;
  SearchFlags host_s, wci_s;
  std::string wci_fixtures, check_y, check_x, validate_fixtures;
  ReportFlags report_f;

  auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a complete intersection in P^N");
  add_model_flags(hodge, hodge_f, false);

  auto* host = app.add_subcommand("host", "smallest certified Cayley-trick Fano host");
  add_model_flags(host, host_f, false);
  add_search_flags(host, host_s);

  auto* wci = app.add_subcommand("wci", "orbifold host of a weighted complete intersection");
  add_model_flags(wci, wci_f, true);
  add_search_flags(wci, wci_s);
  wci->add_option("--fixtures", wci_fixtures, "JSON file with a batch of weighted families");

  auto* check = app.add_subcommand("check", "Hodge-theoretic embedding obstruction");
  check->add_option("--y", check_y, "visitor diamond JSON");
  check->add_option("--x", check_x, "host diamond JSON");

  auto* report = app.add_subcommand("report", "Fano dimension bounds for a visitor");
  add_model_flags(report, report_f.model, false);
  report->add_option("--genus", report_f.genus, "curve of this genus");
  report->add_flag("--hyperelliptic", report_f.hyperelliptic, "the curve is hyperelliptic");
  report->add_flag("--non-hyperelliptic", report_f.non_hyperelliptic, "the curve is not hyperelliptic");
  report->add_flag("--plane", report_f.plane, "smooth plane curve");
  report->add_flag("--k3", report_f.k3, "K3 surface");
  report->add_option("--base-dim", report_f.base_dim, "dimension m of the Fano base");
  report->add_option("--rank", report_f.rank, "rank r of the ample bundle");
  report->add_option("--fixtures", report_f.fixtures, "catalog JSON overriding the built-in one");

  auto* validate = app.add_subcommand("validate", "recompute every model-backed catalog entry");
  validate->add_option("--fixtures", validate_fixtures, "catalog JSON overriding the built-in one");

  std::vector<const char*> argv{"fanohost"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*hodge) return cmd_hodge(hodge_f, out);
    if (*host) return cmd_host(host_f, host_s, out);
    if (*wci) return cmd_wci(wci_f, wci_s, wci_fixtures, out);
    if (*check) return cmd_check(check_y, check_x, out);
    if (*report) return cmd_report(report_f, out);
    if (*validate) return cmd_validate(validate_fixtures, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInvalidInput;
}

}  // namespace fano::cli
