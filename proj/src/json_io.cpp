#include "fanohost/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fanohost/error.hpp"

namespace fano {

namespace {

const BigInt kSafeInteger = (BigInt(1) << 53) - 1;

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

bool optional_bool(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean()) throw InvalidInput(std::string(key) + " must be a boolean");
  return it->get<bool>();
}

const Json& unwrap(const Json& j, std::initializer_list<const char*> keys) {
  if (j.is_object())
    for (const char* k : keys)
      if (auto it = j.find(k); it != j.end() && it->is_object()) return *it;
  return j;
}

Json inequality(std::string name, int value, bool holds) {
  return Json{{"name", std::move(name)}, {"value", value}, {"holds", holds}};
}

}  // namespace

Json to_json(const BigInt& v) {
  if (v <= kSafeInteger && v >= -kSafeInteger) return Json(v.convert_to<long long>());
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw InvalidInput("'" + s + "' is not a decimal integer");
    return BigInt(s);
  }
  throw InvalidInput("expected an integer or a decimal string");
}

Json to_json(const Rational& q) {
  return Json{{"num", to_json(BigInt(numerator(q)))}, {"den", to_json(BigInt(denominator(q)))}};
}

Json to_json(const AmbientModel& a) {
  return std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ProjectiveSpace>)
          return {{"kind", "projective"}, {"dim", k.dim}};
        else if constexpr (std::is_same_v<T, Homogeneous>)
          return {{"kind", "homogeneous"}, {"name", k.name}, {"dim", k.dim}, {"index", k.index}};
        else
          return {{"kind", "weighted"}, {"weights", k.weights}};
      },
      a.kind());
}

AmbientModel ambient_from_json(const Json& j) {
  if (j.is_string()) return AmbientModel::parse(j.get<std::string>());
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) throw InvalidInput("ambient kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "projective") return AmbientModel::projective(as_int(require(j, "dim"), "dim"));
  if (k == "homogeneous") {
    const Json& name = require(j, "name");
    if (!name.is_string()) throw InvalidInput("homogeneous name must be a string");
    return AmbientModel::homogeneous(name.get<std::string>(), as_int(require(j, "dim"), "dim"),
                                     as_int(require(j, "index"), "index"));
  }
  if (k == "weighted") return AmbientModel::weighted(int_list(require(j, "weights"), "weights"));
  throw InvalidInput("unknown ambient kind '" + k + "'");
}

Json to_json(const CIModel& ci) {
  return {{"ambient", to_json(ci.ambient())},
          {"degrees", std::vector<int>(ci.degrees().begin(), ci.degrees().end())},
          {"general", ci.general()}};
}

CIModel ci_from_json(const Json& raw) {
  const Json& j = unwrap(raw, {"model", "visitor"});
  return CIModel(ambient_from_json(require(j, "ambient")), int_list(require(j, "degrees"), "degrees"),
                 optional_bool(j, "general"));
}

Json to_json(const WeightedCIModel& w) {
  return {{"weights", std::vector<int>(w.weights().begin(), w.weights().end())},
          {"degrees", std::vector<int>(w.degrees().begin(), w.degrees().end())},
          {"quasi_smooth_asserted", w.quasi_smooth_asserted()},
          {"general", w.general()}};
}

WeightedCIModel wci_from_json(const Json& raw) {
  const Json& j = unwrap(raw, {"model", "visitor"});
  return WeightedCIModel(int_list(require(j, "weights"), "weights"),
                         int_list(require(j, "degrees"), "degrees"),
                         optional_bool(j, "quasi_smooth_asserted"), optional_bool(j, "general"));
}

Json to_json(const HodgeDiamond& d) {
  Json rows = Json::array();
  for (int p = 0; p <= d.dim(); ++p) {
    Json row = Json::array();
    for (int q = 0; q <= d.dim(); ++q) row.push_back(to_json(d(p, q)));
    rows.push_back(std::move(row));
  }
  return {{"n", d.dim()}, {"h", std::move(rows)}};
}

HodgeDiamond diamond_from_json(const Json& raw) {
  const Json& j = unwrap(raw, {"diamond"});
  const Json& h = require(j, "h");
  if (!h.is_array()) throw InvalidInput("h must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : h) {
    if (!row.is_array()) throw InvalidInput("h must be an array of rows");
    auto& out = rows.emplace_back();
    for (const auto& x : row) out.push_back(bigint_from_json(x));
  }
  auto d = HodgeDiamond::from_table(rows);
  if (auto it = j.find("n"); it != j.end() && as_int(*it, "n") != d.dim())
    throw InvalidInput("n does not match the size of h");
  return d;
}

Json to_json(const FanoEvidence& e) {
  return {
      {"base_dim", e.base_dim},
      {"base_index", e.base_index},
      {"rank", e.rank},
      {"degree_sum", e.degree_sum},
      {"min_degree", e.min_degree},
      {"twist", e.twist},
      {"inequalities",
       Json::array({
           inequality("rank >= 2", e.rank, e.rank >= 2),
           inequality("branch-1: index - sum(d) >= 0", e.untwisted_value, e.untwisted_value >= 0),
           inequality("branch-2: min(d) - h >= 0", e.min_degree - e.twist, e.twist_nef),
           inequality("branch-2: index - sum(d) + (r-1)h > 0", e.twisted_value,
                      e.twisted_value > 0),
       })},
  };
}

Json to_json(const FanoTestResult& r) {
  Json j{{"certified", r.certified()}, {"evidence", to_json(r.evidence)}};
  j["certificate"] = r.certified() ? Json(to_string(*r.certificate)) : Json(nullptr);
  if (!r.certified()) {
    j["failure"] = r.failure_reason();
    j["note"] = "construction unverified; this does not show that no Fano host exists";
  }
  return j;
}

Json to_json(const SodShape& s) {
  Json out = Json::array();
  for (const auto& c : s) {
    if (c.kind == SodComponent::Kind::Base)
      out.push_back({{"component", "base"}, {"twist", c.twist}});
    else
      out.push_back({{"component", "visitor"}});
  }
  return out;
}

Json to_json(const HostDescriptor& hd) {
  return {
      {"visitor", to_json(hd.visitor)},
      {"base", to_json(hd.base)},
      {"padding", hd.padding},
      {"absorbed", hd.absorbed},
      {"bundle_degrees", hd.bundle_degrees},
      {"twist", hd.twist},
      {"rank", hd.rank()},
      {"host_dim", hd.host_dim},
      {"certificate", to_string(hd.certificate)},
      {"sod", to_json(hd.sod)},
      {"evidence", to_json(hd.evidence)},
  };
}

Json to_json(const OrbifoldHostDescriptor& od) {
  return {
      {"visitor", to_json(od.visitor)},
      {"padding", od.padding},
      {"absorbed", od.absorbed},
      {"bundle_degrees", od.bundle_degrees},
      {"twist", od.twist},
      {"rank", od.rank()},
      {"base_dim", od.base_dim},
      {"host_dim", od.host_dim},
      {"certificate", to_string(od.certificate)},
      {"sod", to_json(od.sod)},
      {"cover", {{"ambient_dim", od.cover_ambient_dim}, {"lifted_degrees", od.lifted_degrees}}},
      {"assumptions",
       Json::array({"fixed loci of the cover group have codimension >= 2 (only well-formedness "
                    "is checked)",
                    "padding bound is the smallest certified one, not a proof of minimality "
                    "of the padded presentation"})},
      {"evidence", to_json(od.evidence)},
  };
}

Json to_json(const RuledTestResult& r) {
  return {{"certified", r.certified},
          {"host_dim", r.host_dim},
          {"evidence",
           {{"inequalities",
             Json::array({inequality("e_j - h1 >= 0 for all j", 0, r.e_twist_nef),
                          inequality("f_k - h2 >= 0 for both k", 0, r.f_twist_nef),
                          inequality("index - sum(e) - sum(f) + (r-1)h1 + 2h2 > 0", r.value,
                                     r.value > 0)})}}}};
}

Json to_json(const ObstructionResult& r) {
  return {{"violated", r.violated},
          {"verdict", r.obstructed() ? "obstructed" : "unobstructed"},
          {"note", r.obstructed()
                       ? "no fully faithful functor D(Y) -> D(X) exists"
                       : "necessary condition passes; this does not certify an embedding"}};
}

Json to_json(const Bound& b) { return {{"value", b.value}, {"provenance", b.provenance}}; }

Json to_json(const VisitorReport& r) {
  Json uppers = Json::array();
  for (const auto& u : r.uppers) uppers.push_back(to_json(u));
  Json j{{"lower", to_json(r.lower)}, {"uppers", std::move(uppers)}, {"exact", r.exact}};
  if (auto best = r.best_upper())
    j["fano_dimension"] =
        r.exact ? Json(best->value) : Json{{"at_least", r.lower.value}, {"at_most", best->value}};
  else
    j["fano_dimension"] = Json{{"at_least", r.lower.value}, {"at_most", nullptr}};
  return j;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                       e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace fano
