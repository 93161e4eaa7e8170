#include "fanohost/models.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "fanohost/error.hpp"

namespace fano {

namespace {

struct TableRow {
  const char* name;
  int dim;
  int index;
};

// Dimensions and indices of the Mukai ambients in their Pluecker embeddings.
constexpr TableRow kHomogeneousTable[] = {
    {"Gr(2,5)", 6, 5},
    {"OG(5,10)", 10, 8},
    {"Gr(2,6)", 8, 6},
    {"SpGr(3,6)", 6, 4},
};

std::string join(std::span<const int> xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InvalidInput("bad integer '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

AmbientModel AmbientModel::projective(int dim) {
  if (dim < 1) throw InvalidInput("projective space needs dimension >= 1");
  return AmbientModel(ProjectiveSpace{dim});
}

AmbientModel AmbientModel::homogeneous(std::string name, int dim, int index) {
  if (dim < 1) throw InvalidInput("homogeneous ambient needs dimension >= 1");
  if (index < 1) throw InvalidInput("homogeneous ambient needs index >= 1");
  return AmbientModel(Homogeneous{std::move(name), dim, index});
}

AmbientModel AmbientModel::weighted(std::vector<int> weights) {
  if (weights.size() < 2)
    throw InvalidInput("weighted projective space needs at least two weights");
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 1; }))
    throw InvalidInput("weights must be positive");
  return AmbientModel(WeightedProjective{std::move(weights)});
}

AmbientModel AmbientModel::parse(std::string_view text) {
  const std::string s(text);
  static const std::regex proj(R"(P\^?(\d+))");
  static const std::regex wps(R"(P\(([\d,]+)\))");
  static const std::regex quadric(R"(Q\^?(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, proj)) return projective(std::stoi(m[1]));
  if (std::regex_match(s, m, wps)) return weighted(parse_int_list(m[1]));
  if (std::regex_match(s, m, quadric)) {
    int n = std::stoi(m[1]);
    return homogeneous("Q" + std::to_string(n), n, n);
  }
  for (const auto& row : kHomogeneousTable)
    if (s == row.name) return homogeneous(row.name, row.dim, row.index);
  throw InvalidInput("unknown ambient '" + s + "'");
}

int AmbientModel::dim() const {
  return std::visit(
      [](const auto& a) -> int {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, WeightedProjective>)
          return static_cast<int>(a.weights.size()) - 1;
        else
          return a.dim;
      },
      kind_);
}

int AmbientModel::index() const {
  return std::visit(
      [](const auto& a) -> int {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ProjectiveSpace>)
          return a.dim + 1;
        else if constexpr (std::is_same_v<T, Homogeneous>)
          return a.index;
        else
          return std::accumulate(a.weights.begin(), a.weights.end(), 0);
      },
      kind_);
}

AmbientModel AmbientModel::normalized() const {
  if (const auto* h = std::get_if<Homogeneous>(&kind_)) {
    if (h->index == h->dim + 1) return projective(h->dim);
  } else if (const auto* w = std::get_if<WeightedProjective>(&kind_)) {
    if (std::all_of(w->weights.begin(), w->weights.end(), [](int x) { return x == 1; }))
      return projective(static_cast<int>(w->weights.size()) - 1);
  }
  return *this;
}

std::string AmbientModel::label() const {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ProjectiveSpace>)
          return "P" + std::to_string(a.dim);
        else if constexpr (std::is_same_v<T, Homogeneous>)
          return a.name;
        else
          return "P(" + join(a.weights) + ")";
      },
      kind_);
}

bool is_supported_host_ambient(const AmbientModel& ambient) {
  const auto a = ambient.normalized();
  if (a.is_projective()) return true;
  const auto* h = std::get_if<Homogeneous>(&a.kind());
  if (!h) return false;
  for (const auto& row : kHomogeneousTable)
    if (h->name == row.name && h->dim == row.dim && h->index == row.index) return true;
  // Q^2 = P1 x P1 has Picard rank two.
  return h->name == "Q" + std::to_string(h->dim) && h->index == h->dim && h->dim >= 3;
}

std::vector<AmbientModel> builtin_homogeneous_ambients() {
  std::vector<AmbientModel> out;
  for (const auto& row : kHomogeneousTable)
    out.push_back(AmbientModel::homogeneous(row.name, row.dim, row.index));
  return out;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::FanoType: return "fano-type";
    case Classification::CalabiYau: return "calabi-yau";
    case Classification::GeneralType: return "general-type";
  }
  return "?";
}

Classification classify(int canonical_degree) {
  if (canonical_degree < 0) return Classification::FanoType;
  if (canonical_degree == 0) return Classification::CalabiYau;
  return Classification::GeneralType;
}

CIModel::CIModel(AmbientModel ambient, std::vector<int> degrees, bool general)
    : ambient_(ambient.normalized()), degrees_(std::move(degrees)), general_(general) {
  if (std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d < 1; }))
    throw InvalidInput("degrees must be positive");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  if (ambient_.dim() - codim() < 1)
    throw InvalidInput("complete intersection " + label() + " has dimension " +
                       std::to_string(ambient_.dim() - codim()) + " < 1");
}

int CIModel::degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

std::string CIModel::label() const {
  return ambient_.label() + "[" + join(degrees_) + "]";
}

int dimension(const CIModel& ci) { return ci.ambient().dim() - ci.codim(); }

int canonical_degree(const CIModel& ci) {
  if (ci.ambient().is_weighted())
    throw InvalidInput("canonical degree is undefined on weighted ambients; use amplitude()");
  return ci.degree_sum() - ci.ambient().index();
}

}  // namespace fano
