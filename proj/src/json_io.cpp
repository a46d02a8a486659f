#include "opineq/json_io.hpp"

#include <type_traits>

#include "opineq/error.hpp"

namespace opineq {

using nlohmann::json;

namespace {

json real_rows(const CMatrix& m, bool imag) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool has_imaginary_part(const CMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return true;
  return false;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(std::string("JSON object lacks field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw DomainError(std::string("expected a number for ") + what);
  return j.get<double>();
}

Index index_value(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string("expected an integer for ") + what);
  return j.get<Index>();
}

void fill_part(CMatrix& m, const json& rows, bool imag) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != m.rows())
    throw DomainError("matrix row count does not match its declared shape");
  for (Index i = 0; i < m.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != m.cols())
      throw DomainError("matrix column count does not match its declared shape");
    for (Index j = 0; j < m.cols(); ++j) {
      const double v = number(row[static_cast<std::size_t>(j)], "matrix entry");
      if (imag)
        m(i, j).imag(v);
      else
        m(i, j).real(v);
    }
  }
}

std::vector<double> number_list(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string("expected an array for ") + what);
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

const char* sandwich_name(Sandwich s) {
  switch (s) {
    case Sandwich::kAbsolute:
      return "absolute";
    case Sandwich::kRelative:
      return "relative";
    case Sandwich::kRelativeSquared:
      return "relative_squared";
  }
  return "absolute";
}

Sandwich sandwich_from_name(const std::string& s) {
  if (s == "absolute") return Sandwich::kAbsolute;
  if (s == "relative") return Sandwich::kRelative;
  if (s == "relative_squared") return Sandwich::kRelativeSquared;
  throw DomainError("unknown sandwich kind: " + s);
}

void flatten(const json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path;
    out += " = ";
    out += j.dump();
    out += '\n';
  }
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json j;
  if (m.rows() == m.cols()) {
    j["n"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["re"] = real_rows(m, false);
  if (has_imaginary_part(m)) j["im"] = real_rows(m, true);
  return j;
}

json matrix_to_json(const HermitianMatrix& m) { return matrix_to_json(m.entries()); }

CMatrix cmatrix_from_json(const json& j) {
  Index rows = 0;
  Index cols = 0;
  if (j.is_object() && j.contains("n")) {
    rows = cols = index_value(j.at("n"), "n");
  } else {
    rows = index_value(field(j, "rows"), "rows");
    cols = index_value(field(j, "cols"), "cols");
  }
  if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
  CMatrix m = CMatrix::Zero(rows, cols);
  fill_part(m, field(j, "re"), false);
  if (j.contains("im")) fill_part(m, j.at("im"), true);
  return m;
}

HermitianMatrix hermitian_from_json(const json& j) {
  return HermitianMatrix(cmatrix_from_json(j));
}

json vector_to_json(const CVector& v) {
  json re = json::array();
  json im = json::array();
  bool complex = false;
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
    complex = complex || v(i).imag() != 0.0;
  }
  json j = {{"n", v.size()}, {"re", std::move(re)}};
  if (complex) j["im"] = std::move(im);
  return j;
}

CVector vector_from_json(const json& j) {
  const Index n = index_value(field(j, "n"), "n");
  const auto re = number_list(field(j, "re"), "vector entry");
  if (static_cast<Index>(re.size()) != n) throw DimensionError("vector length mismatch");
  CVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = re[static_cast<std::size_t>(i)];
  if (j.contains("im")) {
    const auto im = number_list(j.at("im"), "vector entry");
    if (static_cast<Index>(im.size()) != n) throw DimensionError("vector length mismatch");
    for (Index i = 0; i < n; ++i) v(i).imag(im[static_cast<std::size_t>(i)]);
  }
  return v;
}

json interval_to_json(const SpectralInterval& iv) {
  return {{"m", iv.lower()}, {"M", iv.upper()}};
}

SpectralInterval interval_from_json(const json& j) {
  return {number(field(j, "m"), "m"), number(field(j, "M"), "M")};
}

json map_to_json(const PositiveMap& phi) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnitaryMixture>) {
          json us = json::array();
          for (const auto& u : v.unitaries) us.push_back(matrix_to_json(u));
          return {{"variant", "unitary_mixture"}, {"unitaries", us}, {"weights", v.weights}};
        } else if constexpr (std::is_same_v<T, Pinching>) {
          return {{"variant", "pinching"}, {"n", v.dim}, {"blocks", v.blocks}};
        } else if constexpr (std::is_same_v<T, Compression>) {
          return {{"variant", "compression"}, {"isometry", matrix_to_json(v.isometry)}};
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          json cs = json::array();
          for (const auto& c : v.components) cs.push_back(map_to_json(*c));
          return {{"variant", "direct_sum"}, {"components", cs}, {"weights", v.weights}};
        } else {
          return {{"variant", "induced_congruence"},
                  {"base", map_to_json(*v.base)},
                  {"anchor", matrix_to_json(v.anchor)}};
        }
      },
      phi.variant());
}

PositiveMap map_from_json(const json& j) {
  const auto& variant = field(j, "variant");
  if (!variant.is_string()) throw DomainError("map variant must be a string");
  const auto name = variant.get<std::string>();
  if (name == "identity") return PositiveMap::identity(index_value(field(j, "n"), "n"));
  if (name == "unitary_mixture") {
    std::vector<CMatrix> us;
    for (const auto& u : field(j, "unitaries")) us.push_back(cmatrix_from_json(u));
    if (us.empty()) throw DomainError("unitary mixture needs at least one unitary");
    auto weights = j.contains("weights")
                       ? number_list(j.at("weights"), "weight")
                       : std::vector<double>(us.size(), 1.0 / static_cast<double>(us.size()));
    return PositiveMap::unitary_mixture(std::move(us), std::move(weights));
  }
  if (name == "pinching") {
    std::vector<std::vector<Index>> blocks;
    const auto& bj = field(j, "blocks");
    if (!bj.is_array()) throw DomainError("pinching blocks must be an array");
    for (const auto& b : bj) {
      std::vector<Index> block;
      if (!b.is_array()) throw DomainError("pinching block must be an array");
      for (const auto& i : b) block.push_back(index_value(i, "pinching index"));
      blocks.push_back(std::move(block));
    }
    return PositiveMap::pinching(index_value(field(j, "n"), "n"), std::move(blocks));
  }
  if (name == "compression") return PositiveMap::compression(cmatrix_from_json(field(j, "isometry")));
  if (name == "direct_sum") {
    std::vector<PositiveMap> cs;
    for (const auto& c : field(j, "components")) cs.push_back(map_from_json(c));
    if (cs.empty()) throw DomainError("direct sum needs at least one component");
    auto weights = j.contains("weights")
                       ? number_list(j.at("weights"), "weight")
                       : std::vector<double>(cs.size(), 1.0 / static_cast<double>(cs.size()));
    return PositiveMap::direct_sum(std::move(cs), std::move(weights));
  }
  if (name == "induced_congruence")
    return PositiveMap::induced_congruence(map_from_json(field(j, "base")),
                                           hermitian_from_json(field(j, "anchor")));
  throw DomainError("unknown map variant: " + name);
}

json instance_to_json(const CheckInstance& inst) {
  json j = {{"A", matrix_to_json(inst.a())},
            {"map", map_to_json(inst.phi())},
            {"interval", interval_to_json(inst.iv())},
            {"hypothesis_tolerance", inst.hypothesis_tolerance()}};
  if (inst.has_b()) {
    j["B"] = matrix_to_json(inst.b());
    j["sandwich"] = sandwich_name(inst.sandwich());
  }
  if (inst.has_state()) j["x"] = vector_to_json(inst.state().vector());
  if (inst.has_exponent()) j["p"] = inst.exponent();
  if (inst.has_alpha()) j["alpha"] = inst.alpha();
  if (inst.has_function()) j["function"] = inst.function().name();
  return j;
}

CheckInstance instance_from_json(const json& j) {
  const double tol = j.contains("hypothesis_tolerance")
                         ? number(j.at("hypothesis_tolerance"), "hypothesis_tolerance")
                         : kDefaultLoewnerTolerance;
  auto a = hermitian_from_json(field(j, "A"));
  auto phi = map_from_json(field(j, "map"));
  CheckInstance inst = j.contains("interval")
                           ? CheckInstance(std::move(a), std::move(phi),
                                           interval_from_json(j.at("interval")), tol)
                           : CheckInstance::tight(std::move(a), std::move(phi));
  if (j.contains("B")) {
    const auto kind = j.contains("sandwich") ? sandwich_from_name(j.at("sandwich").get<std::string>())
                                             : Sandwich::kAbsolute;
    inst.with_b(hermitian_from_json(j.at("B")), kind);
  }
  if (j.contains("x")) inst.with_state(VectorState(vector_from_json(j.at("x"))));
  if (j.contains("p")) inst.with_exponent(number(j.at("p"), "p"));
  if (j.contains("alpha")) inst.with_alpha(number(j.at("alpha"), "alpha"));
  if (j.contains("function")) {
    if (!j.at("function").is_string()) throw DomainError("function must be a catalog name");
    inst.with_function(catalog::by_name(j.at("function").get<std::string>()));
  }
  return inst;
}

json result_to_json(const CheckResult& r) {
  return {{"check_name", r.check_name},
          {"params", r.params},
          {"margin", r.margin},
          {"holds", r.holds},
          {"tolerance", r.tolerance},
          {"lhs_norm", r.lhs_norm},
          {"rhs_norm", r.rhs_norm},
          {"difference_eigenvalues", r.difference_eigenvalues}};
}

std::string json_to_text(const json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace opineq
