#include "locprog/problem_io.hpp"

#include "locprog/error.hpp"
#include "locprog/spaces.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

namespace locprog::io {

using nlohmann::json;
using calculus::Region;
using calculus::SmoothMap;
using vopt::ConeSpec;
using vopt::ConstraintSet;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  fail(Error::Kind::validation, path.empty() ? what : path + ": " + what);
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(path, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || item.key() == a;
    if (!known) invalid(path, "unknown key '" + item.key() + "'");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing key '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) invalid(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) invalid(path, "expected a finite number");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) invalid(path, "integer out of range");
  return static_cast<int>(v);
}

Vector vector(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected a list of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], index_path(path, i));
  return v;
}

/// A number or a list of numbers.
std::vector<double> number_list(const json& j, const std::string& path) {
  if (j.is_number()) return {number(j, path)};
  const Vector v = vector(j, path);
  return {v.data(), v.data() + v.size()};
}

/// A list of equally long rows.
Matrix matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) invalid(path, "expected a nonempty list of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector(j[i], index_path(path, i)));
  Matrix m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) invalid(index_path(path, i), "rows must have equal length");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

/// Generators given as a list of vectors, returned as matrix columns.
Matrix generators(const json& j, const std::string& path) { return matrix(j, path).transpose(); }

/// Bounds may be null for an unbounded direction.
Vector bounds(const json& j, const std::string& path, double missing) {
  if (!j.is_array()) invalid(path, "expected a list of numbers or nulls");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = j[i].is_null() ? missing : number(j[i], index_path(path, i));
  return v;
}

Region region(const json& j, const std::string& path) {
  check_keys(j, path, {"lo", "hi"});
  const double inf = std::numeric_limits<double>::infinity();
  return Region::box(bounds(require(j, path, "lo"), child(path, "lo"), -inf),
                     bounds(require(j, path, "hi"), child(path, "hi"), inf));
}

SmoothMap parse_map(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected a map object");
  const json& type_node = require(j, path, "type");
  if (!type_node.is_string()) invalid(child(path, "type"), "expected a string");
  const std::string type = type_node.get<std::string>();
  auto get = [&](const char* key) -> const json& { return require(j, path, key); };
  auto opt = [&](const char* key) -> const json* {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  };
  SmoothMap map = [&]() -> SmoothMap {
    if (type == "affine" || type == "linear") {
      check_keys(j, path, {"type", "A", "b", "region"});
      const Matrix a = matrix(get("A"), child(path, "A"));
      const Vector b = opt("b") ? vector(*opt("b"), child(path, "b")) : Vector(Vector::Zero(a.rows()));
      return calculus::affine(a, b);
    }
    if (type == "identity") {
      check_keys(j, path, {"type", "dim", "region"});
      const int dim = integer(get("dim"), child(path, "dim"));
      if (dim < 1) invalid(child(path, "dim"), "dimension must be >= 1");
      return calculus::identity(dim);
    }
    if (type == "quadratic") {
      check_keys(j, path, {"type", "Q", "a", "c", "region"});
      const Matrix q = matrix(get("Q"), child(path, "Q"));
      const Vector a = opt("a") ? vector(*opt("a"), child(path, "a")) : Vector(Vector::Zero(q.rows()));
      const double c = opt("c") ? number(*opt("c"), child(path, "c")) : 0.0;
      return calculus::quadratic(q, a, c);
    }
    if (type == "polynomial") {
      check_keys(j, path, {"type", "coeffs", "region"});
      const json& coeffs = get("coeffs");
      const std::string cpath = child(path, "coeffs");
      if (!coeffs.is_array() || coeffs.empty()) invalid(cpath, "expected a nonempty list of coefficient lists");
      std::vector<std::array<double, 5>> rows;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Vector c = vector(coeffs[i], index_path(cpath, i));
        if (c.size() < 1 || c.size() > 5) invalid(index_path(cpath, i), "degree must be between 0 and 4");
        std::array<double, 5> row{};
        for (Eigen::Index k = 0; k < c.size(); ++k) row[static_cast<std::size_t>(k)] = c(k);
        rows.push_back(row);
      }
      return calculus::polynomial(rows);
    }
    if (type == "logsum") {
      check_keys(j, path, {"type", "a", "b", "region"});
      const double b = opt("b") ? number(*opt("b"), child(path, "b")) : 0.0;
      return calculus::logsum(vector(get("a"), child(path, "a")), b);
    }
    if (type == "polar") {
      check_keys(j, path, {"type", "region"});
      return calculus::polar();
    }
    if (type == "compose") {
      check_keys(j, path, {"type", "outer", "inner", "region"});
      return calculus::compose(parse_map(get("outer"), child(path, "outer")),
                               parse_map(get("inner"), child(path, "inner")));
    }
    if (type == "stack") {
      check_keys(j, path, {"type", "parts", "region"});
      const json& parts = get("parts");
      const std::string ppath = child(path, "parts");
      if (!parts.is_array() || parts.empty()) invalid(ppath, "expected a nonempty list of maps");
      std::vector<SmoothMap> maps;
      for (std::size_t i = 0; i < parts.size(); ++i) maps.push_back(parse_map(parts[i], index_path(ppath, i)));
      return calculus::stack(maps);
    }
    if (type == "scale") {
      check_keys(j, path, {"type", "map", "factor", "region"});
      return calculus::scale(parse_map(get("map"), child(path, "map")), number(get("factor"), child(path, "factor")));
    }
    if (type == "translate") {
      check_keys(j, path, {"type", "map", "offset", "region"});
      return calculus::translate(parse_map(get("map"), child(path, "map")), vector(get("offset"), child(path, "offset")));
    }
    invalid(child(path, "type"), "unknown map type '" + type + "' (not in the catalog)");
  }();
  if (const json* r = opt("region")) map = map.with_region(region(*r, child(path, "region")));
  return map;
}

spaces::SpaceSpec space(const json& j, const std::string& path) {
  check_keys(j, path, {"dim", "norm", "label"});
  const int dim = integer(require(j, path, "dim"), child(path, "dim"));
  std::string norm = "euclidean";
  if (const auto it = j.find("norm"); it != j.end()) {
    if (!it->is_string()) invalid(child(path, "norm"), "expected \"euclidean\" or \"p:<value>\"");
    norm = it->get<std::string>();
  }
  std::string label;
  if (const auto it = j.find("label"); it != j.end() && it->is_string()) label = it->get<std::string>();
  if (norm == "euclidean") return spaces::SpaceSpec::euclidean(dim, label);
  if (norm.rfind("p:", 0) == 0) {
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(norm.substr(2), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != norm.size() - 2) invalid(child(path, "norm"), "malformed p-norm '" + norm + "'");
    return spaces::SpaceSpec::p_norm(dim, p, label);
  }
  invalid(child(path, "norm"), "expected \"euclidean\" or \"p:<value>\"");
}

ConeSpec cone(const json& j, const std::string& path) {
  check_keys(j, path, {"kind", "dim", "generators"});
  const json& kind = require(j, path, "kind");
  if (kind == "nonneg_orthant") return ConeSpec::nonneg_orthant(integer(require(j, path, "dim"), child(path, "dim")));
  if (kind == "polyhedral") return ConeSpec::polyhedral(generators(require(j, path, "generators"), child(path, "generators")));
  invalid(child(path, "kind"), "expected \"nonneg_orthant\" or \"polyhedral\"");
}

ConstraintSet constraint(const json& j, const std::string& path) {
  check_keys(j, path, {"kind", "dim", "generators", "lo", "hi", "center", "radius"});
  const json& kind = require(j, path, "kind");
  if (kind == "zero") return ConstraintSet::singleton_zero(integer(require(j, path, "dim"), child(path, "dim")));
  if (kind == "nonneg_orthant" || kind == "polyhedral") return ConstraintSet::cone(cone(j, path));
  if (kind == "box")
    return ConstraintSet::box(vector(require(j, path, "lo"), child(path, "lo")),
                              vector(require(j, path, "hi"), child(path, "hi")));
  if (kind == "ball")
    return ConstraintSet::ball(vector(require(j, path, "center"), child(path, "center")),
                               number(require(j, path, "radius"), child(path, "radius")));
  invalid(child(path, "kind"), "expected \"zero\", \"nonneg_orthant\", \"polyhedral\", \"box\" or \"ball\"");
}

std::vector<Vector> weight_list(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) invalid(path, "expected a nonempty list of weight vectors");
  if (j.front().is_number()) return {vector(j, path)};
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector(j[i], index_path(path, i)));
  return out;
}

void check_weights(const std::vector<Vector>& weights, const ConeSpec& k, const std::string& path) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Vector& w = weights[i];
    if (w.size() != k.ambient_dim()) invalid(index_path(path, i), "weights must have one entry per objective");
    if (!(w.lpNorm<1>() > 0.0)) invalid(index_path(path, i), "weights must be nonzero");
    if (!k.dual_contains(w, 1e-12 * w.lpNorm<1>())) invalid(index_path(path, i), "weights must lie in the dual cone of K");
  }
}

/// Economy allocations are written as one list per consumer.
Vector allocation(const json& j, const std::string& path, const economy::Economy& e) {
  const Matrix rows = matrix(j, path);
  if (rows.rows() != e.n_consumers() || rows.cols() != e.n_goods())
    invalid(path, "expected one bundle of " + std::to_string(e.n_goods()) + " goods per consumer");
  std::vector<Vector> bundles;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) bundles.push_back(rows.row(i).transpose());
  return e.stack(bundles);
}

std::vector<double> radii_list(const json& j, const std::string& path) {
  std::vector<double> eps = number_list(j, path);
  if (eps.empty()) invalid(path, "expected at least one radius");
  for (double e : eps)
    if (!(e > 0.0)) invalid(path, "radii must be positive");
  return eps;
}

economy::ConsumptionSet consumption_set(const json& j, const std::string& path) {
  check_keys(j, path, {"type", "lo", "hi", "center", "radius"});
  const json& type = require(j, path, "type");
  if (type == "box")
    return economy::ConsumptionSet::box(vector(require(j, path, "lo"), child(path, "lo")),
                                        vector(require(j, path, "hi"), child(path, "hi")));
  if (type == "ball")
    return economy::ConsumptionSet::ball(vector(require(j, path, "center"), child(path, "center")),
                                         number(require(j, path, "radius"), child(path, "radius")));
  invalid(child(path, "type"), "expected \"box\" or \"ball\"");
}

ConstraintSet theta(const json& j, const std::string& path, int goods) {
  if (j == "zero") return economy::theta_zero(goods);
  if (j == "neg_orthant") return economy::theta_neg_orthant(goods);
  if (j.is_object()) {
    check_keys(j, path, {"generators"});
    const Matrix g = generators(require(j, path, "generators"), child(path, "generators"));
    if (g.rows() != goods) invalid(path, "generators must live in the commodity space");
    return ConstraintSet::cone(ConeSpec::polyhedral(g));
  }
  invalid(path, "expected \"zero\", \"neg_orthant\" or {\"generators\": [...]}");
}

void parse_vector_problem(const json& root, ProblemFile& out) {
  check_keys(root, "", {"kind", "space", "h", "g", "C", "K", "region", "x0", "eps", "weights", "certificate", "description"});
  const auto sp = space(require(root, "", "space"), "space");
  if (sp.norm_kind() != spaces::NormKind::euclidean)
    invalid("space.norm", "solvers require a euclidean space; p-norm spaces serve modulus diagnostics only");
  const SmoothMap h = parse_map(require(root, "", "h"), "h");
  const SmoothMap g = parse_map(require(root, "", "g"), "g");
  if (h.domain_dim() != sp.dimension()) invalid("h", "domain dimension must equal space.dim");
  const Region reg = root.contains("region") ? region(root["region"], "region") : Region::unbounded(sp.dimension());
  out.problem.emplace(h, g, constraint(require(root, "", "C"), "C"), cone(require(root, "", "K"), "K"), reg);
  out.x0 = vector(require(root, "", "x0"), "x0");
  if (out.x0.size() != sp.dimension()) invalid("x0", "dimension must equal space.dim");
  out.eps = radii_list(require(root, "", "eps"), "eps");
  if (root.contains("weights")) {
    out.weights = weight_list(root["weights"], "weights");
    check_weights(out.weights, out.problem->order_cone(), "weights");
  }
  if (root.contains("certificate")) {
    const json& c = root["certificate"];
    check_keys(c, "certificate", {"x_eps", "w_star", "y_star", "eps"});
    vopt::SolutionCertificate cert;
    cert.x_eps = vector(require(c, "certificate", "x_eps"), "certificate.x_eps");
    cert.w_star = vector(require(c, "certificate", "w_star"), "certificate.w_star");
    cert.y_star = vector(require(c, "certificate", "y_star"), "certificate.y_star");
    if (cert.x_eps.size() != out.problem->domain_dim()) invalid("certificate.x_eps", "wrong dimension");
    if (cert.w_star.size() != out.problem->objective_dim()) invalid("certificate.w_star", "wrong dimension");
    if (cert.y_star.size() != out.problem->constraint_dim()) invalid("certificate.y_star", "wrong dimension");
    out.certificate = cert;
  }
}

void parse_economy(const json& root, ProblemFile& out) {
  check_keys(root, "", {"kind", "commodities", "consumers", "endowment", "theta", "x0", "eps", "weights", "certificate", "description"});
  const int goods = integer(require(root, "", "commodities"), "commodities");
  if (goods < 1) invalid("commodities", "need at least one good");
  const json& list = require(root, "", "consumers");
  if (!list.is_array() || list.empty()) invalid("consumers", "expected a nonempty list");
  std::vector<economy::Consumer> consumers;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = index_path("consumers", i);
    check_keys(list[i], path, {"region", "utility", "label"});
    consumers.push_back({consumption_set(require(list[i], path, "region"), child(path, "region")),
                         parse_map(require(list[i], path, "utility"), child(path, "utility"))});
  }
  const Vector endowment = vector(require(root, "", "endowment"), "endowment");
  if (endowment.size() != goods) invalid("endowment", "must have one entry per good");
  out.economy.emplace(std::move(consumers), endowment, theta(require(root, "", "theta"), "theta", goods));
  const auto& e = *out.economy;
  out.x0 = allocation(require(root, "", "x0"), "x0", e);
  out.eps = radii_list(require(root, "", "eps"), "eps");
  if (root.contains("weights")) {
    out.weights = weight_list(root["weights"], "weights");
    check_weights(out.weights, ConeSpec::nonneg_orthant(e.n_consumers()), "weights");
  }
  if (root.contains("certificate")) {
    const json& c = root["certificate"];
    const std::string cp = "certificate";
    check_keys(c, cp, {"allocation", "reference", "price", "distribution", "radii", "weights"});
    economy::EquilibriumCertificate cert;
    cert.allocation = allocation(require(c, cp, "allocation"), child(cp, "allocation"), e);
    cert.reference = c.contains("reference") ? allocation(c["reference"], child(cp, "reference"), e) : out.x0;
    cert.price = vector(require(c, cp, "price"), child(cp, "price"));
    if (cert.price.size() != goods) invalid(child(cp, "price"), "must have one entry per good");
    const Vector dist = allocation(require(c, cp, "distribution"), child(cp, "distribution"), e);
    for (int i = 0; i < e.n_consumers(); ++i) cert.distribution.push_back(e.bundle(dist, i));
    const std::vector<double> radii = number_list(require(c, cp, "radii"), child(cp, "radii"));
    if (static_cast<int>(radii.size()) != e.n_consumers()) invalid(child(cp, "radii"), "need one radius per consumer");
    for (double r : radii)
      if (!(r > 0.0)) invalid(child(cp, "radii"), "radii must be positive");
    cert.radii = radii;
    cert.weights = c.contains("weights") ? vector(c["weights"], child(cp, "weights")) : Vector();
    cert.residuals = economy::equilibrium_residuals(e, cert);
    out.equilibrium = cert;
  }
}

void parse_map_file(const json& root, ProblemFile& out) {
  check_keys(root, "", {"kind", "space", "map", "x0", "eps", "eps_max", "description"});
  const auto sp = space(require(root, "", "space"), "space");
  if (sp.norm_kind() != spaces::NormKind::euclidean)
    invalid("space.norm", "solvers require a euclidean space; p-norm spaces serve modulus diagnostics only");
  out.map = parse_map(require(root, "", "map"), "map");
  if (out.map->domain_dim() != sp.dimension()) invalid("map", "domain dimension must equal space.dim");
  out.x0 = vector(require(root, "", "x0"), "x0");
  if (out.x0.size() != sp.dimension()) invalid("x0", "dimension must equal space.dim");
  out.eps = radii_list(require(root, "", "eps"), "eps");
  if (root.contains("eps_max")) {
    out.eps_max = number(root["eps_max"], "eps_max");
    if (!(*out.eps_max > 0.0)) invalid("eps_max", "must be positive");
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

const char* kind_name(ProblemFile::Kind kind) noexcept {
  switch (kind) {
    case ProblemFile::Kind::vector_problem:
      return "vector_problem";
    case ProblemFile::Kind::economy:
      return "economy";
    case ProblemFile::Kind::map:
      return "map";
  }
  return "unknown";
}

void validate_radii(const ProblemFile& file, const std::vector<double>& eps) {
  for (double e : eps) {
    if (!(e > 0.0) || !std::isfinite(e)) invalid("eps", "radii must be positive");
    if (file.problem) {
      vopt::Localization(*file.problem, file.x0, e);
    } else if (file.economy) {
      const auto& econ = *file.economy;
      for (int i = 0; i < econ.n_consumers(); ++i)
        if (!econ.consumers()[static_cast<std::size_t>(i)].set.contains_ball(econ.bundle(file.x0, i), e))
          invalid("eps", "B(x0, " + std::to_string(e) + ") leaves the consumption set of consumer " + std::to_string(i + 1));
      vopt::Localization(economy::as_vector_problem(econ), file.x0, e);
    } else if (file.map) {
      if (!file.map->region().contains_ball(file.x0, e)) invalid("eps", "B(x0, eps) leaves the region of the map");
    }
  }
}

ProblemFile parse_problem(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] ".
    if (const auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    fail(Error::Kind::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
  if (!root.is_object()) invalid("", "top level must be an object");
  ProblemFile out;
  try {
    const json& kind = require(root, "", "kind");
    if (kind == "vector_problem") {
      out.kind = ProblemFile::Kind::vector_problem;
      parse_vector_problem(root, out);
    } else if (kind == "economy") {
      out.kind = ProblemFile::Kind::economy;
      parse_economy(root, out);
    } else if (kind == "map") {
      out.kind = ProblemFile::Kind::map;
      parse_map_file(root, out);
    } else {
      invalid("kind", "expected \"vector_problem\", \"economy\" or \"map\"");
    }
    validate_radii(out, out.eps);
  } catch (const json::exception& e) {
    fail(Error::Kind::validation, e.what());
  } catch (const Error& e) {
    // Library invariants raised while building objects are input errors here.
    if (e.is_input_error()) throw;
    fail(Error::Kind::validation, e.what());
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Error::Kind::validation, "cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

}  // namespace locprog::io
