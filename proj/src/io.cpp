#include "mvsig/io.hpp"

#include "mvsig/errors.hpp"
#include "mvsig/quadrature.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <sstream>

namespace mvsig {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing required field");
  return *it;
}

Index require_positive_int(const json& j, const std::string& path, const char* key) {
  const json& v = require(j, path, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw SchemaError(path + "/" + key, "expected a positive integer");
  }
  return static_cast<Index>(v.get<std::int64_t>());
}

double require_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

void require_array(const json& v, const std::string& path, std::size_t size) {
  if (!v.is_array() || v.size() != size) {
    throw SchemaError(path, "expected an array of length " + std::to_string(size));
  }
}

std::optional<std::array<double, 2>> parse_interval(const json& v, const std::string& path) {
  require_array(v, path, 2);
  std::array<double, 2> ab{require_number(v[0], path + "/0"), require_number(v[1], path + "/1")};
  if (!(ab[0] < ab[1])) throw SchemaError(path, "interval must satisfy a < b");
  return ab;
}

std::vector<std::vector<CMatrix>> parse_signal_array(const json& v, const std::string& path,
                                                     std::size_t k, std::size_t m, Index n) {
  require_array(v, path, k);
  std::vector<std::vector<CMatrix>> out(k);
  for (std::size_t s = 0; s < k; ++s) {
    const std::string sp = path + "/" + std::to_string(s);
    require_array(v[s], sp, m);
    out[s].reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      out[s].push_back(matrix_from_json(v[s][i], sp + "/" + std::to_string(i), n));
    }
  }
  return out;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

void check_version(const json& j) {
  const json& v = require(j, "", "schema_version");
  if (!v.is_string() || v.get<std::string>() != "1") {
    throw SchemaError("/schema_version", "unsupported schema version (expected \"1\")");
  }
}

}  // namespace

json matrix_to_json(const CMatrix& a) {
  json rows = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, const std::string& path, Index n) {
  require_array(j, path, static_cast<std::size_t>(n));
  CMatrix a(n, n);
  for (Index r = 0; r < n; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    require_array(j[r], rp, static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) {
      const std::string ep = rp + "/" + std::to_string(c);
      require_array(j[r][c], ep, 2);
      a(r, c) = Complex(require_number(j[r][c][0], ep + "/0"), require_number(j[r][c][1], ep + "/1"));
    }
  }
  return a;
}

json to_json(const SignalFile& file) {
  json j = file.extensions.is_object() ? file.extensions : json::object();
  const SignalFamily& fam = file.family;
  j["schema_version"] = file.schema_version;
  j["n"] = fam.n();
  j["m"] = fam.m();
  j["k"] = fam.size();
  j["field"] = fam.field() == Field::Real ? "real" : "complex";
  json signals = json::array();
  for (const auto& f : fam) {
    json coeffs = json::array();
    for (Index i = 0; i < f.m(); ++i) coeffs.push_back(matrix_to_json(f.coeff(i)));
    signals.push_back(std::move(coeffs));
  }
  j["signals"] = std::move(signals);
  if (file.interval || file.basis) {
    json meta = json::object();
    if (file.interval) meta["interval"] = {(*file.interval)[0], (*file.interval)[1]};
    if (file.basis) meta["basis"] = *file.basis;
    j["metadata"] = std::move(meta);
  }
  if (!file.claims.empty()) {
    json claims = json::object();
    if (file.claims.orthonormal) claims["orthonormal"] = *file.claims.orthonormal;
    if (file.claims.independent) claims["independent"] = *file.claims.independent;
    if (!file.claims.degenerate_members.empty()) {
      claims["degenerate_members"] = file.claims.degenerate_members;
    }
    j["claims"] = std::move(claims);
  }
  return j;
}

SignalFile signal_file_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  check_version(j);
  const Index n = require_positive_int(j, "", "n");
  const Index m = require_positive_int(j, "", "m");
  const auto k = static_cast<std::size_t>(require_positive_int(j, "", "k"));

  const json& field_json = require(j, "", "field");
  if (!field_json.is_string() ||
      (field_json.get<std::string>() != "real" && field_json.get<std::string>() != "complex")) {
    throw SchemaError("/field", "expected \"real\" or \"complex\"");
  }
  const bool real = field_json.get<std::string>() == "real";

  auto coeffs = parse_signal_array(require(j, "", "signals"), "/signals", k,
                                   static_cast<std::size_t>(m), n);
  std::vector<MatrixSignal> members;
  members.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    members.emplace_back(coeffs[s]);
    if (real && members.back().field() != Field::Real) {
      throw SchemaError("/signals/" + std::to_string(s), "real file has a nonzero imaginary part");
    }
  }

  SignalFile file{.schema_version = "1",
                  .family = SignalFamily(std::move(members)),
                  .interval = {},
                  .basis = {},
                  .claims = {},
                  .extensions = json::object()};
  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("/metadata", "expected an object");
    if (auto iv = it->find("interval"); iv != it->end()) {
      file.interval = parse_interval(*iv, "/metadata/interval");
    }
    if (auto b = it->find("basis"); b != it->end()) {
      if (!b->is_string()) throw SchemaError("/metadata/basis", "expected a string");
      file.basis = b->get<std::string>();
    }
  }
  if (auto it = j.find("claims"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("/claims", "expected an object");
    for (const char* key : {"orthonormal", "independent"}) {
      if (auto c = it->find(key); c != it->end()) {
        if (!c->is_boolean()) throw SchemaError(std::string("/claims/") + key, "expected a boolean");
        (std::string(key) == "orthonormal" ? file.claims.orthonormal : file.claims.independent) =
            c->get<bool>();
      }
    }
    if (auto d = it->find("degenerate_members"); d != it->end()) {
      if (!d->is_array()) throw SchemaError("/claims/degenerate_members", "expected an array");
      for (std::size_t i = 0; i < d->size(); ++i) {
        const json& v = (*d)[i];
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= k) {
          throw SchemaError("/claims/degenerate_members/" + std::to_string(i),
                            "expected a member index below k");
        }
        file.claims.degenerate_members.push_back(v.get<std::size_t>());
      }
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"schema_version", "n", "m", "k", "field", "signals", "metadata",
                                  "claims"};
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known)) {
      file.extensions[it.key()] = it.value();
    }
  }
  return file;
}

SignalFile load_signal_file(const std::filesystem::path& path) {
  return signal_file_from_json(parse_file(path));
}

void save_signal_file(const std::filesystem::path& path, const SignalFile& file) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json(file).dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

SampledSignalFile sampled_file_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  check_version(j);
  SampledSignalFile file;
  file.n = require_positive_int(j, "", "n");
  const auto k = static_cast<std::size_t>(require_positive_int(j, "", "k"));

  const json& rule = require(j, "", "rule");
  if (rule == "trapezoid") {
    file.rule = SampleRule::Trapezoid;
  } else if (rule == "gauss-legendre") {
    file.rule = SampleRule::GaussLegendre;
  } else {
    throw SchemaError("/rule", "expected \"trapezoid\" or \"gauss-legendre\"");
  }
  if (auto it = j.find("interval"); it != j.end()) file.interval = parse_interval(*it, "/interval");

  const json& grid = require(j, "", "grid");
  if (!grid.is_array() || grid.empty()) throw SchemaError("/grid", "expected a non-empty array");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    file.grid.push_back(require_number(grid[i], "/grid/" + std::to_string(i)));
    if (i > 0 && !(file.grid[i] > file.grid[i - 1])) {
      throw SchemaError("/grid/" + std::to_string(i), "grid must be strictly increasing");
    }
  }
  if (file.interval &&
      (file.grid.front() < (*file.interval)[0] || file.grid.back() > (*file.interval)[1])) {
    throw SchemaError("/grid", "grid leaves the interval");
  }
  file.samples = parse_signal_array(require(j, "", "samples"), "/samples", k, file.grid.size(),
                                    file.n);
  return file;
}

json to_json(const SampledSignalFile& file) {
  json j;
  j["schema_version"] = file.schema_version;
  j["n"] = file.n;
  j["k"] = file.samples.size();
  j["rule"] = file.rule == SampleRule::Trapezoid ? "trapezoid" : "gauss-legendre";
  if (file.interval) j["interval"] = {(*file.interval)[0], (*file.interval)[1]};
  j["grid"] = file.grid;
  json samples = json::array();
  for (const auto& s : file.samples) {
    json per = json::array();
    for (const auto& a : s) per.push_back(matrix_to_json(a));
    samples.push_back(std::move(per));
  }
  j["samples"] = std::move(samples);
  return j;
}

SampledSignalFile load_sampled_file(const std::filesystem::path& path) {
  return sampled_file_from_json(parse_file(path));
}

SignalFamily ingest_sampled(const SampledSignalFile& file) {
  const std::size_t m = file.grid.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (!(file.grid[i] > file.grid[i - 1])) {
      throw SchemaError("/grid/" + std::to_string(i), "grid must be strictly increasing");
    }
  }
  std::vector<double> weights;
  if (file.rule == SampleRule::Trapezoid) {
    if (m < 2) throw SchemaError("/grid", "trapezoid rule needs at least two points");
    weights = trapezoid_weights(file.grid);
  } else {
    if (!file.interval) throw SchemaError("/interval", "gauss-legendre rule needs an interval");
    const QuadratureRule rule = gauss_legendre(m, (*file.interval)[0], (*file.interval)[1]);
    const double width = (*file.interval)[1] - (*file.interval)[0];
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(rule.nodes[i] - file.grid[i]) > 1e-10 * width) {
        throw SchemaError("/grid/" + std::to_string(i), "grid is not the Gauss-Legendre node set");
      }
    }
    weights = rule.weights;
  }

  if (file.samples.empty()) throw SchemaError("/samples", "need at least one signal");
  std::vector<MatrixSignal> members;
  for (std::size_t s = 0; s < file.samples.size(); ++s) {
    if (file.samples[s].size() != m) {
      throw SchemaError("/samples/" + std::to_string(s), "sample count differs from grid size");
    }
    std::vector<CMatrix> coeffs;
    coeffs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const CMatrix& a = file.samples[s][i];
      if (a.rows() != file.n || a.cols() != file.n) {
        throw SchemaError("/samples/" + std::to_string(s) + "/" + std::to_string(i),
                          "sample has the wrong shape");
      }
      coeffs.push_back(std::sqrt(weights[i]) * a);
    }
    members.emplace_back(coeffs);
  }
  return SignalFamily(std::move(members));
}

}  // namespace mvsig
