// mvsig: command-line front end for matrix-valued signal analysis.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "mvsig/errors.hpp"
#include "mvsig/gram_schmidt.hpp"
#include "mvsig/independence.hpp"
#include "mvsig/io.hpp"
#include "mvsig/lattice.hpp"
#include "mvsig/random.hpp"
#include "mvsig/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <string>

using nlohmann::json;
using namespace mvsig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct GlobalOptions {
  double tol_rank = ToleranceConfig{}.rank_rel_tol;
  double tol_ortho = ToleranceConfig{}.ortho_tol;
  std::string format = "json";

  ToleranceConfig config() const {
    ToleranceConfig cfg;
    cfg.rank_rel_tol = tol_rank;
    cfg.ortho_tol = tol_ortho;
    cfg.validate();
    return cfg;
  }
  bool json_output() const { return format == "json"; }
};

json coefficient_table_json(const CoefficientTable& table, bool include_diagonal) {
  json entries = json::array();
  for (std::size_t k = 0; k < table.size(); ++k) {
    for (std::size_t l = 0; l < k + (include_diagonal ? 1 : 0); ++l) {
      entries.push_back({{"l", l}, {"k", k}, {"value", matrix_to_json(table(l, k))}});
    }
  }
  return entries;
}

json independence_json(const IndependenceReport& r) {
  json j = {{"independent", r.independent},
            {"block_gram_rank", r.block_gram_rank},
            {"required_rank", r.required_rank},
            {"min_eigenvalue", r.min_eigenvalue},
            {"witnesses_checked", r.witnesses_checked}};
  if (r.witness) {
    json w = json::array();
    for (const auto& f : *r.witness) w.push_back(matrix_to_json(f));
    j["witness"] = std::move(w);
  }
  return j;
}

int run_gen(const GlobalOptions& g, std::uint64_t seed, Index n, Index m, std::size_t k,
            const std::string& kind_name, const std::string& field_name,
            const std::string& out_path) {
  const ToleranceConfig cfg = g.config();
  const FamilyKind kind = parse_family_kind(kind_name);
  const Field field = field_name == "real" ? Field::Real : Field::Complex;
  SignalFile file{.family = gen_random_family(seed, n, m, k, kind, field, cfg)};
  switch (kind) {
    case FamilyKind::Orthonormal: file.claims.orthonormal = true; [[fallthrough]];
    case FamilyKind::Independent: file.claims.independent = true; break;
    case FamilyKind::Degenerate: file.claims.degenerate_members = {0}; [[fallthrough]];
    case FamilyKind::Dependent: file.claims.independent = false; break;
  }
  file.extensions["generator"] = {{"seed", seed},
                                  {"kind", std::string(to_string(kind))},
                                  {"prng", "mt19937_64"}};
  save_signal_file(out_path, file);
  if (g.json_output()) {
    std::cout << json{{"written", out_path}, {"k", k}, {"kind", kind_name}}.dump() << '\n';
  } else {
    std::cout << "wrote " << k << " " << kind_name << " signals to " << out_path << '\n';
  }
  return kExitOk;
}

int run_analyze(const GlobalOptions& g, const std::string& path) {
  const ToleranceConfig cfg = g.config();
  const SignalFile file = load_signal_file(path);
  const SignalFamily& fam = file.family;

  json signals = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const CMatrix gram = inner_product(fam[i], fam[i]);
    signals.push_back({{"index", i},
                       {"degenerate", is_degenerate(fam[i], cfg)},
                       {"rows_dependent", rows_linearly_dependent(fam[i], cfg)},
                       {"norm_m", norm_m(fam[i])},
                       {"norm_l2", norm_l2(fam[i])},
                       {"gram", matrix_to_json(gram)}});
  }
  const BlockGram bg = block_gram(fam);
  json blocks = json::array();
  for (std::size_t r = 0; r < bg.k; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < bg.k; ++c) row.push_back(matrix_to_json(bg.block(r, c)));
    blocks.push_back(std::move(row));
  }
  bool orthogonal = true;
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.size(); ++b) {
      orthogonal = orthogonal && is_orthogonal_b(fam[a], fam[b], cfg.ortho_tol);
    }
  }
  const double ortho_residual = orthonormality_residual(fam.signals());
  const IndependenceReport ind = is_linearly_independent(fam, cfg);

  json report = {{"n", fam.n()},
                 {"m", fam.m()},
                 {"k", fam.size()},
                 {"field", fam.field() == Field::Real ? "real" : "complex"},
                 {"signals", std::move(signals)},
                 {"gram_blocks", std::move(blocks)},
                 {"independence", independence_json(ind)},
                 {"orthogonal", orthogonal},
                 {"orthonormal", ortho_residual <= cfg.ortho_tol},
                 {"orthonormality_residual", ortho_residual}};
  if (g.json_output()) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "N=" << fam.n() << " M=" << fam.m() << " K=" << fam.size() << '\n';
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::cout << "  signal " << i << ": " << (is_degenerate(fam[i], cfg) ? "degenerate" : "nondegenerate")
                << ", ||f||_M=" << norm_m(fam[i]) << ", ||f||=" << norm_l2(fam[i]) << '\n';
    }
    std::cout << "independent: " << (ind.independent ? "yes" : "no") << " (block Gram rank "
              << ind.block_gram_rank << "/" << ind.required_rank << ")\n"
              << "orthogonal: " << (orthogonal ? "yes" : "no") << '\n'
              << "orthonormal: " << (ortho_residual <= cfg.ortho_tol ? "yes" : "no")
              << " (residual " << ortho_residual << ")\n";
  }
  return kExitOk;
}

int run_orthonormalize(const GlobalOptions& g, const std::string& path, const std::string& out) {
  const ToleranceConfig cfg = g.config();
  const SignalFile in = load_signal_file(path);
  const SignalFamily& fam = in.family;

  const GramSchmidtResult on = orthonormalize(fam, cfg);
  const GramSchmidtResult og = orthogonalize(fam, cfg);
  const SignalFamily& basis = on.outputs();

  double parseval = 0.0;
  for (const auto& f : fam) parseval = std::max(parseval, parseval_residual(f, basis, cfg));
  const json residuals = {{"orthonormality", orthonormality_residual(basis.signals())},
                          {"span", span_residual(fam, basis)},
                          {"parseval", parseval},
                          {"gram_identity", gram_identity_residual(fam, og)}};

  SignalFile result{.family = basis};
  result.interval = in.interval;
  result.basis = in.basis;
  result.claims.orthonormal = true;
  result.claims.independent = true;
  result.extensions["gram_schmidt"] = {
      {"projections", coefficient_table_json(on.projections, true)},
      {"mu", coefficient_table_json(og.mu, false)},
      {"step_norms", og.step_norms},
      {"reorthogonalized", on.reorthogonalized},
      {"residuals", residuals}};
  save_signal_file(out, result);

  if (g.json_output()) {
    std::cout << json{{"written", out}, {"residuals", residuals}}.dump(2) << '\n';
  } else {
    std::cout << "wrote orthonormal basis of " << basis.size() << " signals to " << out << '\n'
              << "  orthonormality residual " << residuals["orthonormality"].get<double>() << '\n'
              << "  span residual " << residuals["span"].get<double>() << '\n';
  }
  return kExitOk;
}

int run_lattice_det(const GlobalOptions& g, const std::string& path) {
  const ToleranceConfig cfg = g.config();
  const MatrixLattice lat = MatrixLattice::create(load_signal_file(path).family, cfg);
  const json report = {{"determinant", lat.determinant()},
                       {"step_norms", lat.gs().step_norms},
                       {"gram_identity_residual", verify_gram_identity(lat)},
                       {"norm_inequality", verify_norm_inequality(lat)}};
  if (g.json_output()) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << std::setprecision(17) << "det(L) = " << lat.determinant() << '\n';
  }
  return kExitOk;
}

int run_lattice_nearest(const GlobalOptions& g, const std::string& path,
                        const std::string& target_path, std::int64_t bound, std::uint64_t cap) {
  const ToleranceConfig cfg = g.config();
  const MatrixLattice lat = MatrixLattice::create(load_signal_file(path).family, cfg);
  const SignalFile target = load_signal_file(target_path);
  if (target.family.size() != 1) throw SchemaError("/k", "target file must hold exactly one signal");

  const NearestPoint best = nearest_point_bruteforce(lat, target.family[0], bound, cap);
  json coeffs = json::array();
  for (const auto& c : best.point.coeffs) {
    json rows = json::array();
    for (Index i = 0; i < c.rows(); ++i) {
      json row = json::array();
      for (Index j = 0; j < c.cols(); ++j) row.push_back(c(i, j));
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  const json report = {{"coeffs", std::move(coeffs)},
                       {"distance", best.distance},
                       {"points_scanned", enumeration_count(lat, bound, cap)}};
  if (g.json_output()) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "nearest point at distance " << best.distance << '\n';
  }
  return kExitOk;
}

int run_verify(const GlobalOptions& g, const std::string& path, std::uint64_t seed) {
  const ToleranceConfig cfg = g.config();
  const SignalFile file = load_signal_file(path);
  const VerificationReport report = verify_family(file.family, file.claims, cfg, seed);
  if (g.json_output()) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json entry = {{"name", c.name}, {"passed", c.passed}, {"value", c.value},
                    {"threshold", c.threshold}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      checks.push_back(std::move(entry));
    }
    std::cout << json{{"passed", report.all_passed()}, {"checks", std::move(checks)}}.dump(2)
              << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  value=" << c.value
                << " threshold=" << c.threshold;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << '\n';
    }
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int run_ingest(const GlobalOptions& g, const std::string& path, const std::string& out) {
  const SampledSignalFile sampled = load_sampled_file(path);
  SignalFile file{.family = ingest_sampled(sampled)};
  file.interval = sampled.interval;
  file.basis = sampled.rule == SampleRule::Trapezoid ? "trapezoid-samples" : "gauss-legendre-samples";
  save_signal_file(out, file);
  if (g.json_output()) {
    std::cout << json{{"written", out}, {"k", file.family.size()}, {"m", file.family.m()}}.dump()
              << '\n';
  } else {
    std::cout << "wrote " << file.family.size() << " signals to " << out << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued signal analysis: inner products, independence, Gram-Schmidt, lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions g;
  app.add_option("--tol-rank", g.tol_rank, "relative eigenvalue cut-off for rank decisions")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol-ortho", g.tol_ortho, "orthogonality tolerance")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, out, target;
  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "degeneracy, Gram blocks and independence report");
  analyze->add_option("file", file, "signal file")->required()->check(CLI::ExistingFile);
  analyze->callback([&] { action = [&] { return run_analyze(g, file); }; });

  auto* ortho = app.add_subcommand("orthonormalize", "Gram-Schmidt orthonormalization");
  ortho->add_option("file", file, "signal file")->required()->check(CLI::ExistingFile);
  ortho->add_option("-o,--output", out, "output signal file")->required();
  ortho->callback([&] { action = [&] { return run_orthonormalize(g, file, out); }; });

  auto* lattice = app.add_subcommand("lattice", "matrix-valued lattice tools");
  lattice->require_subcommand(1);
  auto* det = lattice->add_subcommand("det", "lattice determinant");
  det->add_option("file", file, "basis signal file")->required()->check(CLI::ExistingFile);
  det->callback([&] { action = [&] { return run_lattice_det(g, file); }; });

  std::int64_t bound = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
  auto* nearest = lattice->add_subcommand("nearest", "brute-force closest lattice point");
  nearest->add_option("file", file, "basis signal file")->required()->check(CLI::ExistingFile);
  nearest->add_option("--target", target, "signal file holding one target signal")
      ->required()
      ->check(CLI::ExistingFile);
  nearest->add_option("--bound", bound, "coefficient bound B")->required()->check(CLI::NonNegativeNumber);
  nearest->add_option("--cap", cap, "maximum number of enumerated points");
  nearest->callback([&] { action = [&] { return run_lattice_nearest(g, file, target, bound, cap); }; });

  std::uint64_t seed = 0;
  Index n = 0, m = 0;
  std::size_t k = 0;
  std::string kind = "independent", field = "complex";
  auto* gen = app.add_subcommand("gen", "seeded random family");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gen->add_option("--kind", kind)
      ->check(CLI::IsMember({"independent", "orthonormal", "degenerate", "dependent"}));
  gen->add_option("--field", field)->check(CLI::IsMember({"real", "complex"}));
  gen->add_option("-o,--output", out)->required();
  gen->callback([&] { action = [&] { return run_gen(g, seed, n, m, k, kind, field, out); }; });

  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "run the invariant suite; exit 1 on any failure");
  verify->add_option("file", file, "signal file")->required()->check(CLI::ExistingFile);
  verify->add_option("--seed", verify_seed, "seed for random constants");
  verify->callback([&] { action = [&] { return run_verify(g, file, verify_seed); }; });

  auto* ingest = app.add_subcommand("ingest", "convert sampled signals to coefficient form");
  ingest->add_option("file", file, "sampled signal file")->required()->check(CLI::ExistingFile);
  ingest->add_option("-o,--output", out)->required();
  ingest->callback([&] { action = [&] { return run_ingest(g, file, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "mvsig: " << e.what() << '\n';
    return kExitInputError;
  }
}
