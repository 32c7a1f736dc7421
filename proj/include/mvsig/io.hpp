#pragma once

// JSON interchange (schema_version "1").
//
// Signal file:
//   {
//     "schema_version": "1",
//     "n": N, "m": M, "k": K,
//     "field": "real" | "complex",
//     "signals": [ K x [ M x N x N entries as [re, im] ] ],
//     "metadata": { "interval": [a, b], "basis": "legendre" },   // optional
//     "claims": { "orthonormal": bool, "independent": bool,     // optional
//                 "degenerate_members": [indices] }
//   }
// Any other top-level key is kept verbatim in SignalFile::extensions.
//
// Sampled signal file:
//   {
//     "schema_version": "1",
//     "n": N, "k": K,
//     "rule": "trapezoid" | "gauss-legendre",
//     "interval": [a, b],            // required for gauss-legendre
//     "grid": [t_1 < ... < t_M],
//     "samples": [ K x [ M x N x N entries as [re, im] ] ]
//   }

#include "mvsig/family.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mvsig {

/// Properties a file asserts about its family; checked by `mvsig verify`.
struct Claims {
  std::optional<bool> orthonormal;
  std::optional<bool> independent;
  std::vector<std::size_t> degenerate_members;

  bool empty() const { return !orthonormal && !independent && degenerate_members.empty(); }
  friend bool operator==(const Claims&, const Claims&) = default;
};

struct SignalFile {
  std::string schema_version = "1";
  SignalFamily family;
  std::optional<std::array<double, 2>> interval;
  std::optional<std::string> basis;
  Claims claims;
  nlohmann::json extensions = nlohmann::json::object();
};

nlohmann::json matrix_to_json(const CMatrix& a);
/// Parses an N x N matrix of [re, im] pairs; errors name `path`.
CMatrix matrix_from_json(const nlohmann::json& j, const std::string& path, Index n);

nlohmann::json to_json(const SignalFile& file);
SignalFile signal_file_from_json(const nlohmann::json& j);

/// Throws SchemaError on malformed content (path "" for unparsable JSON).
SignalFile load_signal_file(const std::filesystem::path& path);
void save_signal_file(const std::filesystem::path& path, const SignalFile& file);

enum class SampleRule { Trapezoid, GaussLegendre };

struct SampledSignalFile {
  std::string schema_version = "1";
  Index n = 0;
  SampleRule rule = SampleRule::Trapezoid;
  std::optional<std::array<double, 2>> interval;
  std::vector<double> grid;
  std::vector<std::vector<CMatrix>> samples;  // [signal][grid point]
};

SampledSignalFile sampled_file_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SampledSignalFile& file);
SampledSignalFile load_sampled_file(const std::filesystem::path& path);

/// Maps samples to coefficients c_m = sqrt(w_m) f(t_m) with the rule's
/// quadrature weights, so coefficient inner products equal the quadrature
/// approximation of the integral inner product.
SignalFamily ingest_sampled(const SampledSignalFile& file);

}  // namespace mvsig
