#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lagfe/geometry.hpp"
#include "lagfe/json_io.hpp"
#include "lagfe/polynomial.hpp"

namespace lagfe {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SuiteConfig {
  std::size_t d_max = 3;
  unsigned k_max = 4;
  unsigned samples = 5;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> filter;  // empty: every registered check
  unsigned jobs = 0;                // 0: hardware concurrency
};

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::uint64_t cases = 0;
  Json counterexample;  // null when passing
};

struct VerifyReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_pass() const { return failed() == 0; }

  /// No timings or thread counts, so equal inputs give byte-identical output.
  Json to_json() const;
  std::string to_text() const;
};

struct CatalogEntry {
  std::string id;
  std::string title;
};

/// Registered checks in report order.
std::vector<CatalogEntry> catalog();

/// Throws UnknownLemmaError for a filter id not in the catalog,
/// BoundsError for d_max < 1 or samples < 1.
VerifyReport run_suite(const SuiteConfig& config);
VerifyReport run_suite(std::size_t d_max, unsigned k_max, unsigned samples, std::uint64_t seed,
                       const std::vector<std::string>& filter = {});

// Seeded test data: numerators in [-10, 10], denominators in [1, 4].

/// Independent stream per (seed, label).
Rng make_rng(std::uint64_t seed, const std::string& label);
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
Rational random_rational(Rng& rng);
Point random_point(std::size_t d, Rng& rng);
/// Rejection sampling; DegenerateSimplexError after 1000 attempts.
VertexFamily random_independent_family(std::size_t d, Rng& rng);
/// Random coefficients on A_k^d.
Polynomial random_polynomial(std::size_t d, unsigned k, Rng& rng);
AffineMap random_affine(std::size_t from, std::size_t to, Rng& rng);
/// Uniform random permutation of [0..d].
std::vector<std::size_t> random_permutation(std::size_t d, Rng& rng);

}  // namespace lagfe
