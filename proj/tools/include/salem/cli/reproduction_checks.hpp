#pragma once

// The end-to-end reproduction run by `salem verify-paper`.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <salem/polyarith.hpp>

namespace salem::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// SHA-256 of every shipped fixture file, keyed by file name.
const std::map<std::string, std::string>& fixture_digests();

struct CheckOptions {
  std::filesystem::path fixtures;
  std::uint64_t seed = 0;
  Rational width{1, 100000000};
  unsigned digits = 6;
};

std::vector<CheckResult> run_reproduction_checks(const CheckOptions& opts);

/// Random product of random integer polynomials of degree 1..6 with total
/// degree <= 24; used by the factorization round-trip checks.
IntPoly random_factor_product(std::uint64_t seed);

}  // namespace salem::cli
