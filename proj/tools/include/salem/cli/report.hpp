#pragma once

// JSON encodings of library results and the report envelope printed by
// every subcommand.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <salem/salem.hpp>

namespace salem::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const IntPoly& p);
Json to_json(const IntMatrix& m);
Json to_json(const RatInterval& iv);
Json to_json(const Factorization& f);
Json to_json(const FactorReport& r);
Json to_json(const BetaResult& b);
Json to_json(const TraceCertificate& c);
Json to_json(const ComposeResult& c);

struct ReportDocument {
  std::string command;
  std::vector<std::string> arguments;
  /// SHA-256 over the input files, empty when the command reads none.
  std::string input_digest;
  std::uint64_t seed = 0;
  Json payload;

  Json to_json() const;
};

/// Digest of the named inputs: SHA-256 over "name\0size\0bytes" records.
std::string input_digest(const std::vector<std::pair<std::string, std::string>>& named_inputs);

}  // namespace salem::cli
