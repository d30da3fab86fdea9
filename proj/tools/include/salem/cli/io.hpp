#pragma once

// File formats: {"coeffs": [...]} for polynomials (low-to-high),
// {"rows": [[...], ...]} for matrices, {"symmetric": true, "rows": ...} for
// Gram matrices (optionally tagged "supersingular_prime": p) and
// {"vector": [...]} for lattice vectors. Integers are
// decimal strings (plain JSON integers are accepted too).

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <salem/matrix.hpp>
#include <salem/polyarith.hpp>

namespace salem::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

IntPoly parse_poly(std::string_view text);
IntMatrix parse_matrix(std::string_view text, bool gram);
IntVector parse_vector(std::string_view text);
/// Optional "supersingular_prime" tag of a Gram file.
std::optional<unsigned long> parse_supersingular_tag(std::string_view text);

std::string poly_json(const IntPoly& p);
std::string matrix_json(const IntMatrix& m, bool gram);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Fixture directory: $SALEM_FIXTURE_DIR when set, else the build-time path.
std::filesystem::path fixture_dir();

}  // namespace salem::cli
