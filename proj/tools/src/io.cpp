#include "salem/cli/io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace salem::cli {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Integer parse_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (!v.is_string()) throw ParseError("expected an integer (decimal string)");
  const std::string s = v.get<std::string>();
  Integer out;
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos ||
      out.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw ParseError("not a decimal integer: \"" + s + "\"");
  return out;
}

std::vector<Integer> parse_integers(const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Integer> out;
  for (const auto& v : arr) out.push_back(parse_integer(v));
  return out;
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  return doc.at(key);
}

nlohmann::ordered_json strings(const std::vector<Integer>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : v) arr.push_back(c.get_str());
  return arr;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntPoly parse_poly(std::string_view text) { return IntPoly(parse_integers(member(parse_json(text), "coeffs"), "coeffs")); }

IntMatrix parse_matrix(std::string_view text, bool gram) {
  const json doc = parse_json(text);
  const json& rows = member(doc, "rows");
  if (!rows.is_array()) throw ParseError("rows must be an array");
  std::vector<std::vector<Integer>> out;
  for (const auto& r : rows) out.push_back(parse_integers(r, "row"));
  for (const auto& r : out)
    if (r.size() != out.size()) throw ParseError("matrix must be square");
  IntMatrix m(out);
  if (gram) {
    const json& sym = member(doc, "symmetric");
    if (!sym.is_boolean() || !sym.get<bool>()) throw ParseError("Gram file must assert \"symmetric\": true");
    if (!is_symmetric(m)) throw ParseError("Gram matrix is not symmetric");
  }
  return m;
}

IntVector parse_vector(std::string_view text) { return parse_integers(member(parse_json(text), "vector"), "vector"); }

std::optional<unsigned long> parse_supersingular_tag(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("supersingular_prime")) return std::nullopt;
  const json& v = doc.at("supersingular_prime");
  if (!v.is_number_unsigned() || v.get<unsigned long>() < 2) throw ParseError("supersingular_prime must be a prime");
  return v.get<unsigned long>();
}

std::string poly_json(const IntPoly& p) {
  nlohmann::ordered_json doc;
  doc["coeffs"] = strings(p.coeffs());
  return doc.dump() + "\n";
}

std::string matrix_json(const IntMatrix& m, bool gram) {
  nlohmann::ordered_json doc;
  if (gram) doc["symmetric"] = true;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : m.to_rows()) doc["rows"].push_back(strings(r));
  return doc.dump() + "\n";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("SALEM_FIXTURE_DIR"); env && *env) return env;
  return SALEM_DEFAULT_FIXTURE_DIR;
}

}  // namespace salem::cli
