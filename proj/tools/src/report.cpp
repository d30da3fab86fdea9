#include "salem/cli/report.hpp"

#include "salem/cli/io.hpp"

namespace salem::cli {

namespace {

constexpr unsigned kDecimalDigits = 12;

std::string decimal_ceil(const Rational& v, unsigned digits) {
  std::string s = to_decimal_floor(-v, digits);
  return s[0] == '-' ? s.substr(1) : (s.find_first_not_of("0.") == std::string::npos ? s : "-" + s);
}

}  // namespace

Json to_json(const Integer& v) { return v.get_str(); }

Json to_json(const Rational& v) { return v.get_str(); }

Json to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) {
    Json row = Json::array();
    for (const auto& c : r) row.push_back(c.get_str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const RatInterval& iv) {
  Json j;
  j["lo"] = to_json(iv.lo);
  j["hi"] = to_json(iv.hi);
  j["lo_decimal"] = to_decimal_floor(iv.lo, kDecimalDigits);
  j["hi_decimal"] = decimal_ceil(iv.hi, kDecimalDigits);
  j["width"] = to_json(iv.width());
  return j;
}

Json to_json(const Factorization& f) {
  Json j;
  j["unit"] = f.unit;
  j["content"] = to_json(f.content);
  j["factors"] = Json::array();
  for (const auto& e : f.factors) {
    Json fj;
    fj["degree"] = e.factor.degree();
    fj["multiplicity"] = e.multiplicity;
    fj["coeffs"] = to_json(e.factor);
    fj["text"] = to_string(e.factor);
    j["factors"].push_back(fj);
  }
  j["irreducible"] = f.factors.size() == 1 && f.factors.front().multiplicity == 1 && f.content == 1;
  return j;
}

Json to_json(const FactorReport& r) {
  Json j;
  j["factors"] = Json::array();
  for (const auto& f : r.factors) {
    Json fj;
    fj["degree"] = f.factor.degree();
    fj["multiplicity"] = f.multiplicity;
    fj["coeffs"] = to_json(f.factor);
    fj["class"] = std::string(to_string(f.cls.kind));
    switch (f.cls.kind) {
      case PolyClass::Kind::kCyclotomic: fj["cyclotomic_index"] = f.cls.cyclotomic_index; break;
      case PolyClass::Kind::kSalem: fj["salem_root"] = to_json(f.cls.salem_root->interval); break;
      case PolyClass::Kind::kOther: fj["not_salem_because"] = std::string(to_string(f.cls.salem_failure)); break;
    }
    j["factors"].push_back(fj);
  }
  j["irreducible"] = r.factors.size() == 1 && r.factors.front().multiplicity == 1;
  j["salem_count"] = r.salem_count;
  j["salem_min_degree"] = kSalemMinDegree;
  j["spectral_radius"] = to_json(r.spectral_radius);
  j["entropy_positive"] = r.entropy_positive;
  if (r.entropy.text.empty()) {
    j["entropy"] = nullptr;
  } else {
    Json e;
    e["digits"] = r.entropy.text;
    e["error_bound"] = to_json(r.entropy.error_bound);
    e["certified"] = r.entropy.pinned;
    j["entropy"] = e;
  }
  return j;
}

Json to_json(const BetaResult& b) {
  Json j;
  j["beta"] = to_json(b.value);
  j["set"] = b.set;
  j["scan_bound"] = b.scan_bound;
  return j;
}

Json to_json(const TraceCertificate& c) {
  Json j;
  j["s"] = c.s;
  j["coeffs"] = Json::array();
  for (const auto& a : c.coeffs) j["coeffs"].push_back(to_json(a));
  j["samples"] = Json::array();
  for (const auto& [n, t] : c.samples) j["samples"].push_back(Json::array({n, to_json(t)}));
  j["constant"] = c.is_constant();
  return j;
}

Json to_json(const ComposeResult& c) {
  Json j;
  j["N"] = c.n;
  j["trace"] = to_json(c.trace);
  j["unipotent_exponent"] = c.unipotent_exponent;
  j["eventual_from"] = c.eventual_from ? Json(*c.eventual_from) : Json(nullptr);
  j["certificate"] = to_json(c.certificate);
  j["composed"] = to_json(c.composed.matrix());
  return j;
}

Json ReportDocument::to_json() const {
  Json j;
  j["command"] = command;
  j["arguments"] = arguments;
  j["input_digest"] = input_digest.empty() ? Json(nullptr) : Json("sha256:" + input_digest);
  j["tool_version"] = kVersion;
  j["seed"] = seed;
  j["result"] = payload;
  return j;
}

std::string input_digest(const std::vector<std::pair<std::string, std::string>>& named_inputs) {
  std::string buf;
  for (const auto& [name, bytes] : named_inputs) {
    buf += name;
    buf.push_back('\0');
    buf += std::to_string(bytes.size());
    buf.push_back('\0');
    buf += bytes;
  }
  return sha256_hex(buf);
}

}  // namespace salem::cli
