#include "salem/cli/app.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include <salem/salem.hpp>

#include "salem/cli/io.hpp"
#include "salem/cli/reproduction_checks.hpp"
#include "salem/cli/report.hpp"

namespace salem::cli {

namespace {

struct ExitError {
  int code;
  std::string message;
};

struct Options {
  std::string width = "1e-8";
  unsigned digits = 6;
  std::uint64_t seed = 0;

  std::string poly, gram, matrix, witness, f, g;
  unsigned long degree = 0;
  unsigned long n = 1;
  unsigned long bound = kDefaultComposeBound;
  std::optional<unsigned long> coprime_to;
  bool json = false;
  std::string fixtures;
};

Rational parse_width(const std::string& text) {
  Rational w;
  try {
    w = parse_rational(text);
  } catch (const std::exception&) {
    throw ExitError{kExitUsage, "--width: cannot parse \"" + text + "\""};
  }
  if (sgn(w) <= 0) throw ExitError{kExitUsage, "--width must be positive"};
  return w;
}

struct Inputs {
  std::vector<std::pair<std::string, std::string>> files;
  std::vector<std::string> warnings;

  const std::string& load(const std::string& role, const std::string& path) {
    files.emplace_back(role, read_file(path));
    return files.back().second;
  }
  std::string digest() const { return files.empty() ? std::string() : input_digest(files); }
};

IntPoly load_nonconstant_poly(Inputs& in, const std::string& path) {
  IntPoly p = parse_poly(in.load("poly", path));
  if (p.is_zero()) throw ExitError{kExitZeroPolynomial, "zero polynomial"};
  if (p.is_constant()) throw ExitError{kExitZeroPolynomial, "constant polynomial"};
  return p;
}

LatticePtr load_lattice(Inputs& in, const std::string& path) {
  const std::string& text = in.load("gram", path);
  auto l = std::make_shared<const Lattice>(parse_matrix(text, true));
  if (const auto prime = parse_supersingular_tag(text))
    if (auto w = supersingular_det_warning(*l, *prime)) in.warnings.push_back(*w);
  return l;
}

Isometry load_isometry(Inputs& in, const LatticePtr& l, const std::string& role, const std::string& path) {
  return verify_isometry(l, parse_matrix(in.load(role, path), false));
}

void require_hyperbolic(const Lattice& l) {
  if (!l.is_hyperbolic()) {
    const Signature s = l.signature();
    throw ExitError{kExitNoConeWitness, "lattice has signature (" + std::to_string(s.positive) + ", " +
                                            std::to_string(s.negative) + "), not hyperbolic"};
  }
}

Json lattice_json(const Lattice& l) {
  Json j;
  j["rank"] = l.rank();
  j["signature"] = Json::array({l.signature().positive, l.signature().negative});
  j["even"] = l.is_even();
  j["determinant"] = to_json(l.determinant());
  return j;
}

Json cmd_factor(const Options& o, Inputs& in) {
  const IntPoly p = load_nonconstant_poly(in, o.poly);
  Json j;
  j["degree"] = p.degree();
  j["factorization"] = to_json(factor_z(p, o.seed));
  return j;
}

Json cmd_classify(const Options& o, Inputs& in) {
  const Rational width = parse_width(o.width);
  if (!o.poly.empty()) {
    if (!o.gram.empty() || !o.matrix.empty()) throw ExitError{kExitUsage, "give either --poly or --gram/--matrix"};
    const IntPoly p = load_nonconstant_poly(in, o.poly);
    Json j;
    j["source"] = "polynomial";
    j["degree"] = p.degree();
    j["report"] = to_json(classify_poly(p, width, o.digits));
    return j;
  }
  if (o.gram.empty() || o.matrix.empty()) throw ExitError{kExitUsage, "classify needs --poly or --gram and --matrix"};
  const LatticePtr l = load_lattice(in, o.gram);
  require_hyperbolic(*l);
  const Isometry f = load_isometry(in, l, "matrix", o.matrix);
  LatticeVector w;
  if (!o.witness.empty()) {
    w = parse_vector(in.load("witness", o.witness));
    if (w.size() != l->rank()) throw ExitError{kExitUsage, "witness length differs from the rank"};
    if (sgn(l->norm(w)) <= 0) throw ExitError{kExitNoConeWitness, "witness does not have positive norm"};
  } else if (auto found = find_positive_witness(*l)) {
    w = *found;
  } else {
    throw ExitError{kExitNoConeWitness, "no positive-norm witness among small basis combinations"};
  }
  const IsometryReport r = classify_isometry(f, w, width, o.digits);
  Json j;
  j["source"] = "isometry";
  j["lattice"] = lattice_json(*l);
  Json wj = Json::array();
  for (const auto& c : w) wj.push_back(c.get_str());
  j["witness"] = wj;
  j["preserves_cone"] = r.preserves_cone;
  j["trace"] = to_json(trace(f.matrix()));
  j["trace_threshold"] = l->rank() + 1;
  j["trace_test"] = trace_bound_test(f) == TraceVerdict::kPositive ? "positive" : "inconclusive";
  j["charpoly"] = to_json(char_poly(f));
  j["report"] = to_json(r.report);
  return j;
}

Json cmd_charpoly(const Options& o, Inputs& in) {
  const LatticePtr l = load_lattice(in, o.gram);
  const Isometry f = load_isometry(in, l, "matrix", o.matrix);
  const IntPoly cp = char_poly(f);
  Json j;
  j["lattice"] = lattice_json(*l);
  j["charpoly"] = to_json(cp);
  j["text"] = to_string(cp);
  return j;
}

Json cmd_beta(const Options& o) {
  Json j;
  j["degree"] = o.degree;
  j["beta"] = to_json(beta_constant(o.degree));
  return j;
}

Json cmd_power(const Options& o, Inputs& in) {
  const Rational width = parse_width(o.width);
  const IntPoly p = load_nonconstant_poly(in, o.poly);
  if (!p.is_monic()) throw PreconditionError("polynomial must be monic");
  if (!is_irreducible(p)) throw ExitError{kExitReducible, "polynomial is reducible"};
  const IntPoly q = power_min_poly(p, o.n);
  Json j;
  j["n"] = o.n;
  j["input_degree"] = p.degree();
  j["degree"] = q.degree();
  j["coeffs"] = to_json(q);
  j["report"] = to_json(classify_poly(q, width, o.digits));
  return j;
}

Json cmd_compose(const Options& o, Inputs& in) {
  const Rational width = parse_width(o.width);
  const LatticePtr l = load_lattice(in, o.gram);
  require_hyperbolic(*l);
  const Isometry f = load_isometry(in, l, "f", o.f);
  const Isometry g = load_isometry(in, l, "g", o.g);
  const ComposeResult c = compose_search(f, g, o.bound, o.coprime_to);
  Json j = to_json(c);
  j["trace_threshold"] = l->rank() + 1;
  j["coprime_to"] = o.coprime_to ? Json(*o.coprime_to) : Json(nullptr);
  j["composed_report"] = to_json(classify_poly(char_poly(c.composed), width, o.digits));
  return j;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  CheckOptions co;
  co.fixtures = o.fixtures.empty() ? fixture_dir() : std::filesystem::path(o.fixtures);
  co.seed = o.seed;
  co.width = parse_width(o.width);
  co.digits = o.digits;
  const std::vector<CheckResult> results = run_reproduction_checks(co);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    ReportDocument doc{"verify-paper", args, {}, o.seed, {}};
    doc.payload["passed"] = ok;
    doc.payload["checks"] = Json::array();
    for (const auto& r : results) doc.payload["checks"].push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << doc.to_json().dump(2) << '\n';
  } else {
    for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of lattice isometries by cyclotomic and Salem factors", "salem"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  app.add_option("--width", o.width, "Enclosure width for roots and spectral radii")->capture_default_str();
  app.add_option("--digits", o.digits, "Fractional digits of the entropy")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized steps")->capture_default_str();

  auto* factor = app.add_subcommand("factor", "Factor a polynomial over the integers");
  factor->add_option("--poly", o.poly, "Polynomial file")->required();

  auto* classify = app.add_subcommand("classify", "Classify a polynomial or an isometry");
  classify->add_option("--poly", o.poly, "Polynomial file");
  classify->add_option("--gram", o.gram, "Gram matrix file");
  classify->add_option("--matrix", o.matrix, "Isometry matrix file");
  classify->add_option("--witness", o.witness, "Positive-norm vector file");

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of an isometry");
  charpoly->add_option("--gram", o.gram, "Gram matrix file")->required();
  charpoly->add_option("--matrix", o.matrix, "Isometry matrix file")->required();

  auto* beta = app.add_subcommand("beta", "lcm of all n with phi(n) <= D");
  beta->add_option("--degree", o.degree, "D >= 1")->required()->check(CLI::PositiveNumber);

  auto* pw = app.add_subcommand("power", "Minimal polynomial of the n-th power of a root");
  pw->add_option("--poly", o.poly, "Polynomial file")->required();
  pw->add_option("--n", o.n, "Exponent n >= 1")->required()->check(CLI::PositiveNumber);

  auto* comp = app.add_subcommand("compose", "Search N with |tr(f g^N)| >= rank + 1");
  comp->add_option("--gram", o.gram, "Gram matrix file")->required();
  comp->add_option("--f", o.f, "Isometry f")->required();
  comp->add_option("--g", o.g, "Quasi-unipotent isometry g")->required();
  comp->add_option("--bound", o.bound, "Largest N tried")->capture_default_str()->check(CLI::PositiveNumber);
  comp->add_option("--coprime-to", o.coprime_to, "Only accept N coprime to this modulus")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the polynomial and lattice computations");
  verify->add_flag("--json", o.json, "Machine-readable summary");
  verify->add_option("--fixtures", o.fixtures, "Fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "salem: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, args, out);
    Inputs in;
    ReportDocument doc;
    doc.arguments = args;
    doc.seed = o.seed;
    if (factor->parsed()) {
      doc.command = "factor";
      doc.payload = cmd_factor(o, in);
    } else if (classify->parsed()) {
      doc.command = "classify";
      doc.payload = cmd_classify(o, in);
    } else if (charpoly->parsed()) {
      doc.command = "charpoly";
      doc.payload = cmd_charpoly(o, in);
    } else if (beta->parsed()) {
      doc.command = "beta";
      doc.payload = cmd_beta(o);
    } else if (pw->parsed()) {
      doc.command = "power";
      doc.payload = cmd_power(o, in);
    } else if (comp->parsed()) {
      doc.command = "compose";
      doc.payload = cmd_compose(o, in);
    }
    doc.input_digest = in.digest();
    if (!in.warnings.empty()) {
      doc.payload["warnings"] = in.warnings;
      for (const auto& w : in.warnings) err << "salem: warning: " << w << '\n';
    }
    out << doc.to_json().dump(2) << '\n';
    return kExitOk;
  } catch (const ExitError& e) {
    err << "salem: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "salem: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAnIsometry& e) {
    err << "salem: not an isometry: " << e.what() << '\n';
    return kExitNotIsometry;
  } catch (const TraceBelowThreshold& e) {
    err << "salem: " << e.what() << '\n';
    return kExitTraceBelowThreshold;
  } catch (const NotQuasiUnipotent& e) {
    err << "salem: " << e.what() << '\n';
    return kExitNotQuasiUnipotent;
  } catch (const BoundExhausted& e) {
    err << "salem: " << e.what() << '\n';
    return kExitBoundExhausted;
  } catch (const PreconditionError& e) {
    err << "salem: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "salem: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace salem::cli
