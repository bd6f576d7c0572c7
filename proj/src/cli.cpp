#include "meshpoly/cli.hpp"

#include "meshpoly/search.hpp"
#include "meshpoly/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace meshpoly {

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::size_t trials = 500;
  std::size_t max_degree = 6;
  std::size_t i_max = 64;
  std::string tol = "1/1000000";
  std::string format = "json";
  std::string out_path;
  std::size_t jobs = 1;
  bool timing = false;

  Rational tolerance() const { return parse_rational(tol); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParseError located(const std::string& path, const ParseError& e, std::size_t line) {
  return ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(e.column()) + ": " + e.what(), line,
                    e.column());
}

Json load_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_json_text(text);
  } catch (const ParseError& e) {
    throw located(path, e, e.line());
  }
}

std::string approx(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(6) << to_double(q);
  return os.str();
}

std::string describe_root(const RootInterval& r) {
  std::string s = r.exact() ? to_string(r.lo) : approx((r.lo + r.hi) / 2);
  if (r.multiplicity > 1) s += " (x" + std::to_string(r.multiplicity) + ")";
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Writes the artifact to --out, in csv when asked and a csv form exists.
void emit(const Options& opt, const Json& artifact, const std::string& csv = {}) {
  if (opt.out_path.empty()) return;
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + opt.out_path);
  if (opt.format == "csv" && !csv.empty())
    f << csv;
  else
    f << artifact.dump(2) << '\n';
  if (!f) throw std::runtime_error("write failed: " + opt.out_path);
}

std::string coeff_csv(const Polynomial& p) {
  std::ostringstream os;
  os << "index,coefficient\n";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << i << ',' << to_string(p.coeffs()[i]) << '\n';
  return os.str();
}

Json roots_json(const RootProfile& prof) {
  Json roots = Json::array();
  for (const auto& r : prof.roots)
    roots.push_back({{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}, {"multiplicity", r.multiplicity},
                     {"approx", r.approx()}});
  return roots;
}

void print_roots(std::ostream& out, const RootProfile& prof) {
  out << "real roots:";
  if (prof.roots.empty()) out << " none";
  for (std::size_t i = 0; i < prof.roots.size(); ++i) out << (i ? ", " : " ") << describe_root(prof.roots[i]);
  out << '\n';
}

int cmd_mesh(const Options& opt, const std::string& file, std::ostream& out) {
  const Polynomial p = to_monomial(polynomial_from_json(load_json(file)));
  if (p.is_zero()) throw UsageError("the zero polynomial has no roots");
  const RootProfile prof = isolate_and_refine(p, opt.tolerance());
  out << "degree: " << p.degree().value() << '\n';
  out << "hyperbolic: " << yes_no(prof.is_hyperbolic) << '\n';
  out << "roots >= 0: " << yes_no(prof.all_roots_nonnegative) << '\n';
  print_roots(out, prof);

  Json report = {{"polynomial", to_json(p)},
                 {"hyperbolic", prof.is_hyperbolic},
                 {"nonneg_roots", prof.all_roots_nonnegative},
                 {"roots", roots_json(prof)}};
  std::ostringstream csv;
  csv << "lo,hi,multiplicity,approx\n";
  for (const auto& r : prof.roots)
    csv << to_string(r.lo) << ',' << to_string(r.hi) << ',' << r.multiplicity << ',' << r.approx() << '\n';

  if (prof.is_hyperbolic) {
    const MeshReport m = mesh_numeric(p, opt.tolerance());
    Json mj = {{"lower", to_json(m.lower)}, {"upper", nullptr}, {"exact", nullptr}};
    if (m.upper) mj["upper"] = to_json(*m.upper);
    if (m.exact) mj["exact"] = to_json(*m.exact);
    report["mesh"] = mj;
    if (m.infinite())
      out << "mesh: infinite\n";
    else if (m.exact)
      out << "mesh: " << to_string(*m.exact) << " (exact)\n";
    else
      out << "mesh: in [" << to_string(m.lower) << ", " << to_string(*m.upper) << "] ~ "
          << approx((m.lower + *m.upper) / 2) << '\n';
  } else {
    report["mesh"] = nullptr;
    out << "mesh: undefined (not real-rooted)\n";
  }
  Json classes = Json::object();
  for (const auto& spec : {ClassSpec::hp(), ClassSpec::hp_mesh(1), ClassSpec::hp_plus_mesh(1)}) {
    const bool in = class_membership(p, spec);
    classes[spec.name()] = in;
    out << spec.name() << ": " << yes_no(in) << '\n';
  }
  report["classes"] = classes;
  emit(opt, report, csv.str());
  return kExitOk;
}

int cmd_apply(const Options& opt, const std::string& op_file, const std::string& seq_file,
              const std::string& file, std::ostream& out) {
  if (op_file.empty() == seq_file.empty()) throw UsageError("apply needs exactly one of --op or --seq");
  const Polynomial p = polynomial_from_json(load_json(file));
  const Transform T = op_file.empty() ? Transform(transform::Diagonal{sequence_from_json(load_json(seq_file))})
                                      : Transform(transform::Operator{operator_from_json(load_json(op_file))});
  const Polynomial image = apply_transform(T, p);
  out << "image: " << dump_line(to_json(image)) << '\n';
  Json report = {{"input", to_json(p)}, {"image", to_json(image)}};
  if (!image.is_zero()) {
    const RootProfile prof = isolate_and_refine(image, opt.tolerance());
    print_roots(out, prof);
    out << "hyperbolic: " << yes_no(prof.is_hyperbolic) << '\n';
    report["roots"] = roots_json(prof);
  }
  emit(opt, report, coeff_csv(image));
  return kExitOk;
}

int cmd_convert(const Options& opt, const std::string& to, const std::string& file, std::ostream& out) {
  Basis target;
  if (to == "monomial") target = Basis::Monomial;
  else if (to == "pochhammer") target = Basis::Pochhammer;
  else throw UsageError("--to must be monomial or pochhammer");
  const Polynomial p = convert_basis(polynomial_from_json(load_json(file)), target);
  out << dump_line(to_json(p)) << '\n';
  emit(opt, to_json(p), coeff_csv(p));
  return kExitOk;
}

int report_verdict(const Options& opt, const Verdict& v, std::ostream& out) {
  out << v.claim_id << ": " << status_name(v.status);
  if (!v.note.empty()) out << " (" << v.note << ")";
  out << "; checked " << v.checked << ", skipped " << v.skipped << '\n';
  if (v.witness) {
    out << "witness input: " << dump_line(to_json(v.witness->input)) << '\n';
    out << "witness image: " << dump_line(to_json(v.witness->image)) << '\n';
    emit(opt, certificate_json(v.claim_id, *v.witness));
  } else {
    emit(opt, to_json(v));
  }
  switch (v.status) {
    case Status::Holds: return kExitOk;
    case Status::Fails: return kExitCertificate;
    case Status::Inconclusive: return kExitInconclusive;
    case Status::Skipped: throw UsageError("input lies outside the hypothesis: " + v.note);
  }
  return kExitOk;
}

int cmd_herpou(const Options& opt, const std::string& symbol_file, const std::string& op_file, std::ostream& out) {
  if (symbol_file.empty() == op_file.empty()) throw UsageError("verify herpou needs exactly one of --symbol or --op");
  const Polynomial Q = symbol_file.empty() ? symbol(operator_from_json(load_json(op_file)))
                                           : to_monomial(polynomial_from_json(load_json(symbol_file)));
  HerpouConfig cfg;
  cfg.trials = opt.trials;
  cfg.max_degree = opt.max_degree;
  cfg.i_max = opt.i_max;
  cfg.seed = opt.seed;
  return report_verdict(opt, herpou_verdict(Q, cfg), out);
}

int cmd_dms(const Options& opt, const std::string& seq_file, const std::optional<std::string>& lambda,
            std::ostream& out) {
  if (seq_file.empty()) throw UsageError("verify dms needs --seq");
  DmsConfig cfg;
  cfg.trials = opt.trials;
  cfg.max_degree = opt.max_degree;
  cfg.seed = opt.seed;
  if (lambda) cfg.claim2_lambda = parse_rational(*lambda);
  return report_verdict(opt, dms_test(sequence_from_json(load_json(seq_file)), cfg), out);
}

int cmd_riesz(const Options& opt, const std::string& lambda_text, const std::string& alpha_text, bool derivative,
              const std::string& file, std::ostream& out) {
  const Rational lambda = parse_rational(lambda_text);
  const Rational alpha = parse_rational(alpha_text);
  const Transform T = derivative ? Transform(transform::DerivativeRiesz{lambda})
                                 : Transform(transform::Operator{riesz(lambda, alpha)});
  if (!file.empty())
    return report_verdict(opt, check_mesh_monotone(T, polynomial_from_json(load_json(file)), alpha), out);

  const ClassSpec spec = derivative ? ClassSpec::hp() : ClassSpec::hp_mesh(alpha);
  Verdict total;
  total.claim_id = derivative ? "riesz" : "fd_riesz";
  total.status = Status::Holds;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng = Rng::for_trial(opt.seed, t);
    const auto degree = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::max<std::size_t>(1, opt.max_degree))));
    const Verdict v = check_mesh_monotone(T, gen_fixture(spec, degree, rng), alpha);
    total.checked += v.checked;
    total.skipped += v.skipped;
    if (v.status == Status::Fails) {
      total.status = Status::Fails;
      total.witness = v.witness;
      total.note = "trial " + std::to_string(t);
      break;
    }
  }
  return report_verdict(opt, total, out);
}

int cmd_suite(const Options& opt, std::ostream& out) {
  SearchConfig cfg;
  cfg.kind = SearchKind::TheoremSuite;
  cfg.master_seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.jobs = opt.jobs;
  cfg.timing = opt.timing;
  const SearchReport report = run_search(cfg);
  bool witness = false, all = true;
  for (const auto& r : report.records) {
    const bool passed = r.verdicts.at("passed").get<bool>();
    all = all && passed;
    witness = witness || r.verdicts.contains("witness");
    out << (passed ? "PASS " : "FAIL ") << r.inputs.at("entry").get<std::string>() << ": "
        << r.verdicts.at("detail").get<std::string>() << '\n';
  }
  std::ostringstream jsonl, csv;
  write_jsonl(jsonl, report);
  csv << "entry,passed,checked\n";
  for (const auto& r : report.records)
    csv << r.inputs.at("entry").get<std::string>() << ',' << r.verdicts.at("passed").get<bool>() << ','
        << r.verdicts.at("checked").get<std::size_t>() << '\n';
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + opt.out_path);
    f << (opt.format == "csv" ? csv.str() : jsonl.str());
  }
  if (all) return kExitOk;
  return witness ? kExitCertificate : kExitInconclusive;
}

int cmd_search(const Options& opt, SearchKind kind, std::ostream& out) {
  SearchConfig cfg;
  cfg.kind = kind;
  cfg.master_seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.max_degree = opt.max_degree;
  cfg.i_max = opt.i_max;
  cfg.tolerance = opt.tolerance();
  cfg.jobs = opt.jobs;
  cfg.timing = opt.timing;
  const SearchReport report = run_search(cfg);
  out << search_kind_name(kind) << ": " << report.records.size() << " trials, seed " << cfg.master_seed
      << ", certificates " << report.certificates() << ", inconclusive " << report.inconclusive() << '\n';
  for (const auto& r : report.records)
    if (r.certificate) {
      out << "first certificate at trial " << r.trial_index << ": input "
          << dump_line(to_json(r.certificate->input)) << ", image " << dump_line(to_json(r.certificate->image))
          << '\n';
      break;
    }
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + opt.out_path);
    if (opt.format == "csv")
      write_csv(f, report);
    else
      write_jsonl(f, report);
    if (!f) throw std::runtime_error("write failed: " + opt.out_path);
  }
  if (report.certificates() > 0) return kExitCertificate;
  return report.inconclusive() > 0 ? kExitInconclusive : kExitOk;
}

// Certificates found in a certificate file, a bare witness, or a JSONL report.
void collect_certificates(const Json& j, std::vector<std::pair<std::string, Witness>>& found) {
  if (!j.is_object()) return;
  if (j.contains("claim") && j.contains("certificate")) {
    found.emplace_back(j.at("claim").get<std::string>(), witness_from_json(j.at("certificate")));
  } else if (j.contains("certificate")) {
    collect_certificates(j.at("certificate"), found);
  } else if (j.contains("kind") && j.contains("input") && j.contains("transform")) {
    found.emplace_back("", witness_from_json(j));
  }
}

int cmd_replay(const std::string& file, std::ostream& out) {
  const std::string text = read_file(file);
  std::vector<std::pair<std::string, Witness>> found;
  try {
    collect_certificates(parse_json_text(text), found);
  } catch (const ParseError&) {
    // JSONL: one object per line
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
      ++number;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        collect_certificates(parse_json_text(line), found);
      } catch (const ParseError& e) {
        throw located(file, e, number);
      }
    }
  }
  if (found.empty()) throw UsageError("no certificate in " + file);
  bool all = true;
  for (const auto& [claim, w] : found) {
    const bool ok = replay(w);
    all = all && ok;
    out << (claim.empty() ? "certificate" : claim) << ": " << (ok ? "replays" : "does NOT replay") << " (image "
        << dump_line(to_json(w.image)) << " outside " << w.violated.name() << ")\n";
  }
  return all ? kExitOk : kExitCertificate;
}

void add_common(CLI::App* app, Options& opt) {
  app->add_option("--seed", opt.seed, "master seed");
  app->add_option("--trials", opt.trials, "trial count");
  app->add_option("--max-degree", opt.max_degree, "largest fixture degree");
  app->add_option("--i-max", opt.i_max, "largest Pochhammer index scanned");
  app->add_option("--tol", opt.tol, "root refinement tolerance, as a rational");
  app->add_option("--format", opt.format, "artifact format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", opt.out_path, "artifact file");
  app->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_flag("--timing", opt.timing, "record wall time per trial (output is then not reproducible)");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mesh, finite difference operator and multiplier sequence toolkit", "meshpoly"};
  app.require_subcommand(1);
  Options opt;
  add_common(&app, opt);

  std::string file, op_file, seq_file, symbol_file, to, lambda_text = "1", alpha_text = "1";
  std::optional<std::string> claim2_lambda;
  bool derivative = false;

  auto* mesh = app.add_subcommand("mesh", "class verdicts and mesh of a polynomial");
  mesh->add_option("file", file, "polynomial JSON")->required();

  auto* apply_cmd = app.add_subcommand("apply", "apply an operator or diagonal sequence");
  apply_cmd->add_option("--op", op_file, "operator JSON");
  apply_cmd->add_option("--seq", seq_file, "sequence JSON");
  apply_cmd->add_option("file", file, "polynomial JSON")->required();

  auto* convert = app.add_subcommand("convert", "change basis");
  convert->add_option("--to", to, "monomial or pochhammer")->required();
  convert->add_option("file", file, "polynomial JSON")->required();

  auto* verify = app.add_subcommand("verify", "check one theorem");
  verify->require_subcommand(1);
  auto* suite = verify->add_subcommand("theorem-suite", "run every theorem check");
  auto* herpou = verify->add_subcommand("herpou", "constant-coefficient HP>=1 preservers");
  herpou->add_option("--symbol", symbol_file, "symbol polynomial JSON");
  herpou->add_option("--op", op_file, "operator JSON");
  auto* dms = verify->add_subcommand("dms", "discrete multiplier sequence test");
  dms->add_option("--seq", seq_file, "sequence JSON")->required();
  dms->add_option("--claim2-lambda", claim2_lambda, "also check the W_lambda proper positions");
  auto* riesz_cmd = verify->add_subcommand("riesz", "mesh monotonicity of p - lambda p(x - alpha) or p - lambda p'");
  riesz_cmd->add_option("--lambda", lambda_text, "lambda, as a rational");
  riesz_cmd->add_option("--alpha", alpha_text, "alpha, as a rational");
  riesz_cmd->add_flag("--derivative", derivative, "use p - lambda p'");
  riesz_cmd->add_option("file", file, "polynomial JSON; random fixtures when omitted");

  auto* search = app.add_subcommand("search", "seeded campaigns");
  search->require_subcommand(1);
  std::vector<std::pair<CLI::App*, SearchKind>> kinds;
  for (const auto& [name, kind] : std::vector<std::pair<std::string, SearchKind>>{
           {"nice", SearchKind::Nice},
           {"finite-degree", SearchKind::FiniteDegree},
           {"bullet", SearchKind::Bullet},
           {"remark2", SearchKind::Remark2},
           {"lemma1", SearchKind::Lemma1}})
    kinds.emplace_back(search->add_subcommand(name, "run the " + name + " campaign"), kind);

  auto* replay_cmd = app.add_subcommand("replay", "recompute a certificate");
  replay_cmd->add_option("file", file, "certificate JSON or JSONL report")->required();

  for (auto* sub : {mesh, apply_cmd, convert, verify, search, replay_cmd}) sub->fallthrough();
  for (auto* sub : {suite, herpou, dms, riesz_cmd}) sub->fallthrough();
  for (auto& [sub, kind] : kinds) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mesh) return cmd_mesh(opt, file, out);
    if (*apply_cmd) return cmd_apply(opt, op_file, seq_file, file, out);
    if (*convert) return cmd_convert(opt, to, file, out);
    if (*suite) return cmd_suite(opt, out);
    if (*herpou) return cmd_herpou(opt, symbol_file, op_file, out);
    if (*dms) return cmd_dms(opt, seq_file, claim2_lambda, out);
    if (*riesz_cmd) return cmd_riesz(opt, lambda_text, alpha_text, derivative, file, out);
    for (auto& [sub, kind] : kinds)
      if (*sub) return cmd_search(opt, kind, out);
    if (*replay_cmd) return cmd_replay(file, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace meshpoly
