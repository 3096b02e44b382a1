#include "ultra/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ultra/annulus.hpp"
#include "ultra/error.hpp"
#include "ultra/forge.hpp"
#include "ultra/gauss.hpp"
#include "ultra/qseries.hpp"
#include "ultra/ratfun.hpp"
#include "ultra/search.hpp"
#include "ultra/serialize.hpp"

namespace ultra {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RadiusInterval parse_interval(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--interval expects LO,HI");
  LogValue lo = LogValue::parse(text.substr(0, comma));
  LogValue hi = LogValue::parse(text.substr(comma + 1));
  if (lo.is_infinite() || hi.is_infinite() || hi < lo) throw UsageError("--interval needs finite LO <= HI");
  return RadiusInterval(lo, hi);
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty())
    out << content;
  else
    write_file_atomically(path, content);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Common {
  std::string field = "genlaurent:3";
  std::string interval = "1,2";
  std::string out;
};

int run_profile(const Common& c, const std::string& f_text, const std::string& center_text, bool approx,
                std::ostream& out) {
  auto field = FieldDescriptor::parse(c.field);
  auto interval = parse_interval(c.interval);
  auto f = RatFun::parse(field, f_text);
  std::optional<FieldElement> center;
  if (!center_text.empty()) center = FieldElement::parse(field, center_text);
  emit(c.out, profile_csv(norm_profile(f, interval, center), approx), out);
  return kExitOk;
}

struct ForgeOptions {
  std::string mode = "theorem";
  long depth = 5;
  std::string clog = "1/4";
  long m_hint = 0;
  bool relaxed = false;
  long limit_samples = 0;
  std::string limit_out;
};

int run_forge(const Common& c, const ForgeOptions& o, std::ostream& out, std::ostream& err) {
  if (o.depth < 1) throw UsageError("--depth must be positive");
  auto field = FieldDescriptor::parse(c.field);
  auto interval = parse_interval(c.interval);
  auto c_log = LogValue::parse(o.clog);
  std::optional<long> m_hint;
  if (o.m_hint > 0) m_hint = o.m_hint;
  auto sch = make_schedule(field, interval, c_log, parse_forge_mode(o.mode), o.depth, m_hint, o.relaxed);
  auto centers = choose_centers(sch);
  auto cert = verify_certificate(sch, centers);
  std::string limit_text;
  bool limit_ok = true;
  if (o.limit_samples > 0) {
    auto table = limit_table(sch, centers, interior_samples(sch, o.limit_samples));
    limit_ok = table.delta_ok;
    for (bool b : table.stabilized) limit_ok = limit_ok && b;
    limit_text = dump(to_json(table));
  }
  emit(c.out, dump(certificate_to_json(sch, centers, cert)), out);
  if (!limit_text.empty()) emit(o.limit_out, limit_text, out);
  if (const auto* f = cert.first_failure())
    err << "forge: record failed at n=" << f->n << " zone=" << f->zone << ": " << f->claim << "\n";
  if (!limit_ok) err << "forge: limit table did not stabilize as predicted\n";
  return cert.passed() && limit_ok ? kExitOk : kExitFailure;
}

int run_check(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    err << "check: " << path << " is not valid JSON\n";
    return kExitFailure;
  }
  auto rep = check_certificate(j);
  for (const auto& p : rep.problems) err << "check: " << p << "\n";
  out << (rep.ok ? "ok" : "FAILED") << "\n";
  return rep.ok ? kExitOk : kExitFailure;
}

int run_search(const Common& c, const std::string& t0_text, const std::string& clog, long max_iter, bool forced,
               std::ostream& out, std::ostream& err) {
  if (max_iter < 0) throw UsageError("--max-iter must be nonnegative");
  auto field = FieldDescriptor::parse(c.field);
  auto interval = parse_interval(c.interval);
  auto c_log = LogValue::parse(clog);
  auto base = IntervalModelOracle::from_ratfun(interval, RatFun::parse(field, t0_text));
  SearchTrace trace;
  if (forced) {
    ForcedFailureOracle oracle(base, field);
    trace = interval_search(oracle, c_log, max_iter, field);
  } else {
    trace = interval_search(base, c_log, max_iter, field);
  }
  auto problems = trace_violations(trace, c_log);
  for (const auto& p : problems) err << "search: " << p << "\n";
  emit(c.out, dump(to_json(trace)), out);
  return problems.empty() ? kExitOk : kExitFailure;
}

int run_qseries(long kmax, const std::string& path, std::ostream& out) {
  if (kmax < 1) throw UsageError("--kmax must be positive");
  emit(path, dump(to_json(qseries_unbounded_witness(kmax))), out);
  return kExitOk;
}

FieldElement random_coefficient(const FieldDescriptor& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  long a = 0;
  while (a == 0) a = num(rng);
  if (field.flavor == FieldFlavor::PAdicQ) return FieldElement::from_rational(field, make_rational(a, den(rng)));
  std::uniform_int_distribution<long> e(-4, 4);
  std::uniform_int_distribution<std::uint32_t> cf(1, field.p - 1);
  return FieldElement::monomial(field, FpRatio::constant(field.p, cf(rng)), make_rational(e(rng), field.p));
}

AnnulusElement random_annulus_element(const FieldDescriptor& field, const LogValue& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<long> deg(-3, 3);
  std::map<long, FieldElement> terms;
  int k = count(rng);
  for (int i = 0; i < k; ++i) terms.insert_or_assign(deg(rng), random_coefficient(field, rng));
  return AnnulusElement(field, s, std::move(terms));
}

struct AnnulusOptions {
  std::string s = "sqrt2";
  std::string prec = "5";
  std::string lambda;
  long random = 0;
  unsigned long seed = 1;
};

int run_annulus(const Common& c, const AnnulusOptions& o, std::ostream& out, std::ostream& err) {
  auto field = FieldDescriptor::parse(c.field);
  auto s = LogValue::parse(o.s);
  auto prec = LogValue::parse(o.prec);
  if (prec.is_infinite()) throw UsageError("--prec must be finite");
  std::vector<AnnulusElement> inputs;
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (long i = 0; i < o.random; ++i) inputs.push_back(random_annulus_element(field, s, rng));
  } else {
    std::map<long, FieldElement> terms;
    terms.emplace(1, FieldElement::one(field));
    auto lam = o.lambda.empty() ? FieldElement::uniformizer(field) : FieldElement::parse(field, o.lambda);
    if (!lam.is_zero()) terms.emplace(0, -lam);
    inputs.emplace_back(field, s, std::move(terms));
  }
  Json rows = Json::array();
  bool ok = true;
  for (const auto& x : inputs) {
    auto inv = annulus_invert(x, prec);
    bool good = inv.residual > prec;
    ok = ok && good;
    rows.push_back({{"x", x.to_string()},
                    {"v_x", to_json(x.valuation())},
                    {"inverse", inv.inverse.to_string()},
                    {"series_terms", inv.series_terms},
                    {"residual_v", to_json(inv.residual)},
                    {"ok", good}});
  }
  Json doc{{"field", field.to_string()}, {"s", to_json(s)}, {"prec", to_json(prec)}, {"inversions", rows}};
  emit(c.out, dump(doc), out);
  if (!ok) err << "annulus: residual not above the requested precision\n";
  return ok ? kExitOk : kExitFailure;
}

bool is_config_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InfeasibleSchedule:
    case ErrorKind::ValueGroupTooSparse:
    case ErrorKind::ResidueFieldTooSmall:
    case ErrorKind::PreconditionFlat:
    case ErrorKind::UnsupportedModel:
    case ErrorKind::ValueNotInGroup:
    case ErrorKind::FieldMismatch:
      return true;
    default:
      return false;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ultrametric seminorm toolkit", "ultra"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_interval) {
    sub->add_option("--field", common.field, "Coefficient field: padic:P, genlaurent:P, genlaurent:P:u");
    if (with_interval) sub->add_option("--interval", common.interval, "Log-radius interval LO,HI");
    sub->add_option("--out", common.out, "Output path (default: standard output)");
  };

  auto* profile = app.add_subcommand("profile", "Norm profile of a rational function as CSV");
  std::string f_text, center_text;
  bool approx = false;
  add_common(profile, true);
  profile->add_option("--f", f_text, "Rational function in t")->required();
  profile->add_option("--center", center_text, "Center of the Gauss points");
  profile->add_flag("--approx", approx, "Append non-authoritative decimal columns");

  auto* forge = app.add_subcommand("forge", "Build a schedule and its certificate");
  ForgeOptions fo;
  add_common(forge, true);
  forge->add_option("--mode", fo.mode, "theorem or example")->check(CLI::IsMember({"theorem", "example"}));
  forge->add_option("--depth", fo.depth, "Number of levels N");
  forge->add_option("--clog", fo.clog, "log2 of the constant c");
  forge->add_option("--m", fo.m_hint, "Uniform m_n (default: smallest feasible)");
  forge->add_flag("--relaxed", fo.relaxed, "Small instance without the gap conditions");
  forge->add_option("--limit-samples", fo.limit_samples, "Interior samples for the limit table");
  forge->add_option("--limit-out", fo.limit_out, "Limit table output path");

  auto* check = app.add_subcommand("check", "Re-validate a certificate file");
  std::string cert_path;
  check->add_option("certificate", cert_path, "Certificate JSON")->required();

  auto* search = app.add_subcommand("search", "Interval descent trace");
  std::string t0_text = "t - z", s_clog = "1";
  long max_iter = 20;
  bool forced = false;
  add_common(search, true);
  search->add_option("--t0", t0_text, "Element t_0: t - a or a constant");
  search->add_option("--clog", s_clog, "log2 of the constant c");
  search->add_option("--max-iter", max_iter, "Iteration cap");
  search->add_flag("--forced-failure", forced, "Use an oracle whose per-lambda condition always fails");

  auto* qseries = app.add_subcommand("qseries", "Witness table for the power-series model");
  long kmax = 100;
  std::string q_out;
  qseries->add_option("--kmax", kmax, "Largest k");
  qseries->add_option("--out", q_out, "Output path");

  auto* annulus = app.add_subcommand("annulus", "Inversion on an irrational annulus");
  AnnulusOptions ao;
  add_common(annulus, false);
  annulus->add_option("--s", ao.s, "Log-radius outside the divisible closure");
  annulus->add_option("--prec", ao.prec, "Requested residual valuation");
  annulus->add_option("--lambda", ao.lambda, "Invert T - lambda (default: the uniformizer)");
  annulus->add_option("--random", ao.random, "Invert this many random elements instead");
  annulus->add_option("--seed", ao.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  }
  if (annulus->parsed() && annulus->count("--field") == 0) common.field = "padic:2";

  try {
    if (profile->parsed()) return run_profile(common, f_text, center_text, approx, out);
    if (forge->parsed()) return run_forge(common, fo, out, err);
    if (check->parsed()) return run_check(cert_path, out, err);
    if (search->parsed()) return run_search(common, t0_text, s_clog, max_iter, forced, out, err);
    if (qseries->parsed()) return run_qseries(kmax, q_out, out);
    if (annulus->parsed()) return run_annulus(common, ao, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_config_error(e.kind()) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace ultra
