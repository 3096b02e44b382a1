#include "ultra/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ultra/error.hpp"

namespace ultra {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, "certificate: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

long integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

bool boolean(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

}  // namespace

Json to_json(const LogValue& v) {
  if (v.is_infinite()) return "inf";
  return Json{{"a", to_string(v.rational_part())}, {"b", to_string(v.sqrt2_part())}};
}

LogValue logvalue_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return LogValue::infinity();
    bad("log value strings must be \"inf\"");
  }
  return LogValue(parse_rational(text(j, "a")), parse_rational(text(j, "b")));
}

Json to_json(const ForgeSchedule& sch) {
  Json levels = Json::array();
  for (long n = 1; n <= sch.depth(); ++n) {
    const auto& L = sch.level(n);
    levels.push_back({{"n", n}, {"s", to_json(L.s)}, {"m", L.m}, {"window", to_json(L.window)}});
  }
  return Json{{"field", sch.field.to_string()},
              {"mode", to_string(sch.mode)},
              {"s_lo", to_json(sch.interval.s_lo)},
              {"s_hi", to_json(sch.interval.s_hi)},
              {"c_log", to_json(sch.c_log)},
              {"relaxed", sch.relaxed},
              {"levels", levels}};
}

ForgeSchedule schedule_from_json(const Json& j) {
  ForgeSchedule sch;
  sch.field = FieldDescriptor::parse(text(j, "field"));
  sch.mode = parse_forge_mode(text(j, "mode"));
  sch.interval = RadiusInterval(logvalue_from_json(field(j, "s_lo")), logvalue_from_json(field(j, "s_hi")));
  sch.c_log = logvalue_from_json(field(j, "c_log"));
  sch.relaxed = boolean(j, "relaxed");
  const Json& levels = field(j, "levels");
  if (!levels.is_array() || levels.empty()) bad("'levels' must be a nonempty array");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Json& L = levels[i];
    if (integer(L, "n") != static_cast<long>(i + 1)) bad("levels out of order");
    sch.levels.push_back({logvalue_from_json(field(L, "s")), integer(L, "m"), logvalue_from_json(field(L, "window"))});
  }
  return sch;
}

Json to_json(const CertRecord& r) {
  return Json{{"n", r.n},          {"zone", r.zone},         {"claim", r.claim},        {"s", to_json(r.s)},
              {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"rel", to_string(r.rel)}, {"cert", r.cert},
              {"pass", r.pass}};
}

CertRecord record_from_json(const Json& j) {
  CertRecord r;
  r.n = integer(j, "n");
  r.zone = text(j, "zone");
  r.claim = text(j, "claim");
  r.s = logvalue_from_json(field(j, "s"));
  r.lhs = logvalue_from_json(field(j, "lhs"));
  r.rhs = logvalue_from_json(field(j, "rhs"));
  r.rel = parse_relation(text(j, "rel"));
  r.cert = text(j, "cert");
  r.pass = boolean(j, "pass");
  return r;
}

Json certificate_to_json(const ForgeSchedule& sch, const CenterSet& centers, const ForgeCertificate& cert) {
  Json cs = Json::array();
  for (const auto& row : centers.centers) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    cs.push_back(r);
  }
  Json records = Json::array();
  for (const auto& r : cert.records) records.push_back(to_json(r));
  return Json{{"schedule", to_json(sch)}, {"centers", cs}, {"records", records}, {"passed", cert.passed()}};
}

ParsedCertificate certificate_from_json(const Json& j) {
  ParsedCertificate out;
  out.schedule = schedule_from_json(field(j, "schedule"));
  const Json& cs = field(j, "centers");
  if (!cs.is_array()) bad("'centers' must be an array");
  for (const auto& row : cs) {
    if (!row.is_array()) bad("each center row must be an array");
    std::vector<FieldElement> r;
    for (const auto& c : row) {
      if (!c.is_string()) bad("centers must be strings");
      r.push_back(FieldElement::parse(out.schedule.field, c.get<std::string>()));
    }
    out.centers.centers.push_back(std::move(r));
  }
  const Json& records = field(j, "records");
  if (!records.is_array()) bad("'records' must be an array");
  for (const auto& r : records) out.certificate.records.push_back(record_from_json(r));
  out.passed_flag = boolean(j, "passed");
  return out;
}

CheckReport check_certificate(const Json& j) {
  CheckReport rep;
  ParsedCertificate pc;
  try {
    pc = certificate_from_json(j);
  } catch (const std::exception& e) {
    rep.problems.push_back(e.what());
    return rep;
  }
  for (const auto& v : schedule_violations(pc.schedule)) rep.problems.push_back("schedule: " + v);

  const auto& stored = pc.certificate.records;
  for (std::size_t i = 0; i < stored.size(); ++i) {
    const auto& r = stored[i];
    bool ok = holds(r.lhs, r.rel, r.rhs) && (r.rel != Relation::EQ || r.cert.rfind("exact", 0) == 0);
    if (ok != r.pass) rep.problems.push_back("record " + std::to_string(i) + ": pass flag disagrees with its relation");
    if (!ok) rep.problems.push_back("record " + std::to_string(i) + ": '" + r.claim + "' fails");
  }
  if (pc.passed_flag != pc.certificate.passed()) rep.problems.push_back("top-level pass flag disagrees with records");
  if (!pc.passed_flag) rep.problems.push_back("certificate does not claim to pass");

  try {
    ForgeCertificate again = verify_certificate(pc.schedule, pc.centers);
    if (again.records.size() != stored.size())
      rep.problems.push_back("recomputed certificate has " + std::to_string(again.records.size()) +
                             " records, file has " + std::to_string(stored.size()));
    for (std::size_t i = 0; i < std::min(again.records.size(), stored.size()); ++i)
      if (!(again.records[i] == stored[i])) {
        rep.problems.push_back("record " + std::to_string(i) + " differs from recomputation");
        break;
      }
  } catch (const std::exception& e) {
    rep.problems.push_back(std::string("recomputation failed: ") + e.what());
  }
  rep.ok = rep.problems.empty();
  return rep;
}

Json to_json(const LimitTable& table) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.samples.size(); ++i) {
    Json vals = Json::array();
    for (const auto& v : table.v_y[i]) vals.push_back({{"v", to_json(v.v)}, {"cert", v.cert_string()}});
    rows.push_back({{"s", to_json(table.samples[i])},
                    {"v_y", vals},
                    {"predicted_index", table.predicted_index[i]},
                    {"observed_index", table.observed_index[i]},
                    {"stabilized", static_cast<bool>(table.stabilized[i])}});
  }
  Json delta = Json::array();
  for (const auto& v : table.delta_row) delta.push_back({{"v", to_json(v.v)}, {"cert", v.cert_string()}});
  return Json{{"samples", rows}, {"delta", delta}, {"delta_ok", table.delta_ok}};
}

Json to_json(const SearchTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json row{{"n", s.n}, {"mu", s.mu.to_string()}, {"gamma_v", to_json(s.g)}, {"delta_v", to_json(s.d)},
             {"spectral_v", to_json(s.spectral)}};
    row["lambda"] = s.lambda ? Json(s.lambda->to_string()) : Json(nullptr);
    steps.push_back(row);
  }
  Json out{{"outcome", to_string(trace.outcome)}, {"steps", steps}};
  if (trace.triple)
    out["triple"] = {{"t_minus", trace.triple->mu.to_string()},
                     {"gamma_v", to_json(trace.triple->g)},
                     {"delta_v", to_json(trace.triple->d)}};
  return out;
}

Json to_json(const std::vector<WitnessRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"k", r.k}, {"j", r.j}});
  return out;
}

std::string profile_csv(const NormProfile& profile, bool approx) {
  std::ostringstream os;
  os << "s_a,s_b,value_a,value_b,slope";
  if (approx) os << ",s_approx,value_approx";
  os << "\n";
  const auto& bps = profile.breakpoints();
  const auto& pieces = profile.pieces();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    LogValue v = profile.at(bps[i]);
    long slope = pieces[std::min(i, pieces.size() - 1)].slope;
    os << to_string(bps[i].rational_part()) << "," << to_string(bps[i].sqrt2_part()) << ","
       << to_string(v.rational_part()) << "," << to_string(v.sqrt2_part()) << "," << slope;
    if (approx) os << "," << bps[i].approx() << "," << v.approx();
    os << "\n";
  }
  return os.str();
}

void write_file_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp);
    f << content;
    if (!f.flush()) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error(ErrorKind::InvalidArgument, "cannot rename onto " + path);
}

}  // namespace ultra
