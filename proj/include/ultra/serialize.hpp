#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ultra/annulus.hpp"
#include "ultra/forge.hpp"
#include "ultra/gauss.hpp"
#include "ultra/qseries.hpp"
#include "ultra/search.hpp"

namespace ultra {

using Json = nlohmann::ordered_json;

/// {"a":"p/q","b":"r/s"} or "inf".
Json to_json(const LogValue& v);
LogValue logvalue_from_json(const Json& j);

Json to_json(const ForgeSchedule& sch);
ForgeSchedule schedule_from_json(const Json& j);

Json to_json(const CertRecord& r);
CertRecord record_from_json(const Json& j);

/// Self-contained certificate: schedule, centers (as text) and records.
Json certificate_to_json(const ForgeSchedule& sch, const CenterSet& centers, const ForgeCertificate& cert);

struct ParsedCertificate {
  ForgeSchedule schedule;
  CenterSet centers;
  ForgeCertificate certificate;
  bool passed_flag = false;
};
/// Throws Error(Parse) on malformed content.
ParsedCertificate certificate_from_json(const Json& j);

struct CheckReport {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Re-validates a certificate from its embedded schedule and centers: the
/// relation of every record, the recomputed record list, and the pass flags.
CheckReport check_certificate(const Json& j);

Json to_json(const LimitTable& table);
Json to_json(const SearchTrace& trace);
Json to_json(const std::vector<WitnessRow>& rows);

/// Header s_a,s_b,value_a,value_b,slope (plus non-authoritative decimal
/// columns with `approx`). One row per breakpoint; the slope is that of the
/// piece to the right, the last row repeating the final slope.
std::string profile_csv(const NormProfile& profile, bool approx = false);

/// Writes via a temporary file and a rename.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace ultra
