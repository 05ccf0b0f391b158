#include "polarweb/report.hpp"

#include <sstream>

namespace polarweb {

void CheckReport::add_sample(Json record, bool ok, bool exact) {
  Json entry = Json::object();
  entry["index"] = samples_used;
  for (auto& [key, value] : record.items()) entry[key] = value;
  entry["verdict"] = ok ? "pass" : "fail";
  entry["exact"] = exact;
  samples.push_back(std::move(entry));
  ++samples_used;
  if (!ok) passed = false;
  if (!exact) ++numeric_samples;
  mode = numeric_samples == 0 ? "exact" : (numeric_samples == samples_used ? "numeric" : "mixed");
}

void CheckReport::fail(const std::string& why) {
  passed = false;
  summary["failure"] = why;
}

Json to_json(const CheckReport& r) {
  Json j = Json::object();
  j["check"] = r.check;
  j["input"] = r.input;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["samples_requested"] = r.samples_requested;
  j["samples_used"] = r.samples_used;
  Json discards = Json::array();
  for (const auto& d : r.discards) discards.push_back({{"attempt", d.attempt}, {"point", d.point}, {"reason", d.reason}});
  j["discards"] = discards;
  j["notes"] = r.notes;
  j["mode"] = r.mode;
  j["samples"] = r.samples;
  j["summary"] = r.summary;
  j["skipped"] = r.skipped;
  if (r.skipped) j["skip_reason"] = r.skip_reason;
  j["passed"] = r.passed;
  return j;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << "check: " << r.check << "\n";
  out << "input: " << r.input << "\n";
  if (!r.command.empty()) out << "command: " << r.command << "\n";
  out << "seed: " << r.seed << "\n";
  out << "samples: requested " << r.samples_requested << ", used " << r.samples_used << ", discarded "
      << r.discards.size() << "\n";
  out << "mode: " << r.mode << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  for (const auto& d : r.discards) out << "discard " << d.attempt << " " << d.point << ": " << d.reason << "\n";
  for (const auto& s : r.samples) out << "sample " << s.dump() << "\n";
  if (!r.summary.empty()) out << "summary: " << r.summary.dump() << "\n";
  if (r.skipped) {
    out << "verdict: SKIPPED (" << r.skip_reason << ")\n";
  } else {
    out << "verdict: " << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

std::optional<AffinePoint> Sampler::draw(const Reject& reject) {
  while (!exhausted()) {
    const Rational a = rng_.rational();
    const Rational b = rng_.rational();
    const AffinePoint p = AffinePoint::rational(a, b);
    const std::string why = reject ? reject(p) : std::string();
    if (why.empty()) {
      ++attempt_;
      return p;
    }
    discard(p, why);
  }
  return std::nullopt;
}

void Sampler::discard(const AffinePoint& p, const std::string& reason) { discard(p.str(), reason); }

void Sampler::discard(const std::string& what, const std::string& reason) {
  report_.discards.push_back({++attempt_, what, reason});
  ++failures_;
}

Json point_json(const AffinePoint& p) {
  if (p.exact) return {{"point", p.str()}, {"exact", true}};
  return {{"point", p.str()}, {"exact", false}};
}

}  // namespace polarweb
