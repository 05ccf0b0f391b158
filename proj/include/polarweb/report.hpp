#pragma once

// Structured check reports and the seeded sampling protocol behind them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polarweb/rng.hpp"
#include "polarweb/solve.hpp"

namespace polarweb {

using Json = nlohmann::ordered_json;

struct Discard {
  int attempt = 0;
  std::string point;
  std::string reason;
};

struct CheckReport {
  std::string check;
  std::string input;
  std::string command;
  std::uint64_t seed = 0;
  int samples_requested = 0;
  int samples_used = 0;
  int numeric_samples = 0;
  std::vector<Discard> discards;
  /// Notes printed in the header, e.g. which proxy a check relies on.
  std::vector<std::string> notes;
  std::vector<Json> samples;
  Json summary = Json::object();
  /// "exact", "numeric" or "mixed".
  std::string mode = "exact";
  bool skipped = false;
  std::string skip_reason;
  bool passed = true;

  /// Logs one per-sample record; a failing sample fails the report.
  void add_sample(Json record, bool ok, bool exact = true);
  void fail(const std::string& why);
};

Json to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);

/// Draws rational points with numerator in [-100, 100] and denominator in
/// [1, 100], discarding (and logging) those rejected by a predicate. At most
/// `max_tries` discards are allowed between two accepted samples.
class Sampler {
 public:
  Sampler(Rng& rng, CheckReport& report, int max_tries = 50) : rng_(rng), report_(report), max_tries_(max_tries) {}

  /// `reject` returns an empty string to accept, a reason otherwise.
  using Reject = std::function<std::string(const AffinePoint&)>;
  /// nullopt when the retry budget is exhausted.
  std::optional<AffinePoint> draw(const Reject& reject);
  /// Logs a discard for a point found unusable after it was drawn.
  void discard(const AffinePoint& p, const std::string& reason);
  void discard(const std::string& what, const std::string& reason);
  /// Ends the current sample: the discard budget starts over.
  void accept() { failures_ = 0; }
  bool exhausted() const { return failures_ >= max_tries_; }
  Rational rational() { return rng_.rational(); }
  Rng& rng() { return rng_; }

 private:
  Rng& rng_;
  CheckReport& report_;
  int max_tries_;
  int failures_ = 0;
  int attempt_ = 0;
};

Json point_json(const AffinePoint& p);

}  // namespace polarweb
