#pragma once

// Seeded verification of the polar-curve theorems on one web or foliation.
// Every check draws its own samples from `seed` and returns a report whose
// content depends only on the input, the options and the seed.

#include <cstdint>
#include <string>
#include <vector>

#include "polarweb/localsing.hpp"
#include "polarweb/report.hpp"
#include "polarweb/web.hpp"

namespace polarweb {

struct CheckOptions {
  std::uint64_t seed = 0;
  int samples = 20;
  /// Membership tolerance for numeric points.
  double residual_tol = 1e-9;
  /// Discards allowed between two accepted samples.
  int max_tries = 50;
  GenusMode genus_mode = GenusMode::projective;
  std::string command;
};

CheckReport polar_degree_check(const SymWeb& w, const CheckOptions& opt);
CheckReport polar_equality_check(const SymWeb& w, const CheckOptions& opt);
CheckReport k2_check(const SymWeb& w, const CheckOptions& opt);
CheckReport family_dim_check(const SymWeb& w, const CheckOptions& opt);
CheckReport base_points_check(const SymWeb& w, const CheckOptions& opt);
CheckReport sing_locus_check(const SymWeb& w, const CheckOptions& opt);
CheckReport branches_check(const SymWeb& w, const CheckOptions& opt);
CheckReport irreducible_check(const SymWeb& w, const CheckOptions& opt);
CheckReport sing_in_e_check(const Foliation& f, const CheckOptions& opt);
CheckReport qr_dichotomy_check(const Foliation& f, const CheckOptions& opt);
CheckReport inflexion_lemma_check(const Foliation& f, const CheckOptions& opt);
CheckReport qr_bound_check(const Foliation& f, const CheckOptions& opt);
CheckReport equising_check(const SymWeb& w, const CheckOptions& opt);
CheckReport genus_constant_check(const SymWeb& w, const CheckOptions& opt);

/// The names accepted by run_check, in a fixed order.
const std::vector<std::string>& theorem_names();
/// Dispatches by name. Foliation checks need k = 1 and throw WebError
/// otherwise; unknown names throw std::invalid_argument.
CheckReport run_check(const std::string& theorem, const SymWeb& w, const CheckOptions& opt);

/// W = L_q for some point q: the web of lines through q.
bool is_radial_web(const SymWeb& w);

Json fingerprint_json(const GermFingerprint& fp);

}  // namespace polarweb
