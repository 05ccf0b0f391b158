#include "polarweb/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "polarweb/checks.hpp"
#include "polarweb/foliation.hpp"
#include "polarweb/input.hpp"
#include "polarweb/polar.hpp"
#include "polarweb/report.hpp"

namespace polarweb {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  bool json = false;
  std::uint64_t seed = 0;
  int samples = 20;
  std::string center, at, p1, p2;
  std::string theorem;
  std::string genus_mode = "projective";
  bool base_points = false, degree = false, dimension = false;
  double tol_residual = 1e-9;
  double tol_germ = 1e-7;
  double tol_cluster = 1e-6;
};

AffinePoint point_option(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  try {
    const auto [a, b] = parse_point(text);
    return AffinePoint::rational(a, b);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.message());
  }
}

const SymWeb& need_web(const InputData& in) {
  if (in.kind == InputKind::curve) throw UsageError("this subcommand needs a web or foliation input");
  return in.web;
}

const Foliation& need_foliation(const InputData& in) {
  if (in.kind == InputKind::curve || !in.foliation) {
    if (in.kind == InputKind::web && in.web.k() == 1) {
      throw UsageError("this subcommand needs 'type: foliation' (the input is a 1-web)");
    }
    throw UsageError("this subcommand needs a foliation input");
  }
  return *in.foliation;
}

const MPoly& need_curve(const InputData& in) {
  if (in.kind != InputKind::curve) throw UsageError("this subcommand needs a curve input");
  return in.curve;
}

GenusMode genus_mode(const std::string& s) {
  if (s == "projective") return GenusMode::projective;
  if (s == "affine") return GenusMode::affine;
  throw UsageError("--mode must be affine or projective");
}

Json string_list(const std::vector<AffinePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.str());
  return out;
}

Json classification_json(const SingularityClass& c) {
  Json j = {{"jet_order", c.jet_order}, {"quasi_radial", c.quasi_radial}, {"exact", c.exact}};
  if (c.cofactor) j["cofactor"] = c.cofactor->str();
  if (!c.exact) j["criterion_residual"] = c.criterion_residual;
  return j;
}

void render_text(const Json& value, const std::string& indent, std::ostream& out) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_array()) {
      out << indent << key << ":";
      if (v.empty()) out << " none";
      out << "\n";
      for (const auto& e : v) out << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
    } else if (v.is_object()) {
      out << indent << key << ":\n";
      render_text(v, indent + "  ", out);
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

/// Generic centres for sampled family-degree runs.
std::string generic_reject(const SymWeb& w, const AffinePoint& p) {
  bool sing = true;
  for (const MPoly& c : w.coefficients()) sing = sing && vanishes_at(c, p);
  if (sing) return "on Sing(W)";
  if (w.k() >= 2 && vanishes_at(w.discriminant(), p)) return "on the discriminant";
  return "";
}

Json run_plain(const std::string& cmd, const Options& o, const InputData& in, int& code) {
  Rng rng(o.seed);
  Json r = Json::object();
  if (cmd == "polar") {
    const SymWeb& w = need_web(in);
    const AffinePoint c = point_option(o.center, "--center");
    const PolarCurve pc = polar_curve(w, c.a, c.b);
    r["center"] = c.str();
    r["whole_plane"] = pc.whole_plane;
    if (pc.whole_plane) {
      r["polar"] = "0";
      r["cofactor"] = pc.cofactor ? pc.cofactor->str() : std::string();
    } else {
      r["polar"] = canonical(pc.raw).str();
      r["reduced"] = pc.curve.defining.str();
      r["degree"] = pc.raw.total_degree();
    }
  } else if (cmd == "degree") {
    const SymWeb& w = need_web(in);
    const int d = web_degree(w, rng);
    r["k"] = w.k();
    r["d"] = d;
    r["polar_degree"] = d + w.k();
  } else if (cmd == "discriminant") {
    const SymWeb& w = need_web(in);
    const PlaneCurve dc = discriminant_curve(w);
    r["k"] = w.k();
    r["discriminant"] = discriminant_poly(w).str();
    r["curve"] = dc.is_empty() ? std::string("empty") : dc.defining.str();
  } else if (cmd == "singular") {
    if (in.kind == InputKind::curve) {
      Json inf = Json::array();
      for (const CurvePoint& cp : singular_points_at_infinity(in.curve)) inf.push_back(cp.point.str());
      r["affine"] = string_list(curve_singular_points(in.curve));
      r["at_infinity"] = inf;
    } else {
      const SingularSet ss = singular_set(in.web);
      Json gens = Json::array();
      for (const auto& g : ss.generators) gens.push_back(g.str());
      r["generators"] = gens;
      r["points"] = string_list(ss.points);
      if (in.foliation) {
        Json inf = Json::array();
        for (const auto& s : foliation_singularities(*in.foliation)) {
          if (s.chart != Chart::affine) inf.push_back(s.point.str());
        }
        r["at_infinity"] = inf;
      }
    }
  } else if (cmd == "directions") {
    const SymWeb& w = need_web(in);
    const AffinePoint p = point_option(o.at, "--at");
    const Smoothness sm = is_smooth_point(w, p);
    r["point"] = p.str();
    r["smooth"] = sm.smooth;
    if (!sm.smooth) {
      r["reason"] = sm.reason;
    } else {
      Json dirs = Json::array();
      for (const auto& d : tangent_directions(w, p)) dirs.push_back(d.str());
      r["directions"] = dirs;
    }
  } else if (cmd == "inflexion") {
    if (in.kind == InputKind::curve) {
      const AffinePoint p = point_option(o.at, "--at");
      const InflexionTest t = is_inflexion_point(in.curve, p);
      r["point"] = p.str();
      r["inflexion"] = t.inflexion;
      r["exact"] = t.exact;
    } else {
      const Foliation& f = need_foliation(in);
      const InflexionDivisor e = inflexion_divisor(f);
      r["all_leaves_lines"] = e.all_leaves_lines;
      r["raw"] = e.raw.str();
      if (!e.all_leaves_lines) r["E"] = e.curve.is_empty() ? std::string("empty") : e.curve.defining.str();
      if (!o.at.empty()) {
        const AffinePoint p = point_option(o.at, "--at");
        const InflexionTest t = polar_inflexion_at_center(f, p);
        r["point"] = p.str();
        r["on_E"] = vanishes_at(e.raw, p);
        r["polar_inflexion_at_center"] = t.inflexion;
      }
    }
  } else if (cmd == "classify-sing") {
    const Foliation& f = need_foliation(in);
    if (!o.at.empty()) {
      const AffinePoint p = point_option(o.at, "--at");
      r["point"] = p.str();
      r["classification"] = classification_json(classify_singularity(f, p));
    } else {
      Json list = Json::array();
      int qr = 0;
      for (const auto& s : foliation_singularities(f)) {
        Json e = {{"point", s.point.str()}, {"chart", chart_name(s.chart)}};
        const Json cls = classification_json(s.cls);
        for (const auto& [k, v] : cls.items()) e[k] = v;
        qr += s.cls.quasi_radial ? 1 : 0;
        list.push_back(e);
      }
      r["singularities"] = list;
      r["quasi_radial"] = qr;
    }
  } else if (cmd == "family") {
    const SymWeb& w = need_web(in);
    const int chosen = int(o.base_points) + int(o.degree) + int(o.dimension);
    if (chosen != 1) throw UsageError("family needs exactly one of --base-points, --degree, --dimension");
    if (o.base_points) {
      const PolarFamily fam = polar_family(w, rng);
      const BasePoints bp = base_points(fam, w);
      Json coeffs = Json::array();
      for (const auto& c : bp.coefficients) coeffs.push_back(c.str());
      r["parametric"] = fam.parametric.str();
      r["coefficients"] = coeffs;
      r["base_points"] = string_list(bp.points);
      r["outside_singular_set"] = string_list(bp.outside_singular_set);
      if (!bp.outside_singular_set.empty()) code = kExitAssertion;
    } else if (o.degree) {
      std::optional<AffinePoint> a, b;
      if (!o.p1.empty() || !o.p2.empty()) {
        a = point_option(o.p1, "--p1");
        b = point_option(o.p2, "--p2");
      } else {
        CheckReport log;
        Sampler s(rng, log);
        a = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
        b = s.draw([&](const AffinePoint& q) { return generic_reject(w, q); });
        if (!a || !b) throw UsageError("no generic pair of points found");
      }
      const FamilyDegree fd = family_degree(w, *a, *b);
      r["p1"] = a->str();
      r["p2"] = b->str();
      r["degenerate"] = fd.degenerate;
      if (fd.degenerate) {
        r["reason"] = fd.reason;
      } else {
        Json pts = Json::array();
        for (const auto& q : fd.points) pts.push_back(q.str());
        r["count"] = fd.count;
        r["points"] = pts;
        r["cross_check"] = fd.cross_check;
        r["max_residual"] = fd.max_residual;
      }
    } else {
      r["dimension"] = family_dimension(w, rng, std::max(5, o.samples));
      r["samples"] = std::max(5, o.samples);
    }
  } else if (cmd == "class") {
    const MPoly& c = need_curve(in);
    const CurveClass cls = class_of_curve(c, rng, 2);
    r["degree"] = cls.degree;
    r["class"] = cls.value;
    r["values"] = cls.values;
    r["singular_contributions"] = cls.singular_contributions;
    r["consistent"] = cls.consistent;
    r["exact"] = cls.exact;
    if (!cls.consistent) code = kExitAssertion;
  } else if (cmd == "genus") {
    const MPoly& c = need_curve(in);
    const GenusResult g = genus_of_curve(c, genus_mode(o.genus_mode), rng);
    Json pts = Json::array();
    for (const auto& [cp, fp] : g.points) {
      pts.push_back({{"point", cp.point.str()}, {"chart", chart_name(cp.chart)}, {"delta", fp.delta}});
    }
    r["mode"] = o.genus_mode;
    r["degree"] = g.degree;
    r["genus"] = g.genus;
    r["singular_points"] = pts;
    r["exact"] = g.exact;
  } else if (cmd == "localsing") {
    const MPoly& c = need_curve(in);
    const AffinePoint p = point_option(o.at, "--at");
    GermOptions go;
    go.zero_tol = o.tol_germ;
    go.cluster_tol = o.tol_cluster;
    r["point"] = p.str();
    r["fingerprint"] = fingerprint_json(fingerprint(c, p, go));
  }
  return r;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "polarweb";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar curves of plane webs and foliations", "polarweb"};
  app.require_subcommand(1);
  Options o;
  const auto common = [&](CLI::App* sub, bool needs_input = true) {
    auto* in = sub->add_option("--in", o.in, "input file");
    if (needs_input) in->required();
    sub->add_flag("--json", o.json, "emit one JSON document");
    sub->add_option("--seed", o.seed, "seed of every random choice")->capture_default_str();
    sub->add_option("--samples", o.samples, "number of samples")->capture_default_str();
    sub->add_option("--tol-residual", o.tol_residual, "membership tolerance for numeric points")
        ->capture_default_str();
    sub->add_option("--tol-germ", o.tol_germ, "relative zero tolerance for numeric germ coefficients")
        ->capture_default_str();
    sub->add_option("--tol-cluster", o.tol_cluster, "clustering tolerance for numeric tangents")
        ->capture_default_str();
  };
  std::map<std::string, CLI::App*> subs;
  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    subs[name] = s;
    return s;
  };
  add("polar", "polar curve at a centre")->add_option("--center", o.center, "centre a,b");
  add("degree", "degree of the web");
  add("discriminant", "discriminant curve");
  add("singular", "singular points");
  add("directions", "tangent directions at a point")->add_option("--at", o.at, "point a,b");
  add("inflexion", "inflexion divisor, or the inflexion test on a curve")->add_option("--at", o.at, "point a,b");
  add("classify-sing", "quasi-radial classification of singular points")->add_option("--at", o.at, "point a,b");
  CLI::App* fam = add("family", "the polar family");
  fam->add_flag("--base-points", o.base_points, "common points of all polars");
  fam->add_flag("--degree", o.degree, "number of polars through two generic points");
  fam->add_flag("--dimension", o.dimension, "dimension of the family");
  fam->add_option("--p1", o.p1, "first point a,b");
  fam->add_option("--p2", o.p2, "second point a,b");
  add("class", "degree of the dual curve");
  add("genus", "geometric genus")->add_option("--mode", o.genus_mode, "affine or projective")->capture_default_str();
  add("localsing", "germ fingerprint at a point")->add_option("--at", o.at, "point a,b");
  CLI::App* check = add("check", "verify one theorem on the input");
  check->add_option("--theorem", o.theorem, "theorem name")
      ->required()
      ->check(CLI::IsMember(theorem_names()));
  check->add_option("--genus-mode", o.genus_mode, "affine or projective (genus-constant)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  std::string cmd;
  for (const auto& [name, s] : subs) {
    if (s->parsed()) cmd = name;
  }

  try {
    const InputData in = read_input(o.in);
    for (const auto& w : in.warnings) err << "warning: " << w << "\n";
    if (cmd == "check") {
      CheckOptions copt;
      copt.seed = o.seed;
      copt.samples = o.samples;
      copt.residual_tol = o.tol_residual;
      copt.genus_mode = genus_mode(o.genus_mode);
      copt.command = join(args);
      CheckReport rep = run_check(o.theorem, in.web, copt);
      if (o.json) {
        Json j = to_json(rep);
        j["warnings"] = in.warnings;
        out << j.dump(2) << "\n";
      } else {
        out << to_text(rep);
      }
      return rep.passed ? kExitPass : kExitAssertion;
    }
    int code = kExitPass;
    const Json result = run_plain(cmd, o, in, code);
    if (o.json) {
      Json j = Json::object();
      j["command"] = join(args);
      j["subcommand"] = cmd;
      j["kind"] = kind_name(in.kind);
      j["input"] = in.kind == InputKind::curve ? in.curve.str() : in.web.str();
      j["seed"] = o.seed;
      j["warnings"] = in.warnings;
      j["result"] = result;
      out << j.dump(2) << "\n";
    } else {
      render_text(result, "", out);
    }
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WebError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LocalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric abort: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const PolyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace polarweb
