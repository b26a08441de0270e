#include "flagcert/campaign.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "flagcert/octonions.hpp"
#include "flagcert/sampling.hpp"

namespace flagcert {

namespace {

using Status = CheckRecord::Status;

bool set(const std::optional<size_t>& v) { return v.has_value(); }

}  // namespace

CampaignConfig resolve_config(CampaignConfig c) {
  if (c.samples < 1) throw UsageError("samples must be at least 1");
  if (c.bound < 1) throw UsageError("bound must be at least 1");
  if (c.case_name == "projective-split") {
    if (!c.n) c.n = c.p ? *c.p : (c.q ? *c.q : 2);
    if (*c.n < 1) throw UsageError("projective-split needs n >= 1");
    if ((c.p && *c.p != *c.n) || (c.q && *c.q != *c.n)) throw UsageError("projective-split has p = q = n");
    c.p = c.q = c.n;
  } else if (c.case_name == "projective-pq") {
    if (!c.p) c.p = c.q && c.n && *c.n >= *c.q ? *c.n - *c.q : 1;
    if (!c.q) c.q = c.n && *c.n >= *c.p ? *c.n - *c.p : 1;
    if (*c.p + *c.q < 1) throw UsageError("projective-pq needs p + q >= 1");
    if (c.n && *c.n != *c.p + *c.q) throw UsageError("projective-pq needs p + q = n");
    c.n = *c.p + *c.q;
  } else if (c.case_name == "quadric7") {
    if (set(c.n) || set(c.p) || set(c.q)) throw UsageError("quadric7 takes no n, p or q");
  } else if (c.case_name == "isotropic") {
    if (!c.n) c.n = c.p && c.q ? (*c.p + *c.q + 1) / 2 : 2;
    if (*c.n < 1) throw UsageError("isotropic needs n >= 1");
    const size_t odd = 2 * *c.n - 1;
    if (!c.p) c.p = c.q ? (*c.q <= odd ? odd - *c.q : 0) : std::min<size_t>(2, odd);
    if (!c.q) c.q = *c.p <= odd ? odd - *c.p : 0;
    if (*c.p + *c.q != odd) throw UsageError("isotropic needs p + q = 2n - 1");
  } else {
    throw UsageError("unknown case '" + c.case_name + "'; expected projective-split, projective-pq, quadric7 or isotropic");
  }
  return c;
}

StandardModel model_for(const CampaignConfig& c) {
  if (c.case_name == "projective-split") return projective_split_model(*c.n);
  if (c.case_name == "projective-pq") return projective_pq_model(*c.p, *c.q);
  if (c.case_name == "quadric7") return quadric7_model();
  if (c.case_name == "isotropic") return isotropic_model(*c.n, *c.p, *c.q);
  throw UsageError("unknown case '" + c.case_name + "'");
}

const char* to_string(CheckRecord::Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

size_t Report::count(CheckRecord::Status s) const {
  return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

Json orbit_report_to_json(const OrbitReport& r) {
  Json j;
  j["point"] = r.point;
  j["algebra"] = r.algebra;
  j["ground"] = to_string(r.ground);
  j["tangent_dim"] = r.tangent_dim;
  j["manifold_dim_complex"] = r.manifold_dim;
  j["manifold_dim_real"] = 2 * r.manifold_dim;
  j["open"] = r.open;
  j["stratum"] = r.stratum;
  return j;
}

Json onishchik_to_json(const OnishchikReport& r) {
  Json j;
  j["small"] = r.small_name;
  j["big"] = r.big_name;
  j["dim_small"] = r.dim_small;
  j["dim_big"] = r.dim_big;
  j["isotropy_small"] = r.isotropy_small;
  j["isotropy_big"] = r.isotropy_big;
  j["quotient_small"] = r.quotient_small;
  j["quotient_big"] = r.quotient_big;
  j["intersection"] = r.intersection;
  j["isotropy_is_intersection"] = r.isotropy_is_intersection;
  return j;
}

namespace {

class Runner {
 public:
  Runner(Report& r, bool strict) : report_(r), strict_(strict) {}

  void run(const std::string& name, const std::function<bool(Json&)>& body) {
    CheckRecord c;
    c.name = name;
    if (strict_ && failed_) {
      c.status = Status::skipped;
      c.details["reason"] = "fail-fast after an earlier failure";
    } else {
      try {
        c.status = body(c.details) ? Status::pass : Status::fail;
      } catch (const std::exception& e) {
        c.status = Status::fail;
        c.details["error"] = e.what();
      }
      failed_ = failed_ || c.status == Status::fail;
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  Report& report_;
  bool strict_;
  bool failed_ = false;
};

struct Expected {
  LieAlgebraBasis algebra;
  size_t dim;
};

bool dimension_check(const std::vector<Expected>& list, Json& d) {
  bool ok = true;
  Json rows = Json::array();
  for (const auto& e : list) {
    Json r;
    r["algebra"] = e.algebra.name;
    r["ground"] = to_string(e.algebra.ground);
    r["dim"] = e.algebra.dim();
    r["expected"] = e.dim;
    ok = ok && e.algebra.dim() == e.dim && is_bracket_closed(e.algebra);
    r["bracket_closed"] = is_bracket_closed(e.algebra);
    rows.push_back(std::move(r));
  }
  d["algebras"] = std::move(rows);
  return ok;
}

bool onishchik_check(const LieAlgebraBasis& small, const LieAlgebraBasis& big, const std::vector<Subspace>& points,
                     size_t expected_quotient, Json& d) {
  bool ok = true;
  Json rows = Json::array();
  for (const auto& pt : points) {
    const OnishchikReport r = check_onishchik_triple(small, big, pt);
    Json j = onishchik_to_json(r);
    j["expected_quotient"] = expected_quotient;
    ok = ok && r.ok() && r.quotient_small == expected_quotient;
    rows.push_back(std::move(j));
  }
  d["points"] = std::move(rows);
  return ok;
}

Subspace line_of(const Vector& z) {
  const std::vector<Vector> c{z};
  return Subspace::span(c, z.size());
}

/// Checks that a witness survives serialization: decoded with a fresh tower context, it must re-verify.
bool round_trip(const Witness& w, Json& record) {
  const Json j = witness_to_json(w);
  const std::string text = j.dump();
  TowerInterner fresh;
  const Witness back = witness_from_json(Json::parse(text), fresh);
  const bool ok = w.verified && verify_witness(w) && verify_witness(back) && witness_to_json(back).dump() == text;
  record["witness"] = j;
  record["reverified"] = ok;
  return ok;
}

struct LinePair {
  Vector z, target;
  Witness w;
};

void run_projective(const CampaignConfig& cfg, const StandardModel& m, Runner& run, std::vector<uint64_t>& seeds) {
  const size_t n = m.n;
  const LieAlgebraBasis sp = lie_algebra_of(sp2n_c(m));
  const LieAlgebraBasis sl = lie_algebra_of(sl_c(m.dim, "SL2nC"));
  const LieAlgebraBasis su = lie_algebra_of(su_h(m));
  const LieAlgebraBasis spr = lie_algebra_of(sp_real_form(m));

  run.run("dimension-certificates", [&](Json& d) {
    return dimension_check({{sp, n * (2 * n + 1)}, {sl, 4 * n * n - 1}, {su, 4 * n * n - 1}, {spr, n * (2 * n + 1)}}, d);
  });

  run.run("onishchik-triple", [&](Json& d) {
    Rng rng(seeds[0]);
    std::vector<Subspace> pts{line_of(unit_vector(m.dim, 0))};
    for (size_t k = 0; k < std::min<size_t>(cfg.samples, 3); ++k) pts.push_back(line_of(random_vector(rng, m.dim, cfg.bound)));
    return onishchik_check(sp, sl, pts, 2 * n - 1, d);
  });

  std::vector<LinePair> pairs;
  run.run("line-transport-witnesses", [&](Json& d) {
    Rng rng(seeds[1]);
    bool ok = true;
    size_t failures = 0;
    Json rows = Json::array();
    for (int sign : {1, -1}) {
      if ((sign > 0 && m.p == 0) || (sign < 0 && m.q == 0)) continue;
      for (size_t k = 0; k < cfg.samples; ++k) {
        LinePair p;
        p.z = random_line_with_sign(rng, m, sign, cfg.bound);
        p.target = random_line_with_sign(rng, m, sign, cfg.bound);
        TowerPtr tower;
        p.w = transport_positive_line_sp(m, p.z, p.target, tower);
        Json r;
        r["sign"] = sign;
        r["sample"] = k;
        r["tower_depth"] = tower_depth(tower);
        const bool good = round_trip(p.w, r);
        ok = ok && good;
        failures += good ? 0 : 1;
        rows.push_back(std::move(r));
        pairs.push_back(std::move(p));
      }
    }
    d["pairs"] = pairs.size();
    d["failures"] = failures;
    d["records"] = std::move(rows);
    return ok && !pairs.empty();
  });

  run.run("stratum-invariance", [&](Json& d) {
    if (pairs.empty()) throw std::runtime_error("no witnesses to check");
    size_t discrepancies = 0;
    Json rows = Json::array();
    auto record = [&](const std::string& what, bool good) {
      if (good) return;
      ++discrepancies;
      rows.push_back(what);
    };
    for (size_t k = 0; k < pairs.size(); ++k) {
      const auto& p = pairs[k];
      const Subspace a = line_of(p.z), b = apply(p.w.element, a);
      const PointClass ca = classify_point(m, a), cb = classify_point(m, b);
      const OrbitReport ra = orbit_report(m, spr, a), rb = orbit_report(m, spr, b);
      const std::string tag = "pair " + std::to_string(k) + ": ";
      record(tag + "stratum changed", ca.stratum == cb.stratum && cb.stratum == classify_point(m, line_of(p.target)).stratum);
      record(tag + "tangent dimension changed", ra.tangent_dim == rb.tangent_dim);
      record(tag + "open flag disagrees with tangent openness", ca.open_orbit == ra.open && cb.open_orbit == rb.open);
      if (ra.open) record(tag + "complex algebra not transitive", tangent_dim_projective(sp, p.z) == manifold_dim(m));
    }
    size_t boundary = 0;
    if (m.p > 0 && m.q > 0) {
      // Null lines e_a + e_c with h(e_a) = -h(e_c): never open.
      for (size_t a = 0; a < m.dim; ++a)
        for (size_t c = a + 1; c < m.dim; ++c) {
          if (m.E(a, a) != -m.E(c, c)) continue;
          const Subspace l = line_of(unit_vector(m.dim, a) + unit_vector(m.dim, c));
          const PointClass pc = classify_point(m, l);
          record("null line " + std::to_string(a) + "," + std::to_string(c),
                 !pc.open_orbit && !orbit_report(m, spr, l).open);
          ++boundary;
        }
    }
    d["witness_pairs"] = pairs.size();
    d["boundary_points"] = boundary;
    d["discrepancies"] = discrepancies;
    d["messages"] = std::move(rows);
    return discrepancies == 0;
  });
}

void run_quadric(const CampaignConfig& cfg, const StandardModel& q, Runner& run, std::vector<uint64_t>& seeds) {
  const OctonionAlgebra oct = split_octonions();
  // A wrong derivation dimension throws here, outside any check: a hard error.
  const DerivationBasis der = derivations(oct);
  const LieAlgebraBasis g2 = imaginary_embedding(der);
  const LieAlgebraBasis so34_alg = lie_algebra_of(so34(q));
  const LieAlgebraBasis so7 = lie_algebra_of(so7_c(q));

  run.run("dimension-certificates", [&](Json& d) {
    return dimension_check({{der.algebra, 14}, {g2, 14}, {so34_alg, 21}, {so7, 21}}, d);
  });

  run.run("onishchik-triple", [&](Json& d) {
    std::vector<Subspace> pts;
    for (const auto& [name, z] : quadric_strata_representatives()) pts.push_back(line_of(z));
    return onishchik_check(complexify(g2), so7, pts, 5, d);
  });

  std::vector<OrbitComparison> comparisons;
  run.run("orbit-equality", [&](Json& d) {
    comparisons = verify_orbit_equality(q, g2, so34_alg, cfg.samples, seeds[2], cfg.bound);
    bool ok = true;
    Json per = Json::object();
    Json rows = Json::array();
    for (const auto& c : comparisons) {
      ok = ok && c.equal;
      if (c.stratum == "positive" || c.stratum == "negative")
        ok = ok && c.small.tangent_dim == 2 * manifold_dim(q) && c.big.tangent_dim == 2 * manifold_dim(q);
      per[c.stratum] = per.value(c.stratum, 0) + 1;
      Json r;
      r["stratum"] = c.stratum;
      r["sample"] = c.sample;
      r["point"] = vector_to_json(c.point);
      r["small"] = orbit_report_to_json(c.small);
      r["big"] = orbit_report_to_json(c.big);
      r["equal"] = c.equal;
      rows.push_back(std::move(r));
    }
    for (const auto& [name, z] : quadric_strata_representatives()) ok = ok && per.value(name, 0) >= 1;
    d["samples_per_stratum"] = per;
    d["comparisons"] = std::move(rows);
    return ok;
  });

  run.run("stratum-invariance", [&](Json& d) {
    if (comparisons.empty()) throw std::runtime_error("no orbit samples to check");
    size_t discrepancies = 0;
    for (const auto& c : comparisons) {
      const PointClass pc = classify_point(q, line_of(c.point));
      const bool good = pc.stratum == c.stratum && pc.open_orbit == c.small.open && pc.open_orbit == c.big.open &&
                        tangent_dim_projective(so7, c.point) == manifold_dim(q);
      discrepancies += good ? 0 : 1;
    }
    d["points"] = comparisons.size();
    d["discrepancies"] = discrepancies;
    return discrepancies == 0;
  });
}

struct PlaneWitness {
  Subspace plane;
  Witness w;
};

void run_isotropic(const CampaignConfig& cfg, const StandardModel& m, Runner& run, std::vector<uint64_t>& seeds) {
  const size_t n = m.n;
  const LieAlgebraBasis so2n = lie_algebra_of(so2n_c(m));
  const LieAlgebraBasis so2n1 = lie_algebra_of(so2n1_c(m));
  const LieAlgebraBasis sopq = lie_algebra_of(so_pq(m));
  const LieAlgebraBasis sopq_hat = lie_algebra_of(so_pq_hat(m));
  const size_t small_dim = (2 * n - 1) * (n - 1);

  run.run("dimension-certificates", [&](Json& d) {
    return dimension_check({{so2n, n * (2 * n - 1)}, {so2n1, small_dim}, {sopq, small_dim}, {sopq_hat, n * (2 * n - 1)}}, d);
  });

  run.run("onishchik-triple", [&](Json& d) {
    Rng rng(seeds[0]);
    std::vector<Subspace> pts{complex_normal_form(n), real_normal_form(m)};
    for (size_t k = 0; k < std::min<size_t>(cfg.samples, 3); ++k) pts.push_back(scramble_complex(rng, m, cfg.bound));
    return onishchik_check(so2n1, so2n, pts, n * (n - 1) / 2, d);
  });

  std::vector<Subspace> complex_planes;
  run.run("complex-normal-form-witnesses", [&](Json& d) {
    Rng rng(seeds[1]);
    bool ok = true;
    size_t failures = 0;
    Json rows = Json::array();
    for (size_t k = 0; k < cfg.samples; ++k) {
      const Subspace w_hat = scramble_complex(rng, m, cfg.bound);
      complex_planes.push_back(w_hat);
      const Witness w = isotropic_normal_form_complex(m, w_hat);
      Json r;
      r["sample"] = k;
      const bool good = round_trip(w, r) && column_space_equal(apply(w.element, w_hat), complex_normal_form(n));
      ok = ok && good;
      failures += good ? 0 : 1;
      rows.push_back(std::move(r));
    }
    d["samples"] = cfg.samples;
    d["failures"] = failures;
    d["records"] = std::move(rows);
    return ok;
  });

  std::vector<PlaneWitness> real_planes;
  run.run("real-normal-form-witnesses", [&](Json& d) {
    Rng rng(seeds[2]);
    bool ok = true;
    size_t failures = 0;
    Json rows = Json::array();
    for (size_t k = 0; k < cfg.samples; ++k) {
      PlaneWitness pw{scramble_real(rng, m, cfg.bound), {}};
      TowerPtr tower;
      pw.w = isotropic_normal_form_real(m, pw.plane, tower);
      Json r;
      r["sample"] = k;
      r["tower_depth"] = tower_depth(tower);
      const bool good = round_trip(pw.w, r) && column_space_equal(apply(pw.w.element, pw.plane), real_normal_form(m));
      ok = ok && good;
      failures += good ? 0 : 1;
      rows.push_back(std::move(r));
      real_planes.push_back(std::move(pw));
    }
    d["samples"] = cfg.samples;
    d["failures"] = failures;
    d["records"] = std::move(rows);
    return ok;
  });

  run.run("stratum-invariance", [&](Json& d) {
    if (real_planes.empty()) throw std::runtime_error("no witnesses to check");
    size_t discrepancies = 0;
    Json messages = Json::array();
    auto record = [&](const std::string& what, bool good) {
      if (good) return;
      ++discrepancies;
      messages.push_back(what);
    };
    const PointClass normal = classify_point(m, real_normal_form(m));
    for (size_t k = 0; k < real_planes.size(); ++k) {
      const auto& pw = real_planes[k];
      const Subspace image = apply(pw.w.element, pw.plane);
      const PointClass ca = classify_point(m, pw.plane), cb = classify_point(m, image);
      const OrbitReport ra = orbit_report(m, sopq, pw.plane), rb = orbit_report(m, sopq, image);
      const std::string tag = "real sample " + std::to_string(k) + ": ";
      record(tag + "stratum changed", ca.stratum == cb.stratum && cb.stratum == normal.stratum);
      record(tag + "tangent dimension changed", ra.tangent_dim == rb.tangent_dim);
      record(tag + "open flag disagrees with tangent openness", ca.open_orbit == ra.open && cb.open_orbit == rb.open);
      if (ra.open) record(tag + "complex algebra not transitive", tangent_dim_grassmann(so2n1, pw.plane, m.b) == manifold_dim(m));
    }
    for (size_t k = 0; k < complex_planes.size(); ++k) {
      const PointClass c = classify_point(m, complex_planes[k]);
      record("complex sample " + std::to_string(k) + ": open flag disagrees with tangent openness",
             c.open_orbit == orbit_report(m, sopq, complex_planes[k]).open);
    }
    size_t boundary = 0;
    if (m.p > 0 || m.eps.sign() < 0) {
      for (bool flip : {false, true}) {
        const Subspace b = boundary_plane(m, flip);
        const PointClass c = classify_point(m, b);
        record(std::string("boundary plane") + (flip ? " (flipped)" : "") + " flagged open",
               !c.open_orbit && !orbit_report(m, sopq, b).open);
        ++boundary;
      }
    }
    d["open_stratum"] = normal.stratum;
    d["real_samples"] = real_planes.size();
    d["complex_samples"] = complex_planes.size();
    d["boundary_points"] = boundary;
    d["discrepancies"] = discrepancies;
    d["messages"] = std::move(messages);
    return discrepancies == 0;
  });
}

}  // namespace

Report run_campaign(const CampaignConfig& input) {
  Report r;
  r.config = resolve_config(input);
  const StandardModel m = model_for(r.config);
  Rng master(r.config.seed);
  std::vector<uint64_t> seeds;
  for (int k = 0; k < 4; ++k) seeds.push_back(master.next());
  Runner run(r, r.config.strict);
  switch (m.kind) {
    case ModelCase::projective_split:
    case ModelCase::projective_pq: run_projective(r.config, m, run, seeds); break;
    case ModelCase::quadric7: run_quadric(r.config, m, run, seeds); break;
    case ModelCase::isotropic: run_isotropic(r.config, m, run, seeds); break;
  }
  return r;
}

Json report_to_json(const Report& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = "flagcert";
  j["version"] = kToolVersion;
  Json c;
  c["case"] = r.config.case_name;
  if (r.config.n) c["n"] = *r.config.n;
  if (r.config.p) c["p"] = *r.config.p;
  if (r.config.q) c["q"] = *r.config.q;
  c["samples"] = r.config.samples;
  c["seed"] = r.config.seed;
  c["bound"] = r.config.bound;
  c["strict"] = r.config.strict;
  c["prng"] = "mt19937_64";
  j["config"] = std::move(c);
  Json checks = Json::array();
  for (const auto& k : r.checks) {
    Json cj;
    cj["name"] = k.name;
    cj["status"] = to_string(k.status);
    cj["details"] = k.details;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  Json s;
  s["pass"] = r.count(Status::pass);
  s["fail"] = r.count(Status::fail);
  s["skipped"] = r.count(Status::skipped);
  s["total"] = r.checks.size();
  j["summary"] = std::move(s);
  j["status"] = r.passed() ? "pass" : "fail";
  return j;
}

std::string render_report(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

WitnessFileResult verify_witness_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {kExitUsage, "cannot open " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {kExitUsage, "empty witness file"};
  Witness w;
  try {
    TowerInterner towers;
    w = witness_from_json(Json::parse(text), towers);
  } catch (const Json::exception& e) {
    return {kExitUsage, std::string("parse error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, std::string("parse error: ") + e.what()};
  } catch (const std::domain_error& e) {
    return {kExitUsage, std::string("parse error: ") + e.what()};
  }
  std::vector<std::string> failures;
  try {
    failures = witness_failures(w);
  } catch (const std::invalid_argument& e) {
    failures.push_back(e.what());
  }
  if (failures.empty()) return {kExitPass, "witness verifies in group " + w.group.name};
  std::string msg = "witness fails:";
  for (const auto& f : failures) msg += " " + f;
  return {kExitCheckFailed, msg};
}

}  // namespace flagcert
