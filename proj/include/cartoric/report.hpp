#pragma once
// Deterministic JSON reports shared by the CLI and the reproducibility
// tests.  A config plus a seed fully determines every byte of the dump:
// ordered_json keeps insertion order, every container here is iterated in a
// fixed order, and exact rationals are rendered as "p/q" strings (plain
// integers when the denominator is 1).  Guarded checks emit explicit
// "skipped" entries instead of disappearing.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "cohomology.hpp"
#include "cone_oracle.hpp"
#include "fan.hpp"
#include "peterson.hpp"
#include "wall.hpp"
#include "weyl.hpp"

namespace cartoric {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rat& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
  return Json(to_string(x));
}

inline Json int_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(to_string(x));
}

inline Json int_vector_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

inline Json rat_vector_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rational_json(x));
  return a;
}

inline Json one_based(const std::vector<int>& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

inline Json status_json(bool pass) { return Json(pass ? "pass" : "fail"); }

inline Json skipped_json(const std::string& why) {
  Json j;
  j["status"] = "skipped";
  j["reason"] = why;
  return j;
}

// A report passes when no "status" field anywhere says "fail".
inline bool report_passes(const Json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "status" && it.value().is_string() && it.value() == "fail") return false;
      if (!report_passes(it.value())) return false;
    }
  } else if (j.is_array()) {
    for (const Json& e : j)
      if (!report_passes(e)) return false;
  }
  return true;
}

inline Int binomial_int(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int b(1);
  for (int t = 1; t <= k; ++t) b = b * (n - t + 1) / t;
  return b;
}

struct FanRunConfig {
  std::string type_spec;
  std::uint64_t seed = 1;
  long samples = 10000;
};

inline Json fan_report(const FanRunConfig& cfg) {
  CartanMatrix cm(cfg.type_spec);
  FanSigma fan(cm);
  const int n = fan.rank();

  Json rep;
  rep["schema"] = 1;
  rep["command"] = "fan";
  rep["type"] = format_type_spec(cm.components());
  rep["rank"] = n;
  rep["seed"] = cfg.seed;

  Json rays = Json::array();
  for (const Ray& r : fan.rays()) {
    Json jr;
    jr["name"] = r.name;
    jr["coords"] = rat_vector_json(r.coords);
    rays.push_back(jr);
  }
  rep["rays"] = rays;
  rep["cone_count"] = static_cast<long>(fan.cones().size());
  if (n <= 4) {
    Json cones = Json::array();
    for (const ConeJK& c : fan.cones()) {
      Json jc;
      jc["J"] = one_based(c.J);
      jc["K"] = one_based(c.K);
      jc["dim"] = c.dim();
      cones.push_back(jc);
    }
    rep["cones"] = cones;
  } else {
    rep["cones"] = "omitted (rank > 4)";
  }
  rep["f_vector"] = int_vector_json(fan.f_vector());
  rep["h_vector"] = int_vector_json(fan.h_vector());

  Json checks;

  {
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    Json c;
    c["status"] = status_json(static_cast<long>(fan.cones().size()) == total);
    c["expected"] = total;
    checks["cone_count"] = c;
  }
  {
    bool ok = true;
    for (const ConeJK& c : fan.cones())
      if (c.dim() != static_cast<int>(c.J.size() + c.K.size())) ok = false;
    std::vector<Int> expected(n + 1);
    for (int d = 0; d <= n; ++d) expected[d] = binomial_int(n, d) * pow_rat(Rat(2), d).get_num();
    Json c;
    bool fok = fan.f_vector() == expected;
    c["status"] = status_json(ok && fok);
    c["expected"] = int_vector_json(expected);
    checks["f_vector"] = c;
  }
  {
    std::vector<Int> expected(n + 1);
    Int total(0);
    for (int k = 0; k <= n; ++k) {
      expected[k] = binomial_int(n, k);
      total += expected[k];
    }
    Json c;
    c["status"] = status_json(fan.h_vector() == expected);
    c["expected"] = int_vector_json(expected);
    c["total"] = int_json(total);
    checks["h_vector"] = c;
  }

  // Intersection oracle: exhaustive at rank <= 3, seeded pair sample at 4.
  if (n <= 3) {
    long pairs = 0, mismatches = 0;
    for (size_t a = 0; a < fan.cones().size(); ++a)
      for (size_t b = a; b < fan.cones().size(); ++b) {
        ++pairs;
        if (!compare_intersection(fan, fan.cones()[a], fan.cones()[b]).agree) ++mismatches;
      }
    Json c;
    c["status"] = status_json(mismatches == 0);
    c["mode"] = "all_pairs";
    c["pairs"] = pairs;
    c["mismatches"] = mismatches;
    checks["intersection_oracle"] = c;
  } else if (n == 4) {
    SeededRng rng(cfg.seed);
    long pairs = 200, mismatches = 0;
    long ncones = static_cast<long>(fan.cones().size());
    for (long s = 0; s < pairs; ++s) {
      const ConeJK& a = fan.cones()[rng.uniform(0, ncones - 1)];
      const ConeJK& b = fan.cones()[rng.uniform(0, ncones - 1)];
      if (!compare_intersection(fan, a, b).agree) ++mismatches;
    }
    Json c;
    c["status"] = status_json(mismatches == 0);
    c["mode"] = "sampled";
    c["pairs"] = pairs;
    c["mismatches"] = mismatches;
    checks["intersection_oracle"] = c;
  } else {
    checks["intersection_oracle"] = skipped_json("rank > 4: double description guard");
  }

  {
    long codim1 = 0, bad = 0;
    for (const ConeJK& c : fan.cones()) {
      if (c.dim() != n - 1) continue;
      ++codim1;
      if (fan.adjacent_maximal_masks(c).size() != 2) ++bad;
    }
    Json c;
    c["status"] = status_json(bad == 0);
    c["codim_one_cones"] = codim1;
    checks["two_adjacency"] = c;
  }

  if (n <= 6) {
    CoverageReport cov = sample_coverage(fan, cfg.samples, cfg.seed);
    Json c;
    c["status"] = status_json(cov.pass);
    c["samples"] = cov.samples;
    c["covered"] = cov.covered;
    checks["coverage"] = c;
    // Control: deleting one maximal cone must strand points.
    CoverageReport ctrl = sample_coverage(fan, cfg.samples, cfg.seed, 0);
    Json k;
    k["status"] = status_json(ctrl.covered < ctrl.samples);
    k["uncovered"] = ctrl.samples - ctrl.covered;
    checks["coverage_control"] = k;
  } else {
    checks["coverage"] = skipped_json("rank > 6: sampling guard");
    checks["coverage_control"] = skipped_json("rank > 6: sampling guard");
  }

  {
    KleimanReport kr = kleiman_ample_check(fan);
    Json c;
    c["status"] = status_json(kr.pass);
    c["walls"] = kr.walls;
    c["codim_one_walls"] = kr.codim_one_walls;
    c["failures"] = kr.failures;
    Json w = Json::array();
    for (const std::string& s : kr.witnesses) w.push_back(s);
    c["witnesses"] = w;
    checks["wall_positivity_kleiman"] = c;
  }

  if (n <= 3) {
    Json walls = Json::array();
    for (const WallTriple& wt : enumerate_walls(fan)) {
      if (!wt.codim_one) continue;
      WallRelation rel = wall_relation(fan, wt);
      Json jw;
      jw["ell"] = wt.ell + 1;
      jw["J"] = one_based(wt.wall.J);
      jw["K"] = one_based(wt.wall.K);
      jw["x_ell"] = rational_json(rel.x_ell);
      Json jx;
      for (const auto& [j, v] : rel.x) jx[std::to_string(j + 1)] = rational_json(v);
      jw["x"] = jx;
      Json jy;
      for (const auto& [k, v] : rel.y) jy[std::to_string(k + 1)] = rational_json(v);
      jw["y"] = jy;
      jw["y_ell"] = rational_json(rel.y_ell);
      jw["relation_holds"] = rel.relation_holds;
      jw["closed_form_agrees"] = rel.closed_form_agrees;
      Json signs = Json::array();
      for (int i = 0; i < n; ++i) {
        SignReport sr = intersection_sign(fan, i, wt);
        Json js;
        js["i"] = i + 1;
        js["sign"] = sr.sign == IntersectionSign::positive      ? "positive"
                     : sr.sign == IntersectionSign::nonnegative ? "nonnegative"
                                                                : "zero";
        if (sr.value) js["value"] = rational_json(*sr.value);
        signs.push_back(js);
      }
      jw["signs"] = signs;
      walls.push_back(jw);
    }
    rep["wall_relations"] = walls;
  }

  {
    bool ok = true;
    long count = 0;
    for (std::uint32_t jmask = 0; jmask < (1u << n); ++jmask) {
      CartanMatrix sub = cm.subdiagram(mask_to_set(jmask, n));
      if (!sub.inverse_nonneg().second) ok = false;
      ++count;
    }
    Json c;
    c["status"] = status_json(ok);
    c["subdiagrams"] = count;
    checks["cartan_inverse_nonneg"] = c;
  }

  if (n <= 4) {
    std::vector<std::vector<int>> expected;
    for (int i = 0; i < n; ++i) expected.push_back({i, n + i});
    Json c;
    c["status"] = status_json(fan.primitive_collections() == expected);
    c["count"] = n;
    checks["primitive_collections"] = c;
  } else {
    checks["primitive_collections"] = skipped_json("rank > 4: subset exhaustion guard");
  }

  {
    CoxSequenceReport cox = verify_cox_sequence(cm);
    Json c;
    c["status"] = status_json(cox.pass);
    c["composite_zero"] = cox.composite_zero;
    c["first_injective"] = cox.first_injective;
    c["second_surjective"] = cox.second_surjective;
    c["kernel_equals_image"] = cox.kernel_equals_image;
    c["divisors_first"] = int_vector_json(cox.divisors_first);
    c["divisors_second"] = int_vector_json(cox.divisors_second);
    checks["cox_sequence"] = c;
  }

  rep["checks"] = checks;
  rep["result"] = report_passes(rep) ? "pass" : "fail";
  return rep;
}

struct CohRunConfig {
  std::string type_spec;
};

inline Json coh_report(const CohRunConfig& cfg) {
  CartanMatrix cm(cfg.type_spec);
  const int n = cm.rank();

  Json rep;
  rep["schema"] = 1;
  rep["command"] = "coh";
  rep["type"] = format_type_spec(cm.components());
  rep["rank"] = n;

  if (n > 6) {
    rep["checks"] = Json::object();
    rep["checks"]["rings"] = skipped_json("rank > 6: Groebner and dimension guard");
    rep["result"] = "pass";
    return rep;
  }

  FanSigma fan(cm);
  GradedQuotientRing rxy = presentation_xy(cm);
  GradedQuotientRing rx = presentation_x(cm);
  GradedDimensions dxy = graded_dimensions(rxy, n + 1);
  GradedDimensions dx = graded_dimensions(rx, n + 1);

  std::vector<Int> expected(n + 1);
  Int total(0);
  for (int k = 0; k <= n; ++k) {
    expected[k] = binomial_int(n, k);
    total += expected[k];
  }
  auto truncate = [&](const std::vector<Int>& v) {
    return std::vector<Int>(v.begin(), v.begin() + n + 1);
  };

  Json checks;
  {
    Json c;
    bool routes = dxy.routes_agree && dx.routes_agree;
    bool match = truncate(dxy.by_groebner) == expected && truncate(dx.by_groebner) == expected;
    bool above = dxy.by_groebner[n + 1] == 0 && dx.by_groebner[n + 1] == 0;
    c["status"] = status_json(routes && match && above);
    c["xy_groebner"] = int_vector_json(dxy.by_groebner);
    c["xy_rows"] = int_vector_json(dxy.by_rows);
    c["x_groebner"] = int_vector_json(dx.by_groebner);
    c["x_rows"] = int_vector_json(dx.by_rows);
    c["h_vector"] = int_vector_json(fan.h_vector());
    c["expected"] = int_vector_json(expected);
    c["total"] = int_json(total);
    checks["graded_dimensions"] = c;
    rep["graded_dims"] = int_vector_json(truncate(dx.by_groebner));
    rep["total"] = int_json(total);
  }
  {
    EliminationReport er = eliminate_y(cm, rxy, rx);
    Json c;
    c["status"] = status_json(er.pass);
    c["dims_agree"] = er.dims_agree;
    c["relations_map_to_zero"] = er.relations_map_to_zero;
    checks["eliminate_y"] = c;
    rep["presentations_agree"] = er.pass;
  }
  {
    bool all = true;
    for (int i = 0; i < n; ++i)
      if (!vanishing_check(rx, cm, i)) all = false;
    Json c;
    c["status"] = status_json(all);
    if (n >= 2) {
      // X_1 against the second Cartan linear form must survive.
      bool nonzero = !rx.normal_form(poly_var(n, 0) * cartan_linear_form(cm, 1)).is_zero();
      c["nonzero_control"] = status_json(nonzero);
    } else {
      c["nonzero_control"] = "skipped (rank 1)";
    }
    checks["euler_vanishing"] = c;
  }
  {
    bool empty_ok = true, full_ok = true;
    std::vector<int> full(n);
    for (int t = 0; t < n; ++t) full[t] = t;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> at_empty = equivariant_restriction(fan, {}, n + i);
      std::vector<Rat> ei(n, Rat(0));
      ei[i] = 1;
      if (at_empty != ei) empty_ok = false;
      std::vector<Rat> at_full = equivariant_restriction(fan, full, n + i);
      for (const Rat& v : at_full)
        if (v != 0) full_ok = false;
    }
    Json c;
    c["status"] = status_json(empty_ok && full_ok);
    c["empty_gives_simple_root"] = empty_ok;
    c["full_gives_zero"] = full_ok;
    checks["restriction_endpoints"] = c;
  }

  bool weyl_ok = weyl_order_formula(cm.components()) <= Int(51840);
  if (weyl_ok) {
    WeylGroup weyl(cm);
    bool consistent = true;
    Rat m0, n0;
    Json per = Json::array();
    for (int i = 0; i < n; ++i) {
      MnConstants mn = solve_mn_constants(fan, weyl, i);
      if (i == 0) {
        m0 = mn.m;
        n0 = mn.n;
      }
      if (!mn.consistent || mn.m != Rat(1) || mn.n != Rat(-1)) consistent = false;
      Json e;
      e["i"] = i + 1;
      e["m"] = rational_json(mn.m);
      e["n"] = rational_json(mn.n);
      e["consistent"] = mn.consistent;
      e["equations"] = mn.equations_checked;
      per.push_back(e);
    }
    Json c;
    c["status"] = status_json(consistent);
    c["mn"] = Json::array({rational_json(m0), rational_json(n0)});
    c["per_index"] = per;
    if (n >= 2) {
      MnConstants bad = solve_mn_constants(fan, weyl, 0, Rat(2));
      c["perturbed_control"] = status_json(!bad.consistent);
    } else {
      c["perturbed_control"] = "skipped (rank 1: the two equations cannot conflict)";
    }
    checks["mn_constants"] = c;
    rep["mn"] = c["mn"];

    if (n <= 4) {
      Json routes = Json::array();
      bool all_ok = true;
      for (int i = 0; i < n; ++i) {
        auto setA = zero_locus_bruhat_route(weyl, i);
        auto setB = zero_locus_root_route(weyl, i);
        bool disjoint = true;
        long unionsize = static_cast<long>(setA.size() + setB.size());
        for (const auto& a : setA)
          for (const auto& b : setB)
            if (a == b) disjoint = false;
        bool partition = disjoint && unionsize == (1L << n);
        if (!partition) all_ok = false;
        Json e;
        e["i"] = i + 1;
        Json ja = Json::array(), jb = Json::array();
        for (const auto& a : setA) ja.push_back(one_based(a));
        for (const auto& b : setB) jb.push_back(one_based(b));
        e["setA"] = ja;
        e["setB"] = jb;
        e["disjoint"] = disjoint;
        e["partition"] = partition;
        routes.push_back(e);
      }
      Json c2;
      c2["status"] = status_json(all_ok);
      c2["per_index"] = routes;
      c2["weyl_order"] = weyl.size();
      checks["fixed_point_routes"] = c2;
    } else {
      checks["fixed_point_routes"] = skipped_json("rank > 4");
    }
  } else {
    checks["mn_constants"] = skipped_json("Weyl order above generation bound");
    checks["fixed_point_routes"] = skipped_json("Weyl order above generation bound");
  }

  {
    bool all = true;
    Json entries = Json::array();
    for (const DictionaryEntry& e : degree2_dictionary(cm)) {
      if (!e.webs_match) all = false;
      Json je;
      je["i"] = e.index;
      je["x"] = e.x_alias;
      je["y"] = e.y_alias;
      je["toric"] = e.toric_relation;
      je["weight"] = e.weight_relation;
      je["webs_match"] = e.webs_match;
      entries.push_back(je);
    }
    Json c;
    c["status"] = status_json(all);
    c["entries"] = entries;
    checks["degree2_dictionary"] = c;
    rep["dictionary"] = entries;
  }

  rep["checks"] = checks;
  rep["result"] = report_passes(rep) ? "pass" : "fail";
  return rep;
}

struct PetersonRunConfig {
  int rank = 1;
  int samples = 100;
  std::uint64_t seed = 1;
};

inline Json peterson_report(const PetersonRunConfig& cfg) {
  const int n = cfg.rank;
  if (n != 1 && n != 2)
    throw std::invalid_argument("exact peterson report needs rank 1 or 2");

  Json rep;
  rep["schema"] = 1;
  rep["command"] = "peterson";
  rep["rank"] = n;
  rep["samples"] = cfg.samples;
  rep["seed"] = cfg.seed;

  std::vector<CellSample> cells = sample_peterson_cell(n, cfg.samples, cfg.seed);

  Json checks;
  {
    bool ok = true;
    if (n == 1) {
      for (const CellSample& s : cells) {
        const Rat& t = s.params[0];
        if (s.point.q(1) != t * t || s.point.delta(1) != 1) ok = false;
      }
      Mat<Rat> u3 = Mat<Rat>::identity(2);
      u3(1, 0) = 3;
      if (PetersonPoint(u3).q(1) != 9) ok = false;
    } else {
      for (const CellSample& s : cells) {
        const Rat& a = s.params[0];
        const Rat& c = s.params[1];
        if (s.point.q(1) * (a + c) != a * a * a) ok = false;
        if (s.point.q(2) * (a + c) != c * c * c) ok = false;
        if (s.point.delta(1) != 1 || s.point.delta(2) != 1) ok = false;
      }
    }
    Json c;
    c["status"] = status_json(ok);
    c["samples"] = static_cast<long>(cells.size());
    checks["closed_forms"] = c;
  }
  {
    long verified = 0, skipped = 0, mismatch = 0;
    for (const CellSample& s : cells) {
      KostantReport kr = kostant_check(s.point);
      if (kr.status == KostantStatus::verified) ++verified;
      if (kr.status == KostantStatus::skipped) ++skipped;
      if (kr.status == KostantStatus::mismatch) ++mismatch;
    }
    long attempted = static_cast<long>(cells.size());
    bool pass = mismatch == 0 && verified * 100 >= attempted * 95;
    Json c;
    c["status"] = status_json(pass);
    c["verified"] = verified;
    c["skipped"] = skipped;
    c["mismatch"] = mismatch;
    checks["kostant"] = c;
    rep["kostant_pass"] = pass;
  }
  {
    bool ok = true;
    for (const CellSample& s : cells) {
      QuotientPoint p = psi(s.point);  // throws on simultaneous vanishing
      if (!is_valid_cox_point(p)) ok = false;
    }
    for (std::uint32_t jm = 0; jm < (1u << n); ++jm) {
      PetersonPoint w(wJ_dot(n, mask_to_set(jm, n)));
      if (!w.in_peterson()) ok = false;
      if (!is_valid_cox_point(psi(w))) ok = false;
    }
    Json c;
    c["status"] = status_json(ok);
    checks["nonvanishing"] = c;
    rep["nonvanishing_pass"] = ok;
  }
  {
    SeededRng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    const int m = n + 1;
    bool dlaw = true, qlaw = true, tlaw = true, elaw = true;
    for (int trial = 0; trial < 100; ++trial) {
      Mat<Rat> g(m, m);
      do {
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) g(r, c) = rng.rational(50, 10);
      } while (det(g) == 0);
      Mat<Rat> b(m, m);
      for (int r = 0; r < m; ++r) {
        b(r, r) = rng.nonzero_rational(50, 10);
        for (int c = r + 1; c < m; ++c) b(r, c) = rng.rational(50, 10);
      }
      Rat z = rng.nonzero_rational(50, 10);
      for (int i = 1; i <= n; ++i) {
        if (!delta_right_law(g, b, i)) dlaw = false;
        if (!q_left_scaling_law(g, z, i)) tlaw = false;
      }
      const PetersonPoint& y = cells[trial % cells.size()].point;
      for (int i = 1; i <= n; ++i)
        if (!q_right_law(y.g(), b, i)) qlaw = false;
      if (!equivariance_check(y, z).pass) elaw = false;
    }
    Json c;
    c["status"] = status_json(dlaw && qlaw && tlaw && elaw);
    c["delta_right"] = status_json(dlaw);
    c["q_right_on_cell"] = status_json(qlaw);
    c["q_left_scaling"] = status_json(tlaw);
    c["psi_translate"] = status_json(elaw);
    checks["equivariance_laws"] = c;
  }
  {
    JacobianReport jr = jacobian_rank_check(n, cfg.samples, cfg.seed ^ 0xda942042e4dd58b5ULL);
    Json c;
    c["status"] = status_json(!jr.inconclusive);
    c["samples"] = jr.samples;
    c["witnesses"] = jr.witnesses;
    checks["jacobian"] = c;
    rep["jacobian_rank"] = jr.inconclusive ? 0 : n;
  }
  {
    Json fps = Json::array();
    bool all = true;
    for (std::uint32_t jm = 0; jm < (1u << n); ++jm) {
      std::vector<int> J = mask_to_set(jm, n);
      bool ok = fixed_point_image_check(n, J);
      if (!ok) all = false;
      Json e;
      e["J"] = one_based(J);
      e["pattern_ok"] = ok;
      fps.push_back(e);
    }
    Json c;
    c["status"] = status_json(all);
    checks["fixed_point_images"] = c;
    rep["fixed_points"] = fps;
  }
  {
    FiberProbe fp = n == 1 ? fiber_probe(1, Rat(4), Rat(0)) : fiber_probe(2, Rat(2), Rat(3));
    Json c;
    c["note"] = "observational only, no asserted value";
    c["equation_degree"] = fp.equation_degree;
    c["distinct_solutions"] = fp.distinct_solutions;
    c["reference_count"] = fp.reference_count;
    rep["fiber_probe"] = c;
  }

  rep["checks"] = checks;
  rep["result"] = report_passes(rep) ? "pass" : "fail";
  return rep;
}

// Flat text rendering of a report for --format text.
inline void text_lines(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      text_lines(it.value(), key, out);
    }
  } else if (j.is_array()) {
    out += prefix + ": " + j.dump() + "\n";
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

inline std::string report_to_text(const Json& j) {
  std::string out;
  text_lines(j, "", out);
  return out;
}

}  // namespace cartoric
