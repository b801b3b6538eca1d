#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvmono/cartan.hpp"
#include "lvmono/homology.hpp"
#include "lvmono/lie.hpp"
#include "lvmono/linalg.hpp"
#include "lvmono/rep.hpp"
#include "lvmono/serialize.hpp"
#include "lvmono/version.hpp"

namespace lvmono {

/// Fixed expected values for p = 2, against which the constructions are
/// regression-checked entry-for-entry.
namespace p2ref {

inline Matrix omega() {
  return Matrix{{0, -1, 1, 0, 1, 1},
                {1, 0, 0, 1, 1, 1},
                {-1, 0, 0, 0, 0, 0},
                {0, -1, 0, 0, 0, 0},
                {-1, -1, 0, 0, 0, 0},
                {-1, -1, 0, 0, 0, 0}};
}

inline Matrix m1() {
  return Matrix{{1, -1, 1, 0, 1, 1},
                {0, 1, 0, 0, 0, 0},
                {0, 0, 1, 0, 0, 0},
                {0, 0, 0, 1, 0, 0},
                {0, 0, 0, 0, 1, 0},
                {0, 0, 0, 0, 0, 1}};
}

inline Matrix m2() {
  return Matrix{{0, 1, 0, 0, 0, 0},
                {1, 0, 0, 0, 0, 0},
                {0, -1, 0, 1, 0, 0},
                {0, 0, 1, 0, 0, 0},
                {0, -1, 0, 0, 1, 0},
                {0, -1, 0, 0, 0, 1}};
}

inline Matrix m1_reduced() {
  return Matrix{{1, -1, 3, 2}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

inline Matrix m2_reduced() {
  return Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, -1, 0, 1}, {0, 0, 1, 0}};
}

inline Matrix gen_a() {
  return Matrix{{0, -1, 3, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

inline Matrix gen_b() {
  return Matrix{{0, 0, 0, 0}, {1, 0, 2, 3}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

inline Matrix gen_c() {
  return Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
}

/// Zero-cycle kernel generators: delta13 - delta23 and
/// delta13 + delta23 - 2 delta12_0 - 2 delta12_1.
inline std::vector<Matrix> kernel_generators() {
  Matrix v1(6, 1), v2(6, 1);
  v1(4, 0) = 1;
  v1(5, 0) = -1;
  v2(2, 0) = -2;
  v2(3, 0) = -2;
  v2(4, 0) = 1;
  v2(5, 0) = 1;
  return {v1, v2};
}

}  // namespace p2ref

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// One full verification run: the model, its reduction, the Lie closure and
/// derived quantities, plus the list of exact checks performed.
struct VerifyRun {
  int p = 0;
  int word_cap = 0;
  MonodromyModel model;
  ReducedRep rep;
  std::vector<LieSeed> seeds;
  LieAlgebraBasis closure;
  Polynomial char_m2;
  Polynomial min_m2;
  Polynomial germ_char;
  SymplecticVerdict verdict = SymplecticVerdict::NotInSp;
  std::size_t pf_degree = 0;
  std::optional<RootDecomposition> cartan;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void add_check(VerifyRun& run, const std::string& name, bool pass,
                      const std::string& detail = "") {
  run.checks.push_back({name, pass, detail});
}

/// Detail string for an exact matrix comparison; empty when equal so that
/// passing reports stay compact.
inline std::string compare_detail(const Matrix& expected, const Matrix& computed) {
  if (expected == computed) return "";
  return "expected:\n" + expected.str() + "computed:\n" + computed.str();
}

inline bool spans_equal(const std::vector<Matrix>& a, const LieAlgebraBasis& b) {
  if (a.empty()) return b.dim() == 0;
  SpanTracker ta(a.front().rows() * a.front().cols());
  for (const Matrix& m : a) ta.insert(m);
  if (ta.size() != b.dim()) return false;
  for (const Matrix& m : b.elements)
    if (!ta.contains(m)) return false;
  for (const Matrix& m : a)
    if (!b.contains(m)) return false;
  return true;
}

}  // namespace detail

/// Runs the whole pipeline for a given p and checks every exact identity it
/// is built to satisfy; p = 2 additionally gets the fixed reference
/// comparisons, the Cartan/root decomposition and the closure-dimension
/// target. Throws only on internal construction failures; check failures
/// are reported in the returned run.
inline VerifyRun run_verification(int p, int word_cap = 3,
                                  const Deadline& deadline = Deadline::none()) {
  if (p < 1) throw std::invalid_argument("run_verification: p must be >= 1");
  if (word_cap < 1) throw std::invalid_argument("run_verification: word_cap must be >= 1");

  VerifyRun run;
  run.p = p;
  run.word_cap = word_cap;
  run.model = make_model(p);
  const std::size_t n = run.model.basis.size();
  const std::size_t two_p = static_cast<std::size_t>(2 * p);

  // --- intersection form -------------------------------------------------
  detail::add_check(run, "omega_antisymmetric",
                    run.model.omega.transpose() == -run.model.omega);
  {
    const RankKernel rk = rank_and_kernel(run.model.omega);
    std::ostringstream os;
    os << "rank " << rk.rank << ", kernel dim " << rk.kernel.size();
    detail::add_check(run, "omega_rank_and_kernel",
                      rk.rank == two_p && rk.kernel.size() == 2, os.str());
  }
  if (p == 2)
    detail::add_check(run, "omega_matches_reference",
                      run.model.omega == p2ref::omega(),
                      detail::compare_detail(p2ref::omega(), run.model.omega));

  // --- monodromy operators ------------------------------------------------
  detail::add_check(run, "m1_preserves_omega",
                    run.model.m1.transpose() * run.model.omega * run.model.m1 ==
                        run.model.omega);
  detail::add_check(run, "m2_preserves_omega",
                    run.model.m2.transpose() * run.model.omega * run.model.m2 ==
                        run.model.omega);
  detail::add_check(
      run, "m1_is_transvection",
      (run.model.m1 - Matrix::identity(n)).pow(2).is_zero() &&
          determinant(run.model.m1) == Rational(1));
  if (p == 2) {
    detail::add_check(run, "m1_matches_reference", run.model.m1 == p2ref::m1(),
                      detail::compare_detail(p2ref::m1(), run.model.m1));
    detail::add_check(run, "m2_matches_reference", run.model.m2 == p2ref::m2(),
                      detail::compare_detail(p2ref::m2(), run.model.m2));
  }

  // --- characteristic / minimal polynomials -------------------------------
  run.char_m2 = char_poly(run.model.m2);
  run.min_m2 = min_poly(run.model.m2);
  run.germ_char = char_poly(germ_monodromy(p));
  const Polynomial t_minus_1 = Polynomial({-1, 1});
  const Polynomial tp_minus_1 = Polynomial::power_minus_one(static_cast<std::size_t>(p));
  const Polynomial expected_char = t_minus_1.pow(2) * tp_minus_1.pow(2);
  const Polynomial expected_min = tp_minus_1.pow(2);
  const Polynomial annihilating_product = t_minus_1 * tp_minus_1.pow(2);
  detail::add_check(run, "char_poly_m2", run.char_m2 == expected_char,
                    "computed " + run.char_m2.str() + "; expected " +
                        expected_char.str());
  detail::add_check(run, "min_poly_m2", run.min_m2 == expected_min,
                    "computed " + run.min_m2.str() + "; expected " +
                        expected_min.str());
  detail::add_check(
      run, "min_poly_divides_annihilating_product",
      eval(annihilating_product, run.model.m2).is_zero() &&
          run.min_m2.divides(annihilating_product),
      "(t - 1)(t^p - 1)^2 annihilates M2 and is a multiple of the minimal polynomial");
  detail::add_check(run, "germ_char_poly",
                    run.germ_char == t_minus_1 * tp_minus_1,
                    "computed " + run.germ_char.str() + "; expected " +
                        (t_minus_1 * tp_minus_1).str());

  // --- orbit of delta_0 under M2 ------------------------------------------
  {
    const std::vector<Matrix> orbit =
        orbit_span(run.model.m2, Matrix::unit_column(n, run.model.basis.delta(0)));
    SpanTracker span(n);
    for (const Matrix& v : orbit) span.insert(v);
    bool contains_mixed = true;
    for (int i = 0; i < p; ++i) {
      Matrix w(n, 1);
      w(run.model.basis.delta12(i), 0) = 1;
      w(run.model.basis.delta13(), 0) = 1;
      w(run.model.basis.delta23(), 0) = 1;
      contains_mixed = contains_mixed && span.contains(w);
    }
    std::ostringstream os;
    os << "dimension " << orbit.size();
    detail::add_check(run, "orbit_of_delta0",
                      orbit.size() == two_p && contains_mixed, os.str());
  }

  // --- reduction -----------------------------------------------------------
  run.rep = reduce(run.model);
  {
    bool fixed = run.rep.kernel_basis.size() == 2;
    for (const Matrix& v : run.rep.kernel_basis)
      fixed = fixed && (run.model.omega * v).is_zero() &&
              run.model.m1 * v == v && run.model.m2 * v == v;
    detail::add_check(run, "kernel_pointwise_fixed", fixed);
  }
  detail::add_check(run, "kernel_plus_reduced_dims",
                    run.rep.kernel_basis.size() + run.rep.dim == n);
  detail::add_check(run, "j_form_rank", rank(run.rep.j_form) == run.rep.dim);
  detail::add_check(
      run, "reduced_operators_symplectic",
      run.rep.m1_red.transpose() * run.rep.j_form * run.rep.m1_red == run.rep.j_form &&
          run.rep.m2_red.transpose() * run.rep.j_form * run.rep.m2_red == run.rep.j_form);
  if (p == 2) {
    detail::add_check(run, "reduced_matrices_match_reference",
                      run.rep.m1_red == p2ref::m1_reduced() &&
                          run.rep.m2_red == p2ref::m2_reduced(),
                      detail::compare_detail(p2ref::m1_reduced(), run.rep.m1_red) +
                          detail::compare_detail(p2ref::m2_reduced(), run.rep.m2_red));
    SpanTracker kernel_span(n);
    for (const Matrix& v : run.rep.kernel_basis) kernel_span.insert(v);
    bool contains = true;
    for (const Matrix& v : p2ref::kernel_generators())
      contains = contains && kernel_span.contains(v);
    detail::add_check(run, "kernel_contains_reference_generators", contains);
  }

  // --- block structure in the complement + kernel basis --------------------
  {
    std::vector<Matrix> cols = run.rep.lift_basis;
    cols.insert(cols.end(), run.rep.kernel_basis.begin(), run.rep.kernel_basis.end());
    const Matrix c = Matrix::from_columns(cols);
    const Matrix c_inv = inverse(c);
    bool block_ok = true;
    const std::vector<std::pair<const Matrix*, const Matrix*>> pairs = {
        {&run.model.m1, &run.rep.m1_red}, {&run.model.m2, &run.rep.m2_red}};
    for (const auto& [full, reduced] : pairs) {
      const Matrix conj = c_inv * (*full) * c;
      for (std::size_t i = 0; i < n && block_ok; ++i)
        for (std::size_t j = 0; j < n && block_ok; ++j) {
          const bool i_top = i < two_p, j_top = j < two_p;
          Rational expected;
          if (i_top && j_top) expected = (*reduced)(i, j);
          else if (!i_top && !j_top) expected = (i == j) ? 1 : 0;
          else expected = 0;
          block_ok = conj(i, j) == expected;
        }
    }
    detail::add_check(run, "conjugated_block_structure", block_ok);
  }

  // --- Lie closure ----------------------------------------------------------
  run.seeds = seed_generators(run.rep, word_cap, deadline);
  run.closure = bracket_closure(run.seeds, deadline);
  run.verdict = identify_symplectic(run.closure, run.rep.j_form);
  detail::add_check(run, "closure_contained_in_sp",
                    run.verdict != SymplecticVerdict::NotInSp,
                    "verdict " + to_string(run.verdict));
  {
    std::ostringstream os;
    os << "dimension " << run.closure.dim() << " (full sp dimension "
       << sp_dimension(run.rep.dim) << ")";
    if (p == 1)
      detail::add_check(run, "closure_dimension",
                        run.closure.dim() == sp_dimension(run.rep.dim) &&
                            run.verdict == SymplecticVerdict::EqualsSp,
                        os.str());
    else if (p == 2)
      detail::add_check(run, "closure_dimension", run.closure.dim() == 10 &&
                            run.verdict == SymplecticVerdict::EqualsSp,
                        os.str());
    else
      detail::add_check(run, "closure_dimension_reported", true, os.str());
  }
  {
    bool stable = true;
    const Matrix m1_inv = inverse(run.rep.m1_red);
    const Matrix m2_inv = inverse(run.rep.m2_red);
    for (const Matrix& x : run.closure.elements) {
      stable = stable && run.closure.contains(run.rep.m1_red * x * m1_inv) &&
               run.closure.contains(run.rep.m2_red * x * m2_inv);
    }
    detail::add_check(run, "closure_conjugation_stable", stable);
  }

  // --- p = 2 generators, sl2 relations, Cartan decomposition ---------------
  if (p == 2) {
    const Matrix a = unipotent_log(run.rep.m1_red);
    const Matrix c_gen = unipotent_log(run.rep.m2_red.pow(2));
    const Matrix b = unipotent_log(run.rep.m2_red * run.rep.m1_red *
                                   inverse(run.rep.m2_red));
    detail::add_check(run, "generators_match_reference",
                      a == p2ref::gen_a() && b == p2ref::gen_b() &&
                          c_gen == p2ref::gen_c(),
                      detail::compare_detail(p2ref::gen_a(), a) +
                          detail::compare_detail(p2ref::gen_b(), b) +
                          detail::compare_detail(p2ref::gen_c(), c_gen));
    bool found_a = false, found_b = false, found_c = false;
    for (const LieSeed& s : run.seeds) {
      found_a = found_a || s.value == a;
      found_b = found_b || s.value == b;
      found_c = found_c || s.value == c_gen;
    }
    detail::add_check(run, "seeds_contain_generators", found_a && found_b && found_c);
    const Matrix h = bracket(a, b);
    detail::add_check(run, "sl2_relations",
                      bracket(h, a) == a * Rational(-2) &&
                          bracket(h, b) == b * Rational(2));
    try {
      run.cartan = build_root_decomposition(a, b, c_gen);
      const bool spans = detail::spans_equal(run.cartan->all_elements(), run.closure);
      const bool independent =
          span_basis(run.cartan->all_elements()).size() == 10;
      detail::add_check(run, "root_decomposition", spans && independent,
                        "10 independent elements spanning the closure");
    } catch (const std::runtime_error& e) {
      detail::add_check(run, "root_decomposition", false, e.what());
    }
  }

  // --- minimal degree of the period differential equation ------------------
  run.pf_degree =
      minimal_pf_degree(run.rep, run.closure, Matrix::unit_column(run.rep.dim, 0));
  {
    std::ostringstream os;
    os << "degree " << run.pf_degree;
    if (p == 1)
      detail::add_check(run, "pf_degree", run.pf_degree == 2, os.str());
    else if (p == 2)
      detail::add_check(run, "pf_degree", run.pf_degree == 4, os.str());
    else
      detail::add_check(run, "pf_degree_reported", true, os.str());
  }

  // --- notes ----------------------------------------------------------------
  run.notes.push_back(
      "pf_degree assumes no period integral vanishes identically on a nonzero "
      "invariant subspace (V1^0 = 0)");
  run.notes.push_back(
      "germ characteristic polynomial is reported monic, det(tI - M) "
      "convention; a determinant expansion det(M - tI) differs by the sign "
      "(-1)^(p+1)");
  run.notes.push_back(
      "minimal polynomial of M2 is (t^p - 1)^2; the product "
      "(t - 1)(t^p - 1)^2 annihilates M2 but is not minimal");
  run.notes.push_back(
      "intersection form on the 2p+2 cycle space has rank 2p with a "
      "2-dimensional kernel fixed pointwise by the monodromy");
  if (p == 2) {
    run.notes.push_back(
        "reduced complement basis: delta_0, delta_1, "
        "delta12_0 + delta13 + delta23, delta12_1 + delta13 + delta23");
    run.notes.push_back(
        "root values fix the functional pair at (1, -5) and (0, 5) on "
        "(H1, H2); the value 5 belongs to the second functional");
  }
  return run;
}

/// Machine-readable record of one verification run. Round-trips through
/// JSON losslessly (rationals as "num/den" strings).
struct RunReport {
  std::string version;
  int p = 0;
  int word_cap = 0;
  MonodromyModel model;
  ReducedRep reduced;
  std::string char_poly_m2;
  std::string min_poly_m2;
  std::string germ_char_poly;
  std::size_t closure_dim = 0;
  std::vector<std::string> seed_provenance;
  std::vector<std::string> closure_provenance;
  std::string verdict;
  std::size_t pf_degree = 0;
  std::optional<RootDecomposition> cartan;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

inline RunReport make_report(const VerifyRun& run) {
  RunReport r;
  r.version = kVersion;
  r.p = run.p;
  r.word_cap = run.word_cap;
  r.model = run.model;
  r.reduced = run.rep;
  r.char_poly_m2 = run.char_m2.str();
  r.min_poly_m2 = run.min_m2.str();
  r.germ_char_poly = run.germ_char.str();
  r.closure_dim = run.closure.dim();
  for (const LieSeed& s : run.seeds) r.seed_provenance.push_back(s.provenance);
  r.closure_provenance = run.closure.provenance;
  r.verdict = to_string(run.verdict);
  r.pf_degree = run.pf_degree;
  r.cartan = run.cartan;
  r.checks = run.checks;
  r.notes = run.notes;
  return r;
}

inline Json report_to_json(const RunReport& r) {
  Json j;
  j["version"] = r.version;
  j["p"] = r.p;
  j["word_cap"] = r.word_cap;
  j["model"] = model_to_json(r.model);
  j["reduced"] = reduced_to_json(r.reduced);
  Json polys;
  polys["char_poly_m2"] = r.char_poly_m2;
  polys["min_poly_m2"] = r.min_poly_m2;
  polys["germ_char_poly"] = r.germ_char_poly;
  j["polynomials"] = std::move(polys);
  Json closure;
  closure["dim"] = r.closure_dim;
  closure["seed_provenance"] = r.seed_provenance;
  closure["basis_provenance"] = r.closure_provenance;
  j["closure"] = std::move(closure);
  j["verdict"] = r.verdict;
  j["pf_degree"] = r.pf_degree;
  j["cartan"] = r.cartan ? cartan_to_json(*r.cartan) : Json(nullptr);
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  return j;
}

inline RunReport report_from_json(const Json& j) {
  RunReport r;
  r.version = j.at("version").get<std::string>();
  r.p = j.at("p").get<int>();
  r.word_cap = j.at("word_cap").get<int>();
  r.model = model_from_json(j.at("model"));
  r.reduced = reduced_from_json(j.at("reduced"));
  r.char_poly_m2 = j.at("polynomials").at("char_poly_m2").get<std::string>();
  r.min_poly_m2 = j.at("polynomials").at("min_poly_m2").get<std::string>();
  r.germ_char_poly = j.at("polynomials").at("germ_char_poly").get<std::string>();
  r.closure_dim = j.at("closure").at("dim").get<std::size_t>();
  for (const auto& s : j.at("closure").at("seed_provenance"))
    r.seed_provenance.push_back(s.get<std::string>());
  for (const auto& s : j.at("closure").at("basis_provenance"))
    r.closure_provenance.push_back(s.get<std::string>());
  r.verdict = j.at("verdict").get<std::string>();
  r.pf_degree = j.at("pf_degree").get<std::size_t>();
  if (!j.at("cartan").is_null()) r.cartan = cartan_from_json(j.at("cartan"));
  for (const auto& cj : j.at("checks")) {
    Check c;
    c.name = cj.at("name").get<std::string>();
    c.pass = cj.at("pass").get<bool>();
    c.detail = cj.at("detail").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  for (const auto& s : j.at("notes")) r.notes.push_back(s.get<std::string>());
  return r;
}

/// One row of the conjecture scan over p.
struct ScanRow {
  int p = 0;
  bool complete = false;
  std::size_t seed_count = 0;
  std::size_t closure_dim = 0;       // at word_cap
  std::size_t closure_dim_next = 0;  // at word_cap + 1
  std::size_t sp_target = 0;         // p(2p+1)
  std::string verdict;
  bool saturated = false;  // dimension unchanged when the cap grew by one
  std::string error;       // set when incomplete
};

/// Computes the closure dimension for p = 1..max_p at word_cap and
/// word_cap + 1, reporting evidence only: dimension vs the full symplectic
/// dimension, the containment verdict and a saturation flag. A run that
/// exceeds per_run_seconds (0 = unlimited) is marked incomplete and the
/// scan continues.
inline std::vector<ScanRow> run_scan(int max_p, int word_cap = 3,
                                     double per_run_seconds = 0.0) {
  if (max_p < 1) throw std::invalid_argument("run_scan: max_p must be >= 1");
  if (word_cap < 1) throw std::invalid_argument("run_scan: word_cap must be >= 1");
  std::vector<ScanRow> rows;
  for (int p = 1; p <= max_p; ++p) {
    ScanRow row;
    row.p = p;
    row.sp_target = sp_dimension(static_cast<std::size_t>(2 * p));
    const Deadline deadline = per_run_seconds > 0
                                  ? Deadline::after_seconds(per_run_seconds)
                                  : Deadline::none();
    try {
      const ReducedRep rep = reduce(make_model(p));
      const std::vector<LieSeed> seeds = seed_generators(rep, word_cap, deadline);
      const LieAlgebraBasis closure = bracket_closure(seeds, deadline);
      const std::vector<LieSeed> seeds_next =
          seed_generators(rep, word_cap + 1, deadline);
      const LieAlgebraBasis closure_next = bracket_closure(seeds_next, deadline);
      row.seed_count = seeds.size();
      row.closure_dim = closure.dim();
      row.closure_dim_next = closure_next.dim();
      row.saturated = closure.dim() == closure_next.dim();
      row.verdict = to_string(identify_symplectic(closure, rep.j_form));
      row.complete = true;
    } catch (const TimeCapExceeded& e) {
      row.complete = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json scan_to_json(const std::vector<ScanRow>& rows, int word_cap) {
  Json j;
  j["version"] = kVersion;
  j["word_cap"] = word_cap;
  Json runs = Json::array();
  for (const ScanRow& r : rows) {
    Json rj;
    rj["p"] = r.p;
    rj["complete"] = r.complete;
    rj["seed_count"] = r.seed_count;
    rj["closure_dim"] = r.closure_dim;
    rj["closure_dim_next_cap"] = r.closure_dim_next;
    rj["sp_target"] = r.sp_target;
    rj["verdict"] = r.verdict;
    rj["saturated"] = r.saturated;
    rj["error"] = r.error;
    runs.push_back(std::move(rj));
  }
  j["runs"] = std::move(runs);
  return j;
}

}  // namespace lvmono
