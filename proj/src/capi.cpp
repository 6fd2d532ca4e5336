// C boundary: the JSON command gateway driving every operation, plus typed
// opaque handles for the core algebra objects.  No exception escapes this
// translation unit; every failure becomes a status code and a per-thread
// message.

#include <chrono>
#include <climits>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <string>
#include <utility>
#include <vector>

#include "isopar.h"

#include "json.hpp"

#include "isopar/clifford.hpp"
#include "isopar/error.hpp"
#include "isopar/fkm.hpp"
#include "isopar/ideal.hpp"
#include "isopar/io.hpp"
#include "isopar/parse.hpp"
#include "isopar/regseq.hpp"

using json = nlohmann::json;  // std::map-backed: object keys print sorted

namespace {

using namespace isopar;

thread_local std::string g_last_error;

void set_err(const std::string& msg) { g_last_error = msg; }

char* dup_cstr(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

isopar_status status_of(const Error& e) {
  return e.kind() == Error::Kind::budget ? ISOPAR_BUDGET : ISOPAR_BAD_REQUEST;
}

std::string utc_now() {
  std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ------------------------------------------------------- JSON helpers ----

Budget budget_from(const json& req) {
  Budget b;
  if (req.contains("budget")) {
    const json& jb = req.at("budget");
    if (jb.contains("max_basis")) b.max_basis = jb.at("max_basis").get<long>();
    if (jb.contains("max_degree"))
      b.max_degree = jb.at("max_degree").get<long>();
    if (jb.contains("max_pairs")) b.max_pairs = jb.at("max_pairs").get<long>();
    if (jb.contains("max_points"))
      b.max_points = jb.at("max_points").get<long>();
  }
  return b;
}

json budget_json(const Budget& b) {
  return json{{"max_basis", b.max_basis},
              {"max_degree", b.max_degree},
              {"max_pairs", b.max_pairs},
              {"max_points", b.max_points}};
}

MonomialOrder order_from(const json& req) {
  std::string o = req.value("order", std::string("grevlex"));
  if (o == "grevlex") return MonomialOrder::grevlex();
  if (o == "lex") return MonomialOrder::lex();
  fail(Error::Kind::parse, "unknown monomial order '" + o + "'");
}

json poly_list_json(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

json svec_json(const SVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

json mat_json(const Mat<Scalar>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json polymatrix_json(const PolyMatrix& r) {
  json rows = json::array();
  for (const auto& row : r) {
    json jr = json::array();
    for (const auto& p : row) jr.push_back(p.str());
    rows.push_back(std::move(jr));
  }
  return rows;
}

json ring_json(const RingPtr& r) {
  json a = json::array();
  for (const auto& v : r->vars) a.push_back(v);
  return a;
}

json frame_json(const FramedPoint& fp) {
  json j;
  j["x"] = svec_json(fp.x);
  json n = json::array(), X = json::array(), Y = json::array(),
       Z = json::array();
  for (const auto& v : fp.n) n.push_back(svec_json(v));
  for (const auto& v : fp.X) X.push_back(svec_json(v));
  for (const auto& v : fp.Y) Y.push_back(svec_json(v));
  for (const auto& v : fp.Z) Z.push_back(svec_json(v));
  j["normals"] = std::move(n);
  j["X"] = std::move(X);
  j["Y"] = std::move(Y);
  j["Z"] = std::move(Z);
  j["quadext_d"] = fp.quadext_d;
  return j;
}

// ---------------------------------------------------- input assembly ----

// Loads the ideal file named by req[key] and records its canonical content.
IdealFile need_ideal(const json& req, const char* key, json& inputs) {
  std::string path = req.at(key).get<std::string>();
  IdealFile f = load_ideal_file(path);
  json in;
  in["file"] = path;
  in["generators"] = poly_list_json(f.gens);
  in["ring"] = ring_json(f.ring);
  in["scalar"] =
      f.quadext_d ? "quadext:" + std::to_string(f.quadext_d) : "rational";
  inputs[key] = std::move(in);
  return f;
}

// Builds a quartic family from (m, k) or loads one from a file.
CMData cm_from(const json& req, json& inputs) {
  if (req.contains("m") && req.contains("k")) {
    int m = req.at("m").get<int>();
    int k = req.at("k").get<int>();
    inputs["family"] = json{{"k", k}, {"m", m}, {"source", "clifford"}};
    return build_fkm(build_clifford_system(m, k));
  }
  if (req.contains("file")) {
    std::string path = req.at("file").get<std::string>();
    CMData cm = load_cm_file(path);
    inputs["family"] = json{{"file", path},
                            {"g", cm.g},
                            {"m1", cm.m1},
                            {"m2", cm.m2},
                            {"polynomial", cm.F.str()},
                            {"provenance", cm.provenance},
                            {"ring", ring_json(cm.ring)},
                            {"source", "file"}};
    return cm;
  }
  fail(Error::Kind::parse,
       "family selection needs either m and k or a file path");
}

// The framed point to work at: an explicit imported point when given,
// otherwise the first hit of the deterministic focal search.
FramedPoint point_for(const CMData& cm, const json& req, json& inputs) {
  if (req.contains("point")) {
    std::string text = req.at("point").get<std::string>();
    inputs["point"] = text;
    return frame_imported_point(cm, parse_rational_vector(text));
  }
  inputs["point"] = "first focal hit";
  return find_focal_point(cm);
}

json identity_checks_json(const IdentityReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["name"] = c.name;
    jc["ok"] = c.ok;
    if (!c.ok) jc["residual"] = c.residual.str();
    checks.push_back(std::move(jc));
  }
  return checks;
}

json stages_json(const std::vector<StageRecord>& stages) {
  json a = json::array();
  for (const auto& s : stages) {
    json js;
    js["stage"] = s.stage;
    js["proper"] = s.proper;
    js["colon_stable"] = s.colon_stable;
    js["dim_v"] = s.dim_v ? json(*s.dim_v) : json(nullptr);
    js["dim_j"] = s.dim_j ? json(*s.dim_j) : json(nullptr);
    js["prime_certified"] = s.prime_certified;
    a.push_back(std::move(js));
  }
  return a;
}

json certificate_json(const RegSeqCertificate& cert) {
  json r;
  switch (cert.verdict) {
    case Verdict::regular: r["verdict"] = "regular"; break;
    case Verdict::not_regular: r["verdict"] = "not-regular"; break;
    case Verdict::inconclusive: r["verdict"] = "inconclusive"; break;
  }
  r["pipeline"] = cert.pipeline;
  r["stages"] = stages_json(cert.stages);
  if (cert.witness) {
    r["witness"] = json{
        {"factor", cert.witness->factor.str()},
        {"kind", cert.witness->kind == Witness::Kind::zero_divisor
                     ? "zero-divisor"
                     : "empty-variety"},
        {"stage", cert.witness->stage}};
  }
  if (!cert.note.empty()) r["note"] = cert.note;
  return r;
}

std::vector<CScalar> lambda_from(const json& req) {
  std::vector<CScalar> lam;
  for (const json& comp : req.at("lambda")) {
    if (!comp.is_array() || comp.size() != 2)
      fail(Error::Kind::parse,
           "each pencil coefficient is a [re, im] pair of rationals");
    try {
      mpq_class re(comp[0].get<std::string>());
      mpq_class im(comp[1].get<std::string>());
      re.canonicalize();
      im.canonicalize();
      lam.emplace_back(Scalar(re), Scalar(im));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Error::Kind::parse, "bad rational in pencil coefficient");
    }
  }
  return lam;
}

json lambda_json(const std::vector<CScalar>& lam) {
  json a = json::array();
  for (const auto& l : lam) a.push_back(json::array({l.re.str(), l.im.str()}));
  return a;
}

json stratum_json(const PencilStratum& st) {
  json r;
  r["lambda"] = lambda_json(st.lambda);
  r["kernel_dim"] = st.kernel_dim;
  r["r_lambda"] = st.r_lambda;
  r["hyperquadric_member"] = st.hyperquadric_member;
  r["real_or_imaginary"] = st.real_or_imaginary;
  r["mu_lambda"] = st.mu_lambda ? json(st.mu_lambda->str()) : json(nullptr);
  r["branch_formula_ok"] = st.branch_formula_ok;
  return r;
}

json codim_json(const CodimReport& cr) {
  json r;
  r["k"] = cr.k;
  r["dim_v"] = cr.dim_v ? json(*cr.dim_v) : json(nullptr);
  r["dim_j"] = cr.dim_j ? json(*cr.dim_j) : json(nullptr);
  r["lower_bound_ok"] = cr.lower_bound_ok;
  r["crucial_ok"] = cr.crucial_ok;
  r["cod2_ok"] = cr.cod2_ok;
  r["hyp_m2_ge_2"] = cr.hyp_m2_ge_2;
  r["hyp_m2_ge_2m1_minus_1"] = cr.hyp_m2_ge_2m1_minus_1;
  return r;
}

// The r_ab section shared by fkm.rab and fkm.verify-all: extraction flags,
// and the Clifford-like relations when the frame change is usable.
json rab_json(const ExpansionData& ed, bool* all_ok) {
  json r;
  bool vanishing = true;
  for (const auto& qa : ed.q)
    if (!qa.is_zero()) vanishing = false;
  RabData rab = extract_rab(ed);
  r["solution_space_dim"] = rab.solution_space_dim;
  r["z_only_ok"] = rab.z_only_ok;
  r["f_orthogonal"] = rab.f_orthogonal;
  r["orthogonality_ok"] = rab.orthogonality_ok;
  r["r"] = polymatrix_json(rab.r);
  r["f"] = mat_json(rab.f);
  r["cubic_form_vanishes"] = vanishing;
  bool ok = rab.z_only_ok && rab.f_orthogonal && rab.orthogonality_ok;
  if (rab.f_orthogonal) {
    CliffordLikeReport cl = check_cliffordlike(ed, rab);
    r["cliffordlike"] = json{{"frame_change", mat_json(cl.frame_change)},
                             {"identity_frame", cl.identity_frame},
                             {"relation1", cl.relation1},
                             {"relation2", cl.relation2},
                             {"relation3", cl.relation3}};
    ok = ok && cl.ok();
  } else {
    r["cliffordlike"] = "not-applicable";
    ok = false;
  }
  *all_ok = ok;
  return r;
}

// --------------------------------------------------------- dispatcher ----

json run_op(const std::string& op, const json& req, json& inputs,
            int& status) {
  const Budget budget = budget_from(req);

  if (op == "poly.canon") {
    std::vector<std::string> names;
    for (const json& n : req.at("ring")) names.push_back(n.get<std::string>());
    long d = req.value("scalar_d", 0L);
    RingPtr ring = Ring::make(names);
    std::string text = req.at("text").get<std::string>();
    inputs["ring"] = req.at("ring");
    inputs["scalar"] = d ? "quadext:" + std::to_string(d) : "rational";
    inputs["text"] = text;
    Poly p = parse_poly(text, ring, d);
    MonomialOrder ord = order_from(req);
    json r;
    r["canonical"] = p.str(ord);
    r["degree"] = p.is_zero() ? json(nullptr) : json(p.degree());
    r["homogeneous"] = p.is_homogeneous();
    r["terms"] = p.num_terms();
    return r;
  }

  if (op == "ideal.gb") {
    IdealFile f = need_ideal(req, "file", inputs);
    MonomialOrder ord = order_from(req);
    Ideal I(f.ring, f.gens);
    const GroebnerBasis& gb = I.groebner(ord, budget);
    json r;
    json basis = json::array();
    for (const auto& g : gb.g) basis.push_back(g.str(ord));
    r["basis"] = std::move(basis);
    r["pairs_processed"] = gb.pairs_processed;
    r["reductions"] = gb.reductions;
    r["max_degree_seen"] = gb.max_degree_seen;
    return r;
  }

  if (op == "ideal.member" || op == "ideal.radmember") {
    IdealFile f = need_ideal(req, "file", inputs);
    std::string text = req.at("poly").get<std::string>();
    inputs["poly"] = text;
    Poly p = parse_poly(text, f.ring, f.quadext_d);
    Ideal I(f.ring, f.gens);
    bool in = (op == "ideal.member") ? member(I, p, budget)
                                     : radical_member(I, p, budget);
    status = in ? 0 : 1;
    json r;
    r["member"] = in;
    r["poly"] = p.str();
    r["radical"] = (op == "ideal.radmember");
    return r;
  }

  if (op == "ideal.quotient") {
    IdealFile f = need_ideal(req, "file", inputs);
    std::string text = req.at("poly").get<std::string>();
    inputs["poly"] = text;
    Poly p = parse_poly(text, f.ring, f.quadext_d);
    Ideal I(f.ring, f.gens);
    Ideal Q = ideal_quotient(I, p, budget);
    json r;
    r["generators"] = poly_list_json(Q.groebner(MonomialOrder::grevlex(),
                                                budget).g);
    return r;
  }

  if (op == "ideal.dim") {
    IdealFile f = need_ideal(req, "file", inputs);
    Ideal I(f.ring, f.gens);
    auto d = dimension(I, budget);
    json r;
    r["dimension"] = d ? json(*d) : json(nullptr);
    r["empty_variety"] = !d.has_value();
    return r;
  }

  if (op == "ideal.singular") {
    IdealFile f = need_ideal(req, "file", inputs);
    int rk = req.value("r", static_cast<int>(f.gens.size()));
    inputs["r"] = rk;
    Ideal I(f.ring, f.gens);
    Ideal J = singular_locus(I, rk, budget);
    auto d = dimension(J, budget);
    json r;
    r["generators"] = poly_list_json(J.gens());
    r["dimension"] = d ? json(*d) : json(nullptr);
    return r;
  }

  if (op == "ideal.edim") {
    IdealFile f = need_ideal(req, "file", inputs);
    std::string text = req.at("point").get<std::string>();
    inputs["point"] = text;
    SVec z = parse_rational_vector(text);
    if (static_cast<int>(z.size()) != f.ring->n())
      fail(Error::Kind::precondition,
           "point needs " + std::to_string(f.ring->n()) + " coordinates");
    Ideal I(f.ring, f.gens);
    json r;
    r["edim"] = edim(I, z);
    return r;
  }

  if (op == "regseq.check" || op == "regseq.generatereg") {
    IdealFile f = need_ideal(req, "file", inputs);
    RegSeqCertificate cert = (op == "regseq.check")
                                 ? is_regular_direct(f.gens, budget)
                                 : certify_generatereg(f.gens, budget);
    status = (cert.verdict == Verdict::regular) ? 0 : 1;
    return certificate_json(cert);
  }

  if (op == "regseq.serre-reduced" || op == "regseq.serre-prime") {
    IdealFile f = need_ideal(req, "file", inputs);
    SerreDetail det;
    bool ok = (op == "regseq.serre-reduced")
                  ? serre_reduced(f.gens, budget, &det)
                  : serre_prime_homogeneous(f.gens, budget, &det);
    status = ok ? 0 : 1;
    json r;
    r[op == "regseq.serre-reduced" ? "reduced" : "prime"] = ok;
    r["dim_v"] = det.dim_v ? json(*det.dim_v) : json(nullptr);
    r["dim_j"] = det.dim_j ? json(*det.dim_j) : json(nullptr);
    if (!det.note.empty()) r["note"] = det.note;
    return r;
  }

  if (op == "regseq.koszul" || op == "regseq.solve-rab") {
    IdealFile pf = need_ideal(req, "p_file", inputs);
    IdealFile qf = need_ideal(req, "q_file", inputs);
    json r;
    if (op == "regseq.koszul") {
      int bound = req.value("bound", 3);
      inputs["bound"] = bound;
      KoszulResult kr = koszul_decompose(pf.gens, qf.gens, bound, budget);
      r["r"] = polymatrix_json(kr.r);
      r["solution_space_dim"] = kr.solution_space_dim;
      r["degree_bound_used"] = kr.degree_bound_used;
    } else {
      SyzygySolution sol = syzygy_solve(pf.gens, qf.gens);
      r["r"] = polymatrix_json(sol.r);
      r["solution_space_dim"] = sol.solution_space_dim;
    }
    return r;
  }

  if (op == "clifford.build") {
    int m = req.at("m").get<int>();
    int k = req.at("k").get<int>();
    inputs["k"] = k;
    inputs["m"] = m;
    CliffordSystem sys = build_clifford_system(m, k);
    json r;
    r["m"] = sys.m;
    r["k"] = sys.k;
    r["l"] = sys.l;
    r["delta"] = delta(m);
    r["matrices"] = static_cast<int>(sys.P.size());
    if (req.contains("out")) {
      std::string out = req.at("out").get<std::string>();
      save_system_file(out, sys.P);
      r["saved"] = out;
    }
    return r;
  }

  if (op == "clifford.verify") {
    std::string path = req.at("file").get<std::string>();
    inputs["file"] = path;
    std::vector<Mat<Scalar>> ps = load_system_file(path);
    CliffordSystem sys;
    sys.m = static_cast<int>(ps.size()) - 1;
    sys.k = 0;
    sys.l = ps[0].rows / 2;
    sys.P = std::move(ps);
    CliffordReport rep = verify_clifford(sys);
    status = rep.ok ? 0 : 1;
    json r;
    r["ok"] = rep.ok;
    json fails = json::array();
    for (const auto& s : rep.failures) fails.push_back(s);
    r["failures"] = std::move(fails);
    return r;
  }

  if (op == "fkm.build") {
    CMData cm = cm_from(req, inputs);
    json r;
    r["ambient_vars"] = cm.ring->n();
    r["m1"] = cm.m1;
    r["m2"] = cm.m2;
    r["m2_phrase"] = cm.m2_phrase;
    r["multiplicity_mismatch"] = cm.multiplicity_mismatch;
    r["provenance"] = cm.provenance;
    r["terms"] = cm.F.num_terms();
    if (req.contains("out")) {
      std::string out = req.at("out").get<std::string>();
      save_cm_file(out, cm);
      r["saved"] = out;
    }
    return r;
  }

  if (op == "fkm.verify-munzner") {
    CMData cm = cm_from(req, inputs);
    MunznerReport mr = verify_munzner(cm.F, cm.g, cm.m1, cm.m2);
    status = mr.ok() ? 0 : 1;
    json r;
    r["grad_ok"] = mr.grad_ok;
    r["laplace_ok"] = mr.laplace_ok;
    r["grad_residual_terms"] = mr.grad_residual.num_terms();
    r["laplace_residual_terms"] = mr.laplace_residual.num_terms();
    r["m2_operational"] =
        mr.m2_operational ? json(mr.m2_operational->get_str()) : json(nullptr);
    return r;
  }

  if (op == "fkm.focal") {
    CMData cm = cm_from(req, inputs);
    int count = req.value("count", 1);
    inputs["count"] = count;
    std::vector<FramedPoint> pts = find_focal_points(cm, count);
    if (pts.empty())
      fail(Error::Kind::budget,
           "focal search exhausted the half-block candidate set without a "
           "hit");
    json r;
    json arr = json::array();
    for (const auto& fp : pts) arr.push_back(frame_json(fp));
    r["points"] = std::move(arr);
    r["found"] = static_cast<int>(pts.size());
    return r;
  }

  if (op == "fkm.shape") {
    CMData cm = cm_from(req, inputs);
    FramedPoint fp = point_for(cm, req, inputs);
    std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
    json r;
    json ops = json::array();
    for (const auto& m : S) ops.push_back(mat_json(m));
    r["operators"] = std::move(ops);
    r["point"] = frame_json(fp);
    // shape_operators proves these exactly before returning
    r["spectrum_checks"] = "passed";
    return r;
  }

  if (op == "fkm.expand" || op == "fkm.identities") {
    CMData cm = cm_from(req, inputs);
    FramedPoint fp = point_for(cm, req, inputs);
    ExpansionData ed = ot_expand(cm, fp);
    json r;
    r["m1"] = ed.m1;
    r["m2"] = ed.m2;
    r["yring"] = ring_json(ed.yring);
    r["p"] = poly_list_json(ed.p);
    r["q"] = poly_list_json(ed.q);
    json notes = json::array();
    for (const auto& n : ed.notes) notes.push_back(n);
    r["notes"] = std::move(notes);
    if (op == "fkm.identities") {
      IdentityReport rep = verify_ot_identities(ed);
      status = rep.ok() ? 0 : 1;
      r["checks"] = identity_checks_json(rep);
      r["ok"] = rep.ok();
    }
    return r;
  }

  if (op == "fkm.rab") {
    CMData cm = cm_from(req, inputs);
    FramedPoint fp = point_for(cm, req, inputs);
    ExpansionData ed = ot_expand(cm, fp);
    bool ok = false;
    json r = rab_json(ed, &ok);
    status = ok ? 0 : 1;
    return r;
  }

  if (op == "fkm.condition-a") {
    CMData cm = cm_from(req, inputs);
    int count = req.value("count", 25);
    inputs["count"] = count;
    std::vector<FramedPoint> pts = find_focal_points(cm, count);
    ConditionAReport rep = condition_a_scan(cm, pts);
    status = rep.hits >= 1 ? 0 : 1;
    json r;
    r["scanned"] = static_cast<int>(rep.points.size());
    r["hits"] = rep.hits;
    json arr = json::array();
    for (const auto& p : rep.points)
      arr.push_back(json{{"common_kernel_dim", p.common_kernel_dim},
                         {"condition_a", p.condition_a},
                         {"x", svec_json(p.fp.x)}});
    r["points"] = std::move(arr);
    return r;
  }

  if (op == "fkm.pencil") {
    CMData cm = cm_from(req, inputs);
    FramedPoint fp = point_for(cm, req, inputs);
    std::vector<CScalar> lam = lambda_from(req);
    inputs["lambda"] = lambda_json(lam);
    std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
    PencilStratum st = pencil_analyze(S, lam, cm.m1, cm.m2);
    status = st.branch_formula_ok ? 0 : 1;
    return stratum_json(st);
  }

  if (op == "fkm.codim") {
    CMData cm = cm_from(req, inputs);
    FramedPoint fp = point_for(cm, req, inputs);
    ExpansionData ed = ot_expand(cm, fp);
    int kstage = req.value("kstage", 0);
    inputs["kstage"] = kstage;
    CodimReport cr = codim_report(ed, kstage, budget);
    status = (cr.lower_bound_ok && cr.crucial_ok && cr.cod2_ok) ? 0 : 1;
    return codim_json(cr);
  }

  if (op == "fkm.verify-all") {
    int m = req.at("m").get<int>();
    int k = req.at("k").get<int>();
    inputs["k"] = k;
    inputs["m"] = m;
    json r;
    bool ok = true;

    CliffordSystem sys = build_clifford_system(m, k);
    CliffordReport crep = verify_clifford(sys);
    {
      json sec;
      sec["ok"] = crep.ok;
      json fails = json::array();
      for (const auto& s : crep.failures) fails.push_back(s);
      sec["failures"] = std::move(fails);
      r["clifford"] = std::move(sec);
      ok = ok && crep.ok;
    }

    CMData cm = build_fkm(sys);
    r["build"] = json{{"m1", cm.m1},
                      {"m2", cm.m2},
                      {"m2_phrase", cm.m2_phrase},
                      {"multiplicity_mismatch", cm.multiplicity_mismatch},
                      {"terms", cm.F.num_terms()}};

    MunznerReport mr = verify_munzner(cm.F, cm.g, cm.m1, cm.m2);
    r["munzner"] = json{{"grad_ok", mr.grad_ok},
                        {"laplace_ok", mr.laplace_ok},
                        {"ok", mr.ok()}};
    ok = ok && mr.ok();

    std::vector<FramedPoint> pts = find_focal_points(cm, 4);
    if (pts.empty())
      fail(Error::Kind::budget,
           "focal search exhausted the half-block candidate set without a "
           "hit");
    {
      json arr = json::array();
      for (const auto& fp : pts) arr.push_back(frame_json(fp));
      r["focal"] = json{{"found", static_cast<int>(pts.size())},
                        {"points", std::move(arr)}};
    }

    const FramedPoint& fp = pts[0];
    std::vector<Mat<Scalar>> S = shape_operators(cm, fp);
    {
      json ops = json::array();
      for (const auto& sm : S) ops.push_back(mat_json(sm));
      r["shape"] = json{{"operators", std::move(ops)},
                        {"spectrum_checks", "passed"}};
    }

    ExpansionData ed = ot_expand(cm, fp);
    {
      json notes = json::array();
      for (const auto& n : ed.notes) notes.push_back(n);
      r["expand"] = json{{"p", poly_list_json(ed.p)},
                         {"q", poly_list_json(ed.q)},
                         {"notes", std::move(notes)}};
    }

    IdentityReport idr = verify_ot_identities(ed);
    r["identities"] =
        json{{"checks", identity_checks_json(idr)}, {"ok", idr.ok()}};
    ok = ok && idr.ok();

    bool vanishing = true;
    for (const auto& qa : ed.q)
      if (!qa.is_zero()) vanishing = false;
    if (vanishing) {
      // With an identically zero cubic form there is no kernel field to
      // normalize; the claim set is vacuous, not failed.
      r["rab"] = json{{"applicable", false},
                      {"reason", "the cubic form vanishes identically"}};
    } else {
      bool rok = false;
      json sec = rab_json(ed, &rok);
      sec["applicable"] = true;
      r["rab"] = std::move(sec);
      ok = ok && rok;
    }

    {
      ConditionAReport ca = condition_a_scan(cm, pts);
      json arr = json::array();
      for (const auto& p : ca.points)
        arr.push_back(json{{"common_kernel_dim", p.common_kernel_dim},
                           {"condition_a", p.condition_a}});
      // structural property of individual points; reported, never required
      r["condition_a"] = json{{"hits", ca.hits}, {"points", std::move(arr)}};
    }

    {
      json strata = json::array();
      bool pok = true;
      std::vector<std::vector<CScalar>> lams;
      std::vector<CScalar> ones, ramp, hyper;
      for (int a = 0; a <= cm.m1; ++a) {
        ones.emplace_back(Scalar(1));
        ramp.emplace_back(Scalar(a + 1));
        hyper.emplace_back(a == 0 ? CScalar(Scalar(1))
                                  : (a == 1 ? CScalar(Scalar(0), Scalar(1))
                                            : CScalar()));
      }
      lams.push_back(ones);
      lams.push_back(ramp);
      if (cm.m1 >= 1) lams.push_back(hyper);
      for (const auto& lam : lams) {
        PencilStratum st = pencil_analyze(S, lam, cm.m1, cm.m2);
        pok = pok && st.branch_formula_ok;
        strata.push_back(stratum_json(st));
      }
      r["pencil"] = json{{"ok", pok}, {"strata", std::move(strata)}};
      ok = ok && pok;
    }

    if (cm.m2 >= 2) {
      json stages = json::array();
      bool cok = true;
      for (int ks = 0; ks < cm.m1; ++ks) {
        CodimReport cr = codim_report(ed, ks, budget);
        // The singular locus drops two below the variety only while
        // 2k <= m2 - 1 (all stages when m2 >= 2 m1 - 1); beyond that the
        // value is reported but not demanded.
        bool cod2_required = 2 * ks <= cm.m2 - 1;
        cok = cok && cr.lower_bound_ok && cr.crucial_ok &&
              (!cod2_required || cr.cod2_ok);
        json js = codim_json(cr);
        js["cod2_required"] = cod2_required;
        stages.push_back(std::move(js));
      }
      r["codim"] = json{{"applicable", true}, {"ok", cok},
                        {"stages", std::move(stages)}};
      ok = ok && cok;
    } else {
      r["codim"] = json{{"applicable", false},
                        {"reason", "upper bounds assume m2 >= 2"}};
    }

    r["ok"] = ok;
    status = ok ? 0 : 1;
    return r;
  }

  fail(Error::Kind::parse, "unknown operation '" + op + "'");
}

}  // namespace

// ------------------------------------------------------------ C surface ----

extern "C" {

const char* isopar_last_error(void) { return g_last_error.c_str(); }

void isopar_free(char* buf) { std::free(buf); }

isopar_status isopar_execute(const char* request_json, char** report_json) {
  if (report_json) *report_json = nullptr;
  if (!request_json || !report_json) {
    set_err("isopar_execute: null argument");
    return ISOPAR_BAD_REQUEST;
  }
  try {
    json req = json::parse(request_json);
    std::string op = req.at("op").get<std::string>();
    int status = 0;
    json inputs = json::object();
    json result = run_op(op, req, inputs, status);
    json report;
    report["budgets"] = budget_json(budget_from(req));
    report["inputs"] = inputs;
    report["op"] = op;
    report["result"] = std::move(result);
    report["schema"] = "isopar-report/1";
    report["status"] = status == 0 ? "pass" : "fail";
    report["timestamp"] = utc_now();
    *report_json = dup_cstr(report.dump(2) + "\n");
    if (!*report_json) {
      set_err("out of memory");
      return ISOPAR_BAD_REQUEST;
    }
    g_last_error.clear();
    return status == 0 ? ISOPAR_OK : ISOPAR_CHECK_FAILED;
  } catch (const Error& e) {
    set_err(e.what());
    return status_of(e);
  } catch (const json::exception& e) {
    set_err(std::string("bad request: ") + e.what());
    return ISOPAR_BAD_REQUEST;
  } catch (const std::exception& e) {
    set_err(e.what());
    return ISOPAR_BAD_REQUEST;
  }
}

// ------------------------------------------------------- typed handles ----

struct isopar_ring {
  isopar::RingPtr ring;
  long quadext_d;
};

struct isopar_poly {
  isopar::Poly p;
  long quadext_d;
};

struct isopar_ideal {
  isopar::Ideal I;
};

isopar_ring* isopar_ring_new(const char* const* names, size_t count,
                             long quadext_d) {
  try {
    if (!names || count == 0) {
      set_err("ring needs at least one variable");
      return nullptr;
    }
    if (quadext_d == 1 || quadext_d < 0) {
      set_err("quadext parameter must be 0 or an integer >= 2");
      return nullptr;
    }
    std::vector<std::string> v;
    for (size_t i = 0; i < count; ++i) {
      if (!names[i]) {
        set_err("null variable name");
        return nullptr;
      }
      v.emplace_back(names[i]);
    }
    return new isopar_ring{isopar::Ring::make(std::move(v)), quadext_d};
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

void isopar_ring_release(isopar_ring* r) { delete r; }

isopar_poly* isopar_poly_parse(const isopar_ring* r, const char* text) {
  try {
    if (!r || !text) {
      set_err("null argument");
      return nullptr;
    }
    return new isopar_poly{isopar::parse_poly(text, r->ring, r->quadext_d),
                           r->quadext_d};
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

void isopar_poly_release(isopar_poly* p) { delete p; }

char* isopar_poly_str(const isopar_poly* p) {
  try {
    if (!p) {
      set_err("null argument");
      return nullptr;
    }
    return dup_cstr(p->p.str());
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

int isopar_poly_degree(const isopar_poly* p) {
  if (!p) {
    set_err("null argument");
    return INT_MIN;
  }
  return p->p.degree();
}

isopar_poly* isopar_poly_add(const isopar_poly* a, const isopar_poly* b) {
  try {
    if (!a || !b) {
      set_err("null argument");
      return nullptr;
    }
    return new isopar_poly{a->p + b->p, a->quadext_d};
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

isopar_poly* isopar_poly_mul(const isopar_poly* a, const isopar_poly* b) {
  try {
    if (!a || !b) {
      set_err("null argument");
      return nullptr;
    }
    return new isopar_poly{a->p * b->p, a->quadext_d};
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

isopar_ideal* isopar_ideal_new(const isopar_poly* const* gens, size_t count) {
  try {
    if (!gens || count == 0) {
      set_err("ideal needs at least one generator");
      return nullptr;
    }
    std::vector<isopar::Poly> v;
    for (size_t i = 0; i < count; ++i) {
      if (!gens[i]) {
        set_err("null generator");
        return nullptr;
      }
      v.push_back(gens[i]->p);
    }
    isopar::RingPtr ring = v[0].ring();
    return new isopar_ideal{isopar::Ideal(std::move(ring), std::move(v))};
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

void isopar_ideal_release(isopar_ideal* I) { delete I; }

char* isopar_ideal_groebner_json(const isopar_ideal* I, const char* order) {
  try {
    if (!I) {
      set_err("null argument");
      return nullptr;
    }
    std::string o = order ? order : "grevlex";
    isopar::MonomialOrder ord;
    if (o == "grevlex") {
      ord = isopar::MonomialOrder::grevlex();
    } else if (o == "lex") {
      ord = isopar::MonomialOrder::lex();
    } else {
      set_err("unknown monomial order '" + o + "'");
      return nullptr;
    }
    const isopar::GroebnerBasis& gb = I->I.groebner(ord);
    json r;
    json basis = json::array();
    for (const auto& g : gb.g) basis.push_back(g.str(ord));
    r["basis"] = std::move(basis);
    r["pairs_processed"] = gb.pairs_processed;
    r["reductions"] = gb.reductions;
    r["max_degree_seen"] = gb.max_degree_seen;
    return dup_cstr(r.dump(2) + "\n");
  } catch (const std::exception& e) {
    set_err(e.what());
    return nullptr;
  }
}

int isopar_ideal_member(const isopar_ideal* I, const isopar_poly* p) {
  try {
    if (!I || !p) {
      set_err("null argument");
      return -1;
    }
    return isopar::member(I->I, p->p) ? 1 : 0;
  } catch (const std::exception& e) {
    set_err(e.what());
    return -1;
  }
}

int isopar_ideal_radical_member(const isopar_ideal* I, const isopar_poly* p) {
  try {
    if (!I || !p) {
      set_err("null argument");
      return -1;
    }
    return isopar::radical_member(I->I, p->p) ? 1 : 0;
  } catch (const std::exception& e) {
    set_err(e.what());
    return -1;
  }
}

int isopar_ideal_dimension(const isopar_ideal* I) {
  try {
    if (!I) {
      set_err("null argument");
      return -2;
    }
    auto d = isopar::dimension(I->I);
    return d ? *d : -1;
  } catch (const std::exception& e) {
    set_err(e.what());
    return -2;
  }
}

}  // extern "C"
