// Exercises the shared library strictly through its C surface: the typed
// handles and the JSON command gateway.  Links only libisopar; no core
// headers.  Exits nonzero when any check fails.

#include <cstdio>
#include <cstring>

#include "isopar.h"

static int g_failures = 0;

#define EXPECT(cond, name)                             \
  do {                                                 \
    if (cond) {                                        \
      std::printf("ok   %s\n", name);                  \
    } else {                                           \
      std::printf("FAIL %s (line %d)\n", name, __LINE__); \
      ++g_failures;                                    \
    }                                                  \
  } while (0)

static bool has(const char* hay, const char* needle) {
  return hay && std::strstr(hay, needle) != nullptr;
}

static void write_file(const char* path, const char* body) {
  std::FILE* f = std::fopen(path, "wb");
  if (!f) {
    std::printf("FAIL cannot write %s\n", path);
    ++g_failures;
    return;
  }
  std::fputs(body, f);
  std::fclose(f);
}

static void test_handles() {
  const char* names[] = {"x", "y"};
  isopar_ring* R = isopar_ring_new(names, 2, 0);
  EXPECT(R != nullptr, "ring_new");

  isopar_poly* p = isopar_poly_parse(R, "(x+y)^2");
  EXPECT(p != nullptr, "poly_parse");
  char* s = isopar_poly_str(p);
  EXPECT(has(s, "x^2 + 2*x*y + y^2"), "poly_str canonical");
  isopar_free(s);
  EXPECT(isopar_poly_degree(p) == 2, "poly_degree");

  isopar_poly* zero = isopar_poly_parse(R, "x - x");
  EXPECT(zero != nullptr && isopar_poly_degree(zero) < -1000000,
         "zero poly degree sentinel");

  isopar_poly* q = isopar_poly_parse(R, "x - y");
  isopar_poly* sum = isopar_poly_add(p, q);
  isopar_poly* prod = isopar_poly_mul(q, q);
  char* ss = isopar_poly_str(sum);
  char* sp = isopar_poly_str(prod);
  EXPECT(has(ss, "x^2 + 2*x*y + y^2 + x - y"), "poly_add");
  EXPECT(has(sp, "x^2 - 2*x*y + y^2"), "poly_mul");
  isopar_free(ss);
  isopar_free(sp);

  // error paths: bad parse, bad extension parameter, null arguments
  isopar_poly* bad = isopar_poly_parse(R, "x +* y");
  EXPECT(bad == nullptr && isopar_last_error()[0] != '\0',
         "parse error yields null + message");
  isopar_ring* badring = isopar_ring_new(names, 2, 1);
  EXPECT(badring == nullptr, "quadext d=1 refused");
  EXPECT(isopar_poly_parse(nullptr, "x") == nullptr, "null ring refused");
  EXPECT(isopar_poly_degree(nullptr) < -1000000, "null poly degree sentinel");

  // the double-point ideal (y - x^2, y): x^2 inside, x outside, dim 0
  isopar_poly* g0 = isopar_poly_parse(R, "y - x^2");
  isopar_poly* g1 = isopar_poly_parse(R, "y");
  const isopar_poly* gens[] = {g0, g1};
  isopar_ideal* I = isopar_ideal_new(gens, 2);
  EXPECT(I != nullptr, "ideal_new");
  isopar_poly* x = isopar_poly_parse(R, "x");
  isopar_poly* x2 = isopar_poly_parse(R, "x^2");
  EXPECT(isopar_ideal_member(I, x) == 0, "member(x) = no");
  EXPECT(isopar_ideal_member(I, x2) == 1, "member(x^2) = yes");
  EXPECT(isopar_ideal_dimension(I) == 0, "dimension 0");
  char* gb = isopar_ideal_groebner_json(I, "lex");
  EXPECT(has(gb, "\"basis\""), "groebner_json has basis");
  isopar_free(gb);
  EXPECT(isopar_ideal_groebner_json(I, "mystery") == nullptr,
         "unknown order refused");

  // radical membership: x in rad(x^2, x*y)
  isopar_poly* h0 = isopar_poly_parse(R, "x^2");
  isopar_poly* h1 = isopar_poly_parse(R, "x*y");
  const isopar_poly* hgens[] = {h0, h1};
  isopar_ideal* J = isopar_ideal_new(hgens, 2);
  EXPECT(isopar_ideal_radical_member(J, x) == 1, "radical_member(x) = yes");
  EXPECT(isopar_ideal_member(J, x) == 0, "member(x) = no in (x^2, x*y)");

  // mixed rings are a reported error, not a crash
  const char* onames[] = {"a", "b"};
  isopar_ring* R2 = isopar_ring_new(onames, 2, 0);
  isopar_poly* alien = isopar_poly_parse(R2, "a");
  EXPECT(isopar_ideal_member(I, alien) == -1 &&
             isopar_last_error()[0] != '\0',
         "ring mismatch reported");

  isopar_poly_release(alien);
  isopar_ring_release(R2);
  isopar_ideal_release(J);
  isopar_ideal_release(I);
  isopar_poly_release(h0);
  isopar_poly_release(h1);
  isopar_poly_release(x);
  isopar_poly_release(x2);
  isopar_poly_release(g0);
  isopar_poly_release(g1);
  isopar_poly_release(sum);
  isopar_poly_release(prod);
  isopar_poly_release(q);
  isopar_poly_release(zero);
  isopar_poly_release(p);
  isopar_ring_release(R);
}

static void test_gateway() {
  char* rep = nullptr;

  // pass: canonical form
  isopar_status st = isopar_execute(
      "{\"op\":\"poly.canon\",\"ring\":[\"x\",\"y\"],\"text\":\"(x+y)^2\"}",
      &rep);
  EXPECT(st == ISOPAR_OK, "poly.canon status 0");
  EXPECT(has(rep, "\"canonical\": \"x^2 + 2*x*y + y^2\""),
         "poly.canon canonical text");
  EXPECT(has(rep, "\"schema\": \"isopar-report/1\""), "report schema tag");
  EXPECT(has(rep, "\"status\": \"pass\""), "report status field");
  isopar_free(rep);
  rep = nullptr;

  // check failure: membership says no -> status 1, report still produced
  write_file("capi_double.id", "ring x, y\ny - x^2\ny\n");
  st = isopar_execute(
      "{\"op\":\"ideal.member\",\"file\":\"capi_double.id\",\"poly\":\"x\"}",
      &rep);
  EXPECT(st == ISOPAR_CHECK_FAILED, "ideal.member(x) status 1");
  EXPECT(has(rep, "\"member\": false"), "ideal.member(x) report says no");
  isopar_free(rep);
  rep = nullptr;
  st = isopar_execute(
      "{\"op\":\"ideal.member\",\"file\":\"capi_double.id\",\"poly\":\"x^2\"}",
      &rep);
  EXPECT(st == ISOPAR_OK, "ideal.member(x^2) status 0");
  isopar_free(rep);
  rep = nullptr;

  // bad request: unknown op, malformed json, missing file
  st = isopar_execute("{\"op\":\"nope.nope\"}", &rep);
  EXPECT(st == ISOPAR_BAD_REQUEST && rep == nullptr,
         "unknown op -> bad request, no report");
  EXPECT(has(isopar_last_error(), "unknown operation"),
         "unknown op message");
  st = isopar_execute("not json", &rep);
  EXPECT(st == ISOPAR_BAD_REQUEST, "malformed json -> bad request");
  st = isopar_execute(
      "{\"op\":\"ideal.dim\",\"file\":\"no_such_file.id\"}", &rep);
  EXPECT(st == ISOPAR_BAD_REQUEST, "missing file -> bad request");
  st = isopar_execute(nullptr, &rep);
  EXPECT(st == ISOPAR_BAD_REQUEST, "null request -> bad request");

  // exit-code partition on the same op: a bound below the syzygy degree is
  // a bad request; a syzygy with no antisymmetric decomposition at any
  // admissible bound is a resource refusal; a decomposable one passes.
  write_file("capi_p.id", "ring x, y\nx\ny\n");
  write_file("capi_q.id", "ring x, y\nx*y\n-x^2\n");
  st = isopar_execute(
      "{\"op\":\"regseq.koszul\",\"p_file\":\"capi_p.id\","
      "\"q_file\":\"capi_q.id\",\"bound\":0}",
      &rep);
  EXPECT(st == ISOPAR_BAD_REQUEST && rep == nullptr,
         "koszul bound below syzygy degree -> bad request");
  st = isopar_execute(
      "{\"op\":\"regseq.koszul\",\"p_file\":\"capi_p.id\","
      "\"q_file\":\"capi_q.id\",\"bound\":2}",
      &rep);
  EXPECT(st == ISOPAR_OK, "koszul with adequate cap passes");
  EXPECT(has(rep, "\"solution_space_dim\""), "koszul reports solution space");
  isopar_free(rep);
  rep = nullptr;
  write_file("capi_p2.id", "ring x, y, z\nx*z\ny*z\n");
  write_file("capi_q2.id", "ring x, y, z\ny\n-x\n");
  st = isopar_execute(
      "{\"op\":\"regseq.koszul\",\"p_file\":\"capi_p2.id\","
      "\"q_file\":\"capi_q2.id\",\"bound\":1}",
      &rep);
  EXPECT(st == ISOPAR_BUDGET && rep == nullptr,
         "non-Koszul syzygy -> budget status");
  EXPECT(has(isopar_last_error(), "no antisymmetric decomposition"),
         "budget message names the cap");

  // regseq witness surfaces through the gateway
  write_file("capi_xzyz.id", "ring x, y, z\nx*z\ny*z\n");
  st = isopar_execute(
      "{\"op\":\"regseq.check\",\"file\":\"capi_xzyz.id\"}", &rep);
  EXPECT(st == ISOPAR_CHECK_FAILED, "regseq.check(xz, yz) status 1");
  EXPECT(has(rep, "\"verdict\": \"not-regular\""), "verdict not-regular");
  EXPECT(has(rep, "\"kind\": \"zero-divisor\""), "witness kind");
  isopar_free(rep);
  rep = nullptr;

  // a composite op runs end to end through the same door
  st = isopar_execute("{\"op\":\"fkm.verify-all\",\"m\":1,\"k\":3}", &rep);
  EXPECT(st == ISOPAR_OK, "fkm.verify-all (1,3) status 0");
  EXPECT(has(rep, "\"munzner\""), "verify-all has munzner section");
  EXPECT(has(rep, "\"identities\""), "verify-all has identities section");
  EXPECT(has(rep, "\"codim\""), "verify-all has codim section");
  isopar_free(rep);
  rep = nullptr;
}

int main() {
  test_handles();
  test_gateway();
  if (g_failures) {
    std::printf("%d check(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all C API checks passed\n");
  return 0;
}
