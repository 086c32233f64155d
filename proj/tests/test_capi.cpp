#include <doctest.h>

#include <cstring>
#include <string>

#include "knotfiber.h"

namespace {

struct Doc {
  kf_document* d = nullptr;
  ~Doc() { kf_document_free(d); }
};

struct Res {
  kf_result* r = nullptr;
  ~Res() { kf_result_free(r); }
};

}  // namespace

TEST_CASE("generate, serialize, reparse, decide through the C API") {
  Doc doc;
  REQUIRE(kf_generate("solid_torus", "core", nullptr, 0, &doc.d) == KF_OK);

  char* text = nullptr;
  REQUIRE(kf_document_to_string(doc.d, &text) == KF_OK);
  REQUIRE(text != nullptr);

  Doc back;
  REQUIRE(kf_document_parse(text, &back.d) == KF_OK);
  kf_string_free(text);

  Res verdict;
  REQUIRE(kf_decide(back.d, "core", 0, &verdict.r) == KF_OK);
  std::string out = kf_result_text(verdict.r);
  CHECK(out.find("verdict: Realizable") != std::string::npos);
  std::string json = kf_result_json(verdict.r);
  CHECK(json.find("\"verdict\": \"Realizable\"") != std::string::npos);
}

TEST_CASE("validation result carries the success flag") {
  Doc doc;
  REQUIRE(kf_generate("ball", nullptr, nullptr, 0, &doc.d) == KF_OK);
  Res r;
  REQUIRE(kf_validate(doc.d, &r.r) == KF_OK);
  CHECK(kf_result_ok(r.r) == 1);

  Doc bad;
  const char* text =
      "format 1\nvertices 6\ntet 0 1 2 3\ntet 0 1 2 4\ntet 0 1 2 5\n";
  REQUIRE(kf_document_parse(text, &bad.d) == KF_OK);
  Res r2;
  REQUIRE(kf_validate(bad.d, &r2.r) == KF_OK);
  CHECK(kf_result_ok(r2.r) == 0);
}

TEST_CASE("homology report through the C API") {
  long params[2] = {3, 1};
  Doc doc;
  REQUIRE(kf_generate("lens_punctured", nullptr, params, 2, &doc.d) == KF_OK);
  Res r;
  REQUIRE(kf_homology(doc.d, 1, 0, 0, &r.r) == KF_OK);
  std::string out = kf_result_text(r.r);
  CHECK(out.find("torsion [3]") != std::string::npos);
}

TEST_CASE("error paths set statuses and messages") {
  Doc doc;
  CHECK(kf_document_parse("format 9\n", &doc.d) == KF_ERROR_PARSE);
  CHECK(std::strlen(kf_last_error()) > 0);

  CHECK(kf_document_read("/nonexistent/file.tri", &doc.d) == KF_ERROR_PARSE);

  REQUIRE(kf_generate("ball", nullptr, nullptr, 0, &doc.d) == KF_OK);
  Res r;
  CHECK(kf_decide(doc.d, "missing", 0, &r.r) == KF_ERROR_NOT_FOUND);
  CHECK(kf_decide(nullptr, "x", 0, &r.r) == KF_ERROR_ARGUMENT);
  CHECK(kf_generate("klein_bottle", nullptr, nullptr, 0, &doc.d) ==
        KF_ERROR_ARGUMENT);
}

TEST_CASE("framing arithmetic through the C API") {
  CHECK(kf_framing_twist(0, 1) == 1);
  CHECK(kf_framing_twist(1, 2) == 1);
  CHECK(kf_framing_twist(1, -3) == 0);
  CHECK(kf_framing_cable(0) == 1);
  CHECK(kf_framing_cable(1) == 1);

  unsigned char kappa2[3] = {1, 0, 1};
  int exists = -1;
  REQUIRE(kf_extension_exists(kappa2, 3, 1, &exists) == KF_OK);
  CHECK(exists == 1);
  unsigned char zero[2] = {0, 0};
  REQUIRE(kf_extension_exists(zero, 2, 1, &exists) == KF_OK);
  CHECK(exists == 0);
  REQUIRE(kf_extension_exists(nullptr, 0, 0, &exists) == KF_OK);
  CHECK(exists == 1);

  unsigned char phi[3] = {9, 9, 9};
  REQUIRE(kf_construct_extension(kappa2, 3, phi) == KF_OK);
  int pairing = 0;
  for (int i = 0; i < 3; ++i) pairing ^= (phi[i] & kappa2[i]);
  CHECK(pairing == 1);
  CHECK(kf_construct_extension(zero, 2, phi) == KF_ERROR_ARGUMENT);
}

TEST_CASE("exterior report through the C API") {
  Doc doc;
  REQUIRE(kf_generate("ball", "contractible", nullptr, 0, &doc.d) == KF_OK);
  Res r;
  REQUIRE(kf_exterior(doc.d, "contractible", &r.r) == KF_OK);
  std::string out = kf_result_text(r.r);
  CHECK(out.find("preferred_offsets: unique") != std::string::npos);
  CHECK(out.find("meridian:") != std::string::npos);
  CHECK(out.find("longitude0:") != std::string::npos);
}
