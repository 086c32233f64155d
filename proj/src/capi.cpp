#include "../include/knotfiber.h"

#include <cstring>
#include <mutex>
#include <string>

#include "catalog.hpp"
#include "error.hpp"
#include "framing.hpp"
#include "report.hpp"
#include "trifile.hpp"

struct kf_document {
  kf::Document doc;
};

struct kf_result {
  std::string text;
  std::string json;
  bool ok = true;
};

namespace {

thread_local std::string g_last_error;

kf_status status_of(const kf::Error& e) {
  switch (e.kind()) {
    case kf::ErrorKind::ParseError:
      return KF_ERROR_PARSE;
    case kf::ErrorKind::InvalidComplex:
      return KF_ERROR_INVALID;
    case kf::ErrorKind::BadArgument:
      return KF_ERROR_ARGUMENT;
    case kf::ErrorKind::NotFound:
      return KF_ERROR_NOT_FOUND;
    case kf::ErrorKind::Internal:
      return KF_ERROR_INTERNAL;
  }
  return KF_ERROR_INTERNAL;
}

template <class F>
kf_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return KF_OK;
  } catch (const kf::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KF_ERROR_INTERNAL;
  }
}

kf_status make_result(const kf::ReportResult& rr, kf_result** out) {
  auto* r = new kf_result{rr.text, rr.json, rr.ok};
  *out = r;
  return KF_OK;
}

}  // namespace

extern "C" {

unsigned kf_version(void) { return 10000; /* 1.0.0 */ }

const char* kf_status_name(kf_status s) {
  switch (s) {
    case KF_OK:
      return "ok";
    case KF_ERROR_IO:
      return "io-error";
    case KF_ERROR_PARSE:
      return "parse-error";
    case KF_ERROR_INVALID:
      return "invalid-complex";
    case KF_ERROR_ARGUMENT:
      return "bad-argument";
    case KF_ERROR_NOT_FOUND:
      return "not-found";
    case KF_ERROR_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

const char* kf_last_error(void) { return g_last_error.c_str(); }

kf_status kf_document_read(const char* path, kf_document** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    auto* doc = new kf_document{kf::read_document(path)};
    *out = doc;
  });
}

kf_status kf_document_parse(const char* text, kf_document** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    auto* doc = new kf_document{kf::parse_document(text)};
    *out = doc;
  });
}

kf_status kf_document_write(const kf_document* doc, const char* path) {
  if (!doc || !path) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] { kf::write_document_file(doc->doc, path); });
}

kf_status kf_document_to_string(const kf_document* doc, char** out) {
  if (!doc || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    std::string s = kf::write_document(doc->doc);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void kf_document_free(kf_document* doc) { delete doc; }
void kf_string_free(char* s) { delete[] s; }

kf_status kf_generate(const char* family, const char* knot,
                      const long* params, size_t nparams, kf_document** out) {
  if (!family || !out || (nparams > 0 && !params)) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    kf::CatalogSpec spec;
    spec.family = kf::family_from_string(family);
    if (knot) {
      spec.knot = kf::selector_from_string(knot);
    } else {
      switch (spec.family) {
        case kf::Family::Ball:
          spec.knot = kf::KnotSelector::Contractible;
          break;
        case kf::Family::SolidTorus:
        case kf::Family::ThickenedTorus:
        case kf::Family::S1xS2Punctured:
          spec.knot = kf::KnotSelector::Core;
          break;
        case kf::Family::Handlebody:
          spec.knot = kf::KnotSelector::HandleCore;
          break;
        case kf::Family::LensPunctured:
          spec.knot = kf::KnotSelector::TorsionGenerator;
          break;
      }
    }
    auto want = [&](size_t n, const char* what) {
      if (nparams != n)
        kf::fail(kf::ErrorKind::BadArgument,
                 std::string("expected parameters: ") + what);
    };
    switch (spec.family) {
      case kf::Family::SolidTorus:
        if (spec.knot == kf::KnotSelector::CorePower) {
          want(1, "n");
          spec.n = static_cast<int>(params[0]);
        } else {
          want(0, "(none)");
        }
        break;
      case kf::Family::Handlebody:
        want(2, "genus, handle");
        spec.genus = static_cast<int>(params[0]);
        spec.handle = static_cast<int>(params[1]);
        break;
      case kf::Family::LensPunctured:
        want(2, "p, q");
        spec.p = static_cast<int>(params[0]);
        spec.q = static_cast<int>(params[1]);
        break;
      default:
        want(0, "(none)");
        break;
    }
    auto* doc = new kf_document{kf::fixture_document(spec)};
    *out = doc;
  });
}

kf_status kf_validate(const kf_document* doc, kf_result** out) {
  if (!doc || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] { make_result(kf::report_validate(doc->doc), out); });
}

kf_status kf_homology(const kf_document* doc, int degree, int mod2,
                      int rel_boundary, kf_result** out) {
  if (!doc || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    make_result(
        kf::report_homology(doc->doc, degree, mod2 != 0, rel_boundary != 0),
        out);
  });
}

kf_status kf_decide(const kf_document* doc, const char* knot, int cross_check,
                    kf_result** out) {
  if (!doc || !knot || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    make_result(kf::report_decide(doc->doc, knot, cross_check != 0), out);
  });
}

kf_status kf_exterior(const kf_document* doc, const char* knot,
                      kf_result** out) {
  if (!doc || !knot || !out) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] { make_result(kf::report_exterior(doc->doc, knot), out); });
}

const char* kf_result_text(const kf_result* r) { return r->text.c_str(); }
const char* kf_result_json(const kf_result* r) { return r->json.c_str(); }
int kf_result_ok(const kf_result* r) { return r->ok ? 1 : 0; }
void kf_result_free(kf_result* r) { delete r; }

int kf_framing_twist(int sigma, long n) {
  return kf::twist({sigma & 1}, kf::Int(n)).value;
}

int kf_framing_cable(int sigma) { return kf::cable_class({sigma & 1}).value; }

kf_status kf_extension_exists(const unsigned char* kappa2_bits, size_t dim,
                              int target, int* out_exists) {
  if (!out_exists || (dim > 0 && !kappa2_bits)) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    kf::BitVec bits(dim);
    for (size_t i = 0; i < dim; ++i) bits[i] = kappa2_bits[i] != 0;
    *out_exists = kf::extension_exists_bits(bits, target != 0) ? 1 : 0;
  });
}

kf_status kf_construct_extension(const unsigned char* kappa2_bits, size_t dim,
                                 unsigned char* phi_out) {
  if (dim > 0 && (!kappa2_bits || !phi_out)) {
    g_last_error = "null argument";
    return KF_ERROR_ARGUMENT;
  }
  return guarded([&] {
    kf::BitVec bits(dim);
    for (size_t i = 0; i < dim; ++i) bits[i] = kappa2_bits[i] != 0;
    kf::Gf2Functional phi = kf::construct_extension_bits(bits);
    for (size_t i = 0; i < dim; ++i)
      phi_out[i] = phi.coefficients[i] ? 1 : 0;
  });
}

}  // extern "C"
