// knotfiber command-line tool.  All functionality goes through the C API in
// include/knotfiber.h; this file only parses arguments and prints results.
//
// Exit codes: 0 success, 1 validation failure, 2 file/parse/usage errors.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotfiber.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

int exit_code_for(kf_status s) {
  switch (s) {
    case KF_OK:
      return kExitOk;
    case KF_ERROR_INVALID:
    case KF_ERROR_INTERNAL:
      return kExitInvalid;
    default:
      return kExitUsage;
  }
}

int report_error(kf_status s) {
  std::fprintf(stderr, "error (%s): %s\n", kf_status_name(s),
               kf_last_error());
  return exit_code_for(s);
}

struct DocHandle {
  kf_document* doc = nullptr;
  ~DocHandle() { kf_document_free(doc); }
};

struct ResultHandle {
  kf_result* res = nullptr;
  ~ResultHandle() { kf_result_free(res); }
};

int load(const std::string& path, DocHandle& h) {
  kf_status s = kf_document_read(path.c_str(), &h.doc);
  if (s != KF_OK) return report_error(s);
  return kExitOk;
}

void print_result(const ResultHandle& r, bool json) {
  std::fputs(json ? kf_result_json(r.res) : kf_result_text(r.res), stdout);
  if (json) std::fputc('\n', stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot realizability in tame open 3-manifolds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON instead of text");

  // validate
  std::string v_file;
  auto* cmd_validate =
      app.add_subcommand("validate", "validate a triangulation document");
  cmd_validate->add_option("file", v_file)->required();

  // homology
  std::string h_file;
  int h_degree = 1;
  bool h_mod2 = false, h_rel = false;
  auto* cmd_homology =
      app.add_subcommand("homology", "homology of the model (Z or Z/2)");
  cmd_homology->add_option("file", h_file)->required();
  cmd_homology->add_option("-k,--degree", h_degree, "homology degree")
      ->default_val(1);
  cmd_homology->add_flag("--mod2", h_mod2, "use Z/2 coefficients");
  cmd_homology->add_flag("--rel-boundary", h_rel,
                         "relative to the model boundary (locally finite)");

  // decide
  std::string d_file, d_knot;
  bool d_cross = false;
  auto* cmd_decide =
      app.add_subcommand("decide", "decide realizability of a named knot");
  cmd_decide->add_option("file", d_file)->required();
  cmd_decide->add_option("--knot", d_knot, "knot name")->required();
  cmd_decide->add_flag("--cross-check", d_cross,
                       "also run the framing-calculus consistency checks");

  // exterior
  std::string e_file, e_knot;
  auto* cmd_exterior = app.add_subcommand(
      "exterior", "knot exterior, meridian/longitude, offsets");
  cmd_exterior->add_option("file", e_file)->required();
  cmd_exterior->add_option("--knot", e_knot, "knot name")->required();

  // generate
  std::string g_family, g_knot, g_out;
  int g_n = 2, g_genus = 2, g_handle = 1, g_p = 3, g_q = 1;
  auto* cmd_generate =
      app.add_subcommand("generate", "generate a catalog fixture");
  cmd_generate->add_option("family", g_family, "catalog family")->required();
  cmd_generate->add_option("--knot", g_knot, "knot selector");
  cmd_generate->add_option("--n", g_n, "core_power exponent");
  cmd_generate->add_option("--genus", g_genus, "handlebody genus");
  cmd_generate->add_option("--handle", g_handle, "handle index (1-based)");
  cmd_generate->add_option("--p", g_p, "lens parameter p");
  cmd_generate->add_option("--q", g_q, "lens parameter q");
  cmd_generate->add_option("-o,--output", g_out, "output file")->required();

  // framing
  auto* cmd_framing =
      app.add_subcommand("framing", "sigma-framing arithmetic in Z/2");
  int f_class = 0;
  long f_turns = 1;
  std::string f_kappa2;
  int f_target = 1;
  auto* cmd_twist = cmd_framing->add_subcommand("twist", "meridional twists");
  cmd_twist->add_option("--class", f_class, "framing class (0 or 1)")
      ->required();
  cmd_twist->add_option("--turns", f_turns, "number of full twists")
      ->default_val(1);
  auto* cmd_cable =
      cmd_framing->add_subcommand("cable", "(2,1)-cable revolution class");
  cmd_cable->add_option("--class", f_class, "framing class of the companion")
      ->required();
  auto* cmd_extend = cmd_framing->add_subcommand(
      "extend", "extension criterion for a mod-2 knot class");
  cmd_extend
      ->add_option("--kappa2", f_kappa2,
                   "coordinates of the mod-2 class, e.g. 101 (empty for a "
                   "trivial group)")
      ->default_val("");
  cmd_extend->add_option("--target", f_target, "required value (0 or 1)")
      ->default_val(1);

  CLI11_PARSE(app, argc, argv);

  if (*cmd_validate) {
    DocHandle doc;
    if (int rc = load(v_file, doc)) return rc;
    ResultHandle r;
    kf_status s = kf_validate(doc.doc, &r.res);
    if (s != KF_OK) return report_error(s);
    print_result(r, json);
    return kf_result_ok(r.res) ? kExitOk : kExitInvalid;
  }

  if (*cmd_homology) {
    DocHandle doc;
    if (int rc = load(h_file, doc)) return rc;
    ResultHandle r;
    kf_status s =
        kf_homology(doc.doc, h_degree, h_mod2 ? 1 : 0, h_rel ? 1 : 0, &r.res);
    if (s != KF_OK) return report_error(s);
    print_result(r, json);
    return kExitOk;
  }

  if (*cmd_decide) {
    DocHandle doc;
    if (int rc = load(d_file, doc)) return rc;
    ResultHandle r;
    kf_status s = kf_decide(doc.doc, d_knot.c_str(), d_cross ? 1 : 0, &r.res);
    if (s != KF_OK) return report_error(s);
    print_result(r, json);
    return kExitOk;
  }

  if (*cmd_exterior) {
    DocHandle doc;
    if (int rc = load(e_file, doc)) return rc;
    ResultHandle r;
    kf_status s = kf_exterior(doc.doc, e_knot.c_str(), &r.res);
    if (s != KF_OK) return report_error(s);
    print_result(r, json);
    return kExitOk;
  }

  if (*cmd_generate) {
    std::vector<long> params;
    if (g_family == "solid_torus" && g_knot == "core_power") {
      params = {g_n};
    } else if (g_family == "handlebody") {
      params = {g_genus, g_handle};
    } else if (g_family == "lens_punctured") {
      params = {g_p, g_q};
    }
    DocHandle doc;
    kf_status s =
        kf_generate(g_family.c_str(), g_knot.empty() ? nullptr : g_knot.c_str(),
                    params.empty() ? nullptr : params.data(), params.size(),
                    &doc.doc);
    if (s != KF_OK) return report_error(s);
    s = kf_document_write(doc.doc, g_out.c_str());
    if (s != KF_OK) return report_error(s);
    std::printf("wrote %s\n", g_out.c_str());
    return kExitOk;
  }

  if (*cmd_framing) {
    if (*cmd_twist) {
      std::printf("sigma: %d\n", kf_framing_twist(f_class, f_turns));
      return kExitOk;
    }
    if (*cmd_cable) {
      std::printf("sigma: %d\n", kf_framing_cable(f_class));
      return kExitOk;
    }
    if (*cmd_extend) {
      std::vector<unsigned char> bits;
      for (char c : f_kappa2) {
        if (c != '0' && c != '1') {
          std::fprintf(stderr, "error: --kappa2 must be a 0/1 string\n");
          return kExitUsage;
        }
        bits.push_back(c == '1' ? 1 : 0);
      }
      int exists = 0;
      kf_status s = kf_extension_exists(bits.empty() ? nullptr : bits.data(),
                                        bits.size(), f_target, &exists);
      if (s != KF_OK) return report_error(s);
      std::printf("extension_exists: %s\n", exists ? "yes" : "no");
      if (exists && f_target == 1 && !bits.empty()) {
        std::vector<unsigned char> phi(bits.size(), 0);
        s = kf_construct_extension(bits.data(), bits.size(), phi.data());
        if (s == KF_OK) {
          std::printf("phi:");
          for (unsigned char b : phi) std::printf(" %d", b);
          std::printf("\n");
        }
      }
      return kExitOk;
    }
    std::fprintf(stderr, "error: framing needs twist|cable|extend\n");
    return kExitUsage;
  }

  return kExitUsage;
}
