#pragma once

#include <string>

#include "catalog.hpp"
#include "trifile.hpp"

namespace kf {

// Rendered result of a CLI-level operation: human-readable key/value text
// plus the machine-readable JSON document.  Both are deterministic.
struct ReportResult {
  std::string text;
  std::string json;
  bool ok = true;
};

ReportResult report_validate(const Document& doc);
ReportResult report_homology(const Document& doc, int degree, bool mod2,
                             bool rel_boundary);
ReportResult report_decide(const Document& doc, const std::string& knot,
                           bool cross);
ReportResult report_exterior(const Document& doc, const std::string& knot);

// Document for a generated catalog fixture (used by the generate command).
Document fixture_document(const CatalogSpec& spec);

}  // namespace kf
