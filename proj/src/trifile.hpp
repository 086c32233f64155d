#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knot.hpp"
#include "manifold.hpp"

namespace kf {

// A parsed triangulation document: the complex, optional orientation signs,
// named knots as vertex loops, and free-form metadata.  Parsing does not
// require the complex to be a valid manifold model; validation happens when
// a model is requested.
struct Document {
  SimplicialComplex::Ptr complex;
  std::vector<int> orientation;  // per tetrahedron in table order; may be empty
  std::vector<std::pair<std::string, std::vector<int>>> knots;
  std::vector<std::pair<std::string, std::string>> meta;

  const std::vector<int>* find_knot(const std::string& name) const;
  CompactModel3::Ptr to_model() const;  // throws InvalidComplex
};

Document parse_document(const std::string& text);
Document read_document(const std::string& path);
std::string write_document(const Document& doc);
void write_document_file(const Document& doc, const std::string& path);

}  // namespace kf
