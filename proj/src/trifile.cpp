#include "trifile.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace kf {

const std::vector<int>* Document::find_knot(const std::string& name) const {
  for (const auto& [n, loop] : knots)
    if (n == name) return &loop;
  return nullptr;
}

CompactModel3::Ptr Document::to_model() const {
  return CompactModel3::build(complex);
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  fail(ErrorKind::ParseError,
       "line " + std::to_string(line_no) + ": " + msg);
}

// Verify that the per-tetrahedron signs define a coherent orientation.
void check_orientation(const SimplicialComplex& X,
                       const std::vector<int>& signs) {
  std::vector<std::pair<int, int>> induced(X.size(2), {0, 0});
  std::vector<int> count(X.size(2), 0);
  for (int t = 0; t < X.size(3); ++t) {
    const Simplex& tet = X.cell(3, t);
    for (int i = 0; i <= 3; ++i) {
      int f = X.index_of(tet.face_omitting(i));
      int s = signs[t] * (i % 2 == 0 ? 1 : -1);
      if (count[f] == 0)
        induced[f].first = s;
      else
        induced[f].second = s;
      ++count[f];
    }
  }
  for (int f = 0; f < X.size(2); ++f) {
    if (count[f] == 2 && induced[f].first + induced[f].second != 0)
      fail(ErrorKind::ParseError,
           "orientation signs are not coherent at face " + X.cell(2, f).str());
  }
}

}  // namespace

Document parse_document(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_format = false;
  long long vertices = -1;
  std::vector<Simplex> tets;
  std::vector<int> file_signs;
  Document doc;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line = line.substr(0, pos);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;

    if (!saw_format) {
      if (word != "format") parse_fail(line_no, "expected 'format 1' first");
      int version = -1;
      if (!(ls >> version) || version != 1)
        parse_fail(line_no, "unsupported format version");
      saw_format = true;
      continue;
    }
    if (word == "vertices") {
      if (!(ls >> vertices) || vertices < 0)
        parse_fail(line_no, "bad vertex count");
    } else if (word == "tet") {
      if (vertices < 0) parse_fail(line_no, "'vertices' must come first");
      long long a, b, c, d;
      if (!(ls >> a >> b >> c >> d)) parse_fail(line_no, "bad tetrahedron");
      for (long long v : {a, b, c, d})
        if (v < 0 || v >= vertices)
          parse_fail(line_no, "tetrahedron vertex out of range");
      if (a == b || a == c || a == d || b == c || b == d || c == d)
        parse_fail(line_no, "tetrahedron with repeated vertex");
      tets.push_back(Simplex({static_cast<int>(a), static_cast<int>(b),
                              static_cast<int>(c), static_cast<int>(d)}));
    } else if (word == "orient") {
      int s;
      while (ls >> s) {
        if (s != 1 && s != -1) parse_fail(line_no, "orientation sign not +-1");
        file_signs.push_back(s);
      }
    } else if (word == "knot") {
      std::string name;
      if (!(ls >> name)) parse_fail(line_no, "knot needs a name");
      std::vector<int> loop;
      long long v;
      while (ls >> v) {
        if (v < 0 || v >= vertices)
          parse_fail(line_no, "knot vertex out of range");
        loop.push_back(static_cast<int>(v));
      }
      if (loop.size() < 3) parse_fail(line_no, "knot needs >= 3 vertices");
      if (doc.find_knot(name)) parse_fail(line_no, "duplicate knot " + name);
      doc.knots.push_back({name, std::move(loop)});
    } else if (word == "meta") {
      std::string key;
      if (!(ls >> key)) parse_fail(line_no, "meta needs a key");
      std::string rest;
      std::getline(ls, rest);
      if (auto p = rest.find_first_not_of(" \t"); p != std::string::npos)
        rest = rest.substr(p);
      else
        rest.clear();
      doc.meta.push_back({key, rest});
    } else {
      parse_fail(line_no, "unknown directive '" + word + "'");
    }
  }
  if (!saw_format) fail(ErrorKind::ParseError, "empty document");
  if (vertices < 0) fail(ErrorKind::ParseError, "missing 'vertices' line");
  if (tets.empty()) fail(ErrorKind::ParseError, "document has no tetrahedra");

  doc.complex = SimplicialComplex::build(static_cast<int>(vertices), tets);
  if (static_cast<int>(tets.size()) != doc.complex->size(3))
    fail(ErrorKind::ParseError, "duplicate tetrahedra in document");

  if (!file_signs.empty()) {
    if (file_signs.size() != tets.size())
      fail(ErrorKind::ParseError,
           "orientation sign count does not match tetrahedron count");
    // Reorder the file signs into canonical table order.
    doc.orientation.assign(tets.size(), 0);
    for (std::size_t i = 0; i < tets.size(); ++i)
      doc.orientation[doc.complex->index_of(tets[i])] = file_signs[i];
    check_orientation(*doc.complex, doc.orientation);
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string write_document(const Document& doc) {
  std::ostringstream os;
  os << "# knotfiber triangulation\n";
  os << "format 1\n";
  os << "vertices " << doc.complex->vertex_count() << "\n";
  for (int t = 0; t < doc.complex->size(3); ++t) {
    const Simplex& s = doc.complex->cell(3, t);
    os << "tet " << s.v[0] << ' ' << s.v[1] << ' ' << s.v[2] << ' ' << s.v[3]
       << "\n";
  }
  if (!doc.orientation.empty()) {
    os << "orient";
    for (int s : doc.orientation) os << ' ' << s;
    os << "\n";
  }
  for (const auto& [name, loop] : doc.knots) {
    os << "knot " << name;
    for (int v : loop) os << ' ' << v;
    os << "\n";
  }
  for (const auto& [k, v] : doc.meta)
    os << "meta " << k << (v.empty() ? "" : " " + v) << "\n";
  return os.str();
}

void write_document_file(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write file: " + path);
  out << write_document(doc);
}

}  // namespace kf
