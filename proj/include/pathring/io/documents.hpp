#pragma once

// JSON documents read by the command-line tool: cdga's (with optional named
// augmentations), cotorsor descriptions, and punctured-line geometry with
// paths, words, classes and a connection.

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathring/cdga.hpp"
#include "pathring/chen/integrate.hpp"
#include "pathring/cotorsor.hpp"
#include "pathring/errors.hpp"

namespace pathring::io {

using nlohmann::json;

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON in '") + path + "': " + e.what());
  }
}

namespace detail {

inline void only_fields(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError("unknown field '" + k + "' in " + where);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + key + "' in " + where);
  return *it;
}

inline std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + " must be a string");
  return j.get<std::string>();
}

inline Rational rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(str(j, where));
}

inline std::size_t index(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

inline const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  return j;
}

/// [[name, "p/q"], ...]
inline std::vector<NamedTerm> vector_terms(const json& j, const std::string& where) {
  std::vector<NamedTerm> out;
  for (const auto& t : array(j, where)) {
    if (!t.is_array() || t.size() != 2) throw ParseError(where + " entries must be [name, coefficient]");
    out.emplace_back(str(t[0], where), rational(t[1], where));
  }
  return out;
}

}  // namespace detail

struct CDGADocument {
  std::string name;
  CDGA algebra;
  std::vector<Augmentation> augmentations;  // in document order

  const Augmentation& augmentation(const std::string& n) const {
    for (const auto& a : augmentations)
      if (a.name == n) return a;
    throw ParseError("no augmentation named '" + n + "'");
  }
};

/// Fields: degrees, unit, d, product, and optionally name, augmentations.
inline CDGADocument parse_cdga(const json& j) {
  using namespace detail;
  only_fields(j, {"name", "degrees", "unit", "d", "product", "augmentations"}, "cdga document");
  CDGA::Builder b;
  const auto& degrees = field(j, "degrees", "cdga document");
  if (!degrees.is_object()) throw ParseError("degrees must map degree to basis names");
  for (const auto& [k, names] : degrees.items()) {
    int deg;
    try {
      std::size_t used = 0;
      deg = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw ParseError("degree key '" + k + "' is not an integer");
    }
    std::vector<std::string> ns;
    for (const auto& n : array(names, "degree " + k)) ns.push_back(str(n, "basis name"));
    b.basis(deg, ns);
  }
  b.unit(str(field(j, "unit", "cdga document"), "unit"));
  if (j.contains("d"))
    for (const auto& e : array(j["d"], "d")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("d entries must be [source, vector]");
      b.d(str(e[0], "d source"), vector_terms(e[1], "d(" + e[0].dump() + ")"));
    }
  if (j.contains("product"))
    for (const auto& e : array(j["product"], "product")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("product entries must be [a, b, vector]");
      b.product(str(e[0], "product factor"), str(e[1], "product factor"), vector_terms(e[2], "product"));
    }
  CDGADocument doc{j.value("name", std::string("cdga")), b.build(), {}};
  require_valid(doc.algebra);
  if (j.contains("augmentations")) {
    const auto& augs = j["augmentations"];
    if (!augs.is_object()) throw ParseError("augmentations must map names to vectors");
    for (const auto& [n, v] : augs.items()) {
      auto a = make_augmentation(doc.algebra, n, vector_terms(v, "augmentation " + n));
      require_valid(doc.algebra, a);
      doc.augmentations.push_back(std::move(a));
    }
  }
  return doc;
}

inline CDGADocument load_cdga(const std::string& path) { return parse_cdga(read_json(path)); }

// ---------------------------------------------------------------------------

struct CotorsorDocument {
  std::string name;
  std::size_t letters = 0;
  std::size_t truncation = 0;
  std::string kind;  // trivial | translated
  std::vector<Rational> constants;

  TensorWordAlgebra algebra() const { return tensor_word_algebra(letters, truncation); }
  CotorsorData build() const {
    auto H = algebra();
    if (kind == "trivial") return trivial_cotorsor(H);
    return translated_cotorsor(H, constants);
  }
};

/// Fields: cotorsor (trivial | translated), letters, truncation, and
/// constants (one per letter) for translated; optionally name.
inline CotorsorDocument parse_cotorsor(const json& j) {
  using namespace detail;
  only_fields(j, {"name", "cotorsor", "letters", "truncation", "constants"}, "cotorsor document");
  CotorsorDocument doc;
  doc.name = j.value("name", std::string("cotorsor"));
  doc.kind = str(field(j, "cotorsor", "cotorsor document"), "cotorsor");
  if (doc.kind != "trivial" && doc.kind != "translated") throw ParseError("unknown cotorsor kind '" + doc.kind + "'");
  doc.letters = index(field(j, "letters", "cotorsor document"), "letters");
  doc.truncation = index(field(j, "truncation", "cotorsor document"), "truncation");
  if (j.contains("constants"))
    for (const auto& c : array(j["constants"], "constants")) doc.constants.push_back(rational(c, "constant"));
  if (doc.kind == "translated" && doc.constants.size() != doc.letters)
    throw ParseError("translated cotorsor needs one constant per letter");
  return doc;
}

// ---------------------------------------------------------------------------

struct GeometryDocument {
  std::string name;
  chen::PuncturedLine line;
  std::map<std::string, chen::Path> paths;
  std::vector<Word> words;
  std::map<std::string, chen::H0Class> classes;
  std::optional<chen::UnipotentConnection> connection;
  std::vector<std::size_t> splitting;
};

namespace detail {

inline chen::ExactPoint point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + " must be a pair [re, im] of decimal strings");
  return {rational(j[0], where), rational(j[1], where)};
}

inline Word word(const json& j, std::size_t forms, const std::string& where) {
  Word w;
  for (const auto& l : array(j, where)) {
    std::size_t k = index(l, where);
    if (k >= forms) throw ParseError(where + " uses form " + std::to_string(k) + " but there are " + std::to_string(forms));
    w.push_back(static_cast<Letter>(k));
  }
  return w;
}

inline chen::Segment segment(const json& j, const std::string& where) {
  only_fields(j, {"type", "points", "center", "orientation", "turns"}, where);
  std::string type = str(field(j, "type", where), where + " type");
  std::vector<chen::ExactPoint> pts;
  for (const auto& p : array(field(j, "points", where), where + " points")) pts.push_back(point(p, where));
  if (type == "line") {
    if (pts.size() != 2) throw ParseError(where + ": a line has two points");
    return chen::Segment::line(pts[0], pts[1]);
  }
  if (type == "arc") {
    if (pts.size() != 2) throw ParseError(where + ": an arc has two points");
    std::string o = j.contains("orientation") ? str(j["orientation"], "orientation") : "ccw";
    if (o != "ccw" && o != "cw") throw ParseError(where + ": orientation must be ccw or cw");
    int turns = j.contains("turns") ? static_cast<int>(index(j["turns"], "turns")) : 0;
    try {
      return chen::Segment::arc(point(field(j, "center", where), where), pts[0], pts[1], o == "ccw", turns);
    } catch (const InvalidPath& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (type == "bezier") {
    if (pts.size() != 4) throw ParseError(where + ": a bezier has four control points");
    return chen::Segment::bezier(pts[0], pts[1], pts[2], pts[3]);
  }
  throw ParseError(where + ": unknown segment type '" + type + "'");
}

}  // namespace detail

/// Fields: punctures, paths, and optionally name, words, classes,
/// connection, splitting.
inline GeometryDocument parse_geometry(const json& j) {
  using namespace detail;
  only_fields(j, {"name", "punctures", "paths", "words", "classes", "connection", "splitting"}, "geometry document");
  GeometryDocument doc;
  doc.name = j.value("name", std::string("geometry"));
  std::vector<chen::ExactPoint> pts;
  for (const auto& p : array(field(j, "punctures", "geometry document"), "punctures")) pts.push_back(point(p, "puncture"));
  try {
    doc.line = chen::PuncturedLine(pts);
    const auto& paths = field(j, "paths", "geometry document");
    if (!paths.is_object()) throw ParseError("paths must map names to segment lists");
    for (const auto& [n, segs] : paths.items()) {
      std::vector<chen::Segment> s;
      std::size_t i = 0;
      for (const auto& seg : array(segs, "path " + n))
        s.push_back(segment(seg, "path " + n + " segment " + std::to_string(i++)));
      doc.paths.emplace(n, chen::Path(std::move(s)));
    }
  } catch (const InvalidPath& e) {
    throw ParseError(e.what());
  }
  const std::size_t forms = doc.line.form_count();
  if (j.contains("words"))
    for (const auto& w : array(j["words"], "words")) doc.words.push_back(word(w, forms, "word"));
  if (j.contains("classes")) {
    if (!j["classes"].is_object()) throw ParseError("classes must map names to term lists");
    for (const auto& [n, terms] : j["classes"].items()) {
      chen::H0Class c;
      for (const auto& t : array(terms, "class " + n)) {
        only_fields(t, {"word", "coefficient"}, "class " + n + " term");
        add_term(c, word(field(t, "word", "class term"), forms, "class " + n),
                 rational(field(t, "coefficient", "class term"), "coefficient"));
      }
      doc.classes.emplace(n, std::move(c));
    }
  }
  if (j.contains("connection")) {
    const auto& c = j["connection"];
    only_fields(c, {"rank", "entries"}, "connection");
    chen::UnipotentConnection C{index(field(c, "rank", "connection"), "rank"), {}};
    for (const auto& e : array(field(c, "entries", "connection"), "connection entries")) {
      only_fields(e, {"row", "col", "form", "coefficient"}, "connection entry");
      std::size_t form = index(field(e, "form", "connection entry"), "form");
      if (form >= forms) throw ParseError("connection entry uses form " + std::to_string(form) + " out of range");
      const auto& co = field(e, "coefficient", "connection entry");
      chen::ExactComplex z = co.is_array() ? chen::ExactComplex{rational(co.at(0), "coefficient"), rational(co.at(1), "coefficient")}
                                           : chen::ExactComplex{rational(co, "coefficient"), Rational(0)};
      try {
        C.set(index(field(e, "row", "connection entry"), "row"), index(field(e, "col", "connection entry"), "col"), form, z);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
      }
    }
    doc.connection = std::move(C);
  }
  if (j.contains("splitting"))
    for (const auto& k : array(j["splitting"], "splitting")) doc.splitting.push_back(index(k, "splitting"));
  return doc;
}

/// Which of the three document kinds a JSON value holds.
enum class DocumentKind { CDGA, Cotorsor, Geometry };

inline DocumentKind classify(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("cotorsor")) return DocumentKind::Cotorsor;
  if (j.contains("punctures")) return DocumentKind::Geometry;
  if (j.contains("degrees")) return DocumentKind::CDGA;
  throw ParseError("cannot tell the document kind (expected degrees, cotorsor or punctures)");
}

}  // namespace pathring::io
