#include "morse/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "morse/error.hpp"

namespace morse::io {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

template <class T>
std::vector<T> parse_numbers(const std::string& text, std::size_t line_no) {
  std::vector<T> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_error(line_no, "not an integer: '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return in;
}

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

Simplex simplex_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) parse_error(where, "simplex must be a nonempty array");
  std::vector<Vertex> v;
  for (const Json& x : j) {
    if (!x.is_number_unsigned()) parse_error(where, "vertex ids must be nonnegative integers");
    v.push_back(x.get<Vertex>());
  }
  try {
    return Simplex(std::move(v));
  } catch (const Error& e) {
    parse_error(where, e.what());
  }
}

Simplex simplex_from(const Json& j, std::size_t line_no) { return simplex_from(j, "line " + std::to_string(line_no)); }

}  // namespace

Complex read_cplx(std::istream& in) {
  std::vector<Simplex> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto values = parse_numbers<Vertex>(strip_comment(line), line_no);
    if (values.empty()) continue;
    try {
      facets.emplace_back(std::move(values));
    } catch (const Error& e) {
      parse_error(line_no, e.what());
    }
  }
  return Complex::closure(facets);
}

Complex read_cplx_file(const std::string& path) {
  auto in = open(path);
  return read_cplx(in);
}

void write_cplx(std::ostream& out, const Complex& k) {
  for (const Simplex& f : k.facets()) {
    for (std::size_t i = 0; i < f.vertices().size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

MorseSequence read_sequence(std::istream& in, const std::optional<Complex>& target) {
  std::vector<MorseItem> items;
  std::vector<Simplex> named;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const std::exception& e) {
      parse_error(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) parse_error(line_no, "expected a JSON object");
    const std::string op = j.contains("op") && j["op"].is_string() ? j["op"].get<std::string>() : "";
    if (op == "fill") {
      if (!j.contains("simplex")) parse_error(line_no, "fill needs simplex");
      items.push_back(Fill{simplex_from(j["simplex"], line_no)});
      named.push_back(std::get<Fill>(items.back()).face);
    } else if (op == "expand") {
      if (!j.contains("sigma") || !j.contains("tau")) parse_error(line_no, "expand needs sigma and tau");
      items.push_back(Expand{simplex_from(j["sigma"], line_no), simplex_from(j["tau"], line_no)});
      named.push_back(std::get<Expand>(items.back()).lower);
      named.push_back(std::get<Expand>(items.back()).upper);
    } else {
      parse_error(line_no, "unknown op '" + op + "'");
    }
  }
  if (target) return MorseSequence{*target, std::move(items)};
  return MorseSequence{Complex::from_faces(std::move(named)), std::move(items)};
}

MorseSequence read_sequence_file(const std::string& path, const std::optional<Complex>& target) {
  auto in = open(path);
  return read_sequence(in, target);
}

Json simplex_json(const Simplex& s) {
  Json j = Json::array();
  for (Vertex v : s.vertices()) j.push_back(v);
  return j;
}

void write_sequence(std::ostream& out, const MorseSequence& seq) {
  for (const MorseItem& item : seq.items) {
    Json j;
    if (const auto* f = std::get_if<Fill>(&item)) {
      j["op"] = "fill";
      j["simplex"] = simplex_json(f->face);
    } else {
      const auto& e = std::get<Expand>(item);
      j["op"] = "expand";
      j["sigma"] = simplex_json(e.lower);
      j["tau"] = simplex_json(e.upper);
    }
    out << j.dump() << '\n';
  }
}

VectorField read_vector_field(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("pairs") || !j["pairs"].is_array()) throw Error(ErrorKind::Parse, "expected an object with a \"pairs\" array");
  std::vector<VectorField::Pair> pairs;
  for (const Json& p : j["pairs"]) {
    const std::string where = "pair " + std::to_string(pairs.size() + 1);
    if (!p.is_object() || !p.contains("sigma") || !p.contains("tau")) parse_error(where, "needs sigma and tau");
    pairs.emplace_back(simplex_from(p["sigma"], where), simplex_from(p["tau"], where));
  }
  return VectorField::from_pairs(std::move(pairs));
}

Json vector_field_json(const VectorField& v) {
  Json pairs = Json::array();
  for (const auto& [sigma, tau] : v.pairs()) {
    pairs.push_back(Json{{"sigma", simplex_json(sigma)}, {"tau", simplex_json(tau)}});
  }
  return Json{{"pairs", pairs}};
}

MorseFunction read_morse_function(std::istream& in, const Complex& k) {
  std::vector<std::int64_t> values(k.size(), 0);
  std::vector<bool> seen(k.size(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto numbers = parse_numbers<std::int64_t>(strip_comment(line), line_no);
    if (numbers.empty()) continue;
    if (numbers.size() < 2) parse_error(line_no, "expected a value followed by vertices");
    std::vector<Vertex> verts;
    for (std::size_t i = 1; i < numbers.size(); ++i) {
      if (numbers[i] < 0) parse_error(line_no, "negative vertex id");
      verts.push_back(static_cast<Vertex>(numbers[i]));
    }
    std::optional<FaceId> id;
    try {
      id = k.find(Simplex(std::move(verts)));
    } catch (const Error& e) {
      parse_error(line_no, e.what());
    }
    if (!id) parse_error(line_no, "not a face of the complex");
    if (seen[*id]) parse_error(line_no, "face given twice");
    seen[*id] = true;
    values[*id] = numbers[0];
  }
  for (FaceId id = 0; id < k.size(); ++id) {
    if (!seen[id]) throw Error(ErrorKind::Parse, "no value for " + k.face(id).to_string());
  }
  return MorseFunction(k, std::move(values));
}

void write_morse_function(std::ostream& out, const MorseFunction& f) {
  const Complex& k = f.complex();
  for (FaceId id = 0; id < k.size(); ++id) {
    out << f[id];
    for (Vertex v : k.face(id).vertices()) out << ' ' << v;
    out << '\n';
  }
}

Json chain_json(const Complex& k, const IdChain& c) {
  Json j = Json::array();
  for (FaceId id : c) j.push_back(simplex_json(k.face(id)));
  return j;
}

Json presented_json(const PresentedChainComplex& cc) {
  Json basis = Json::array();
  Json boundary = Json::array();
  for (std::size_t p = 0; p < cc.basis.size(); ++p) {
    Json labels = Json::array();
    for (const Simplex& s : cc.basis[p]) labels.push_back(simplex_json(s));
    basis.push_back(labels);
    Json cols = Json::array();
    const BitMatrix& m = cc.boundary[p];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json rows = Json::array();
      for (std::size_t r : m.column(c).support()) rows.push_back(r);
      cols.push_back(rows);
    }
    boundary.push_back(cols);
  }
  return Json{{"basis", basis}, {"boundary", boundary}};
}

namespace {

const char* role_name(FaceRole r) {
  switch (r) {
    case FaceRole::Critical: return "critical";
    case FaceRole::Lower: return "lower";
    case FaceRole::Upper: return "upper";
  }
  return "";
}

}  // namespace

Json frames_json(const IndexedSequence& seq, const Frame& ref, const Frame& coref) {
  const Complex& k = seq.complex();
  Json rows = Json::array();
  for (FaceId id = 0; id < k.size(); ++id) {
    rows.push_back(Json{{"simplex", simplex_json(k.face(id))},
                        {"role", role_name(seq.role(id))},
                        {"reference", chain_json(k, ref[id])},
                        {"coreference", chain_json(k, coref[id])}});
  }
  return rows;
}

Json extension_tables_json(const IndexedSequence& seq, const ExtensionMap& ext, const ExtensionMap& coext) {
  const Complex& k = seq.complex();
  Json e = Json::array();
  Json ce = Json::array();
  for (int p = 0; p <= k.dim(); ++p) {
    for (FaceId kappa : seq.critical(p)) {
      e.push_back(Json{{"critical", simplex_json(k.face(kappa))}, {"chain", chain_json(k, ext[kappa])}});
      ce.push_back(Json{{"critical", simplex_json(k.face(kappa))}, {"chain", chain_json(k, coext[kappa])}});
    }
  }
  return Json{{"extension", e}, {"coextension", ce}};
}

void write_dot(std::ostream& out, const IndexedSequence& seq) {
  const Complex& k = seq.complex();
  auto name = [&](FaceId id) { return "\"" + k.face(id).to_string() + "\""; };
  out << "digraph gradient {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (FaceId id = 0; id < k.size(); ++id) {
    out << "  " << name(id);
    if (seq.is_critical(id)) out << " [shape=box, style=filled, fillcolor=gold]";
    out << ";\n";
  }
  for (FaceId id = 0; id < k.size(); ++id) {
    if (seq.role(id) != FaceRole::Lower) continue;
    const FaceId tau = seq.partner(id);
    out << "  " << name(id) << " -> " << name(tau) << " [color=red, penwidth=2];\n";
    for (FaceId b : k.boundary_ids(tau)) {
      if (b != id) out << "  " << name(tau) << " -> " << name(b) << " [style=dashed];\n";
    }
  }
  out << "}\n";
}

void write_text(std::ostream& out, const MorseSequence& seq) {
  for (std::size_t i = 0; i < seq.items.size(); ++i) out << i + 1 << ' ' << to_string(seq.items[i]) << '\n';
}

}  // namespace morse::io
