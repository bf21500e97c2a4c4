#include "sepcert/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sepcert/error.hpp"

namespace sepcert::io {

using exact::Integer;
using exact::Rational;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational parse_rational_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  fail("expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer parse_integer_json(const Json& j) {
  const Rational r = parse_rational_json(j);
  if (r.get_den() != 1) fail("expected an integer, got " + j.dump());
  return r.get_num();
}

std::int64_t parse_i64(const Json& j) {
  const Integer z = parse_integer_json(j);
  if (!exact::fits_i64(z)) fail("integer out of range: " + j.dump());
  return exact::to_i64(z);
}

std::size_t parse_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json ring_elem_to_json(const residue::RingElem& e) {
  if (e.size() == 1) return e[0];
  Json a = Json::array();
  for (auto c : e) a.push_back(c);
  return a;
}

residue::RingElem parse_ring_elem(const Json& j, const residue::FiniteRing& ring) {
  residue::RingElem e;
  if (j.is_array()) {
    for (const auto& c : j) e.push_back(parse_i64(c));
  } else {
    e.push_back(parse_i64(j));
  }
  if (e.size() != ring.degree()) fail("ring element " + j.dump() + " has the wrong length for " + ring.to_string());
  for (auto c : e)
    if (c < 0 || c >= ring.modulus()) fail("ring element " + j.dump() + " is not reduced mod " + std::to_string(ring.modulus()));
  return e;
}

Json finite_matrix_to_json(const residue::FiniteMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.n; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n; ++c) row.push_back(ring_elem_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

residue::FiniteMatrix parse_finite_matrix(const Json& j, const residue::FiniteRing& ring, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail("finite matrix must have " + std::to_string(n) + " rows");
  residue::FiniteMatrix m{n, {}};
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) fail("finite matrix row must have " + std::to_string(n) + " entries");
    for (const auto& x : row) m.entries.push_back(parse_ring_elem(x, ring));
  }
  return m;
}

Json tuple_to_json(const residue::ImageTuple& t) {
  Json a = Json::array();
  for (const auto& m : t) a.push_back(finite_matrix_to_json(m));
  return a;
}

residue::ImageTuple parse_tuple(const Json& j, const std::vector<residue::FiniteRing>& rings, std::size_t n) {
  if (!j.is_array() || j.size() != rings.size()) fail("image needs one matrix per residue map");
  residue::ImageTuple t;
  for (std::size_t i = 0; i < rings.size(); ++i) t.push_back(parse_finite_matrix(j[i], rings[i], n));
  return t;
}

Json poly_to_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(Json::parse(c.get_str()));
  return a;
}

IntPoly parse_poly_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("polynomial must be a non-empty coefficient array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(parse_integer_json(x));
  return IntPoly(std::move(c));
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

FieldPtr parse_field(const Json& j) {
  const IntPoly f = parse_poly_json(j);
  if (f.degree() == 1 && f.leading() == 1) return nfield::NumberField::rationals();
  try {
    return nfield::NumberField::create(f);
  } catch (const Error& e) {
    fail(std::string("bad field: ") + e.what());
  }
}

Json field_to_json(const FieldPtr& field) { return poly_to_json(field->minimal_poly()); }

FieldElement parse_element(const Json& j, const FieldPtr& field) {
  if (!j.is_array()) return FieldElement(parse_rational_json(j)).with_field(field);
  if (j.empty() || j.size() > field->degree())
    fail("element " + j.dump() + " needs 1.." + std::to_string(field->degree()) + " coefficients");
  std::vector<Rational> c(field->degree(), Rational(0));
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = parse_rational_json(j[i]);
  return FieldElement(field, std::move(c));
}

Json element_to_json(const FieldElement& x, const FieldPtr& field) {
  const FieldElement y = x.with_field(field);
  if (field->is_rationals()) return y.coords()[0].get_str();
  Json a = Json::array();
  for (const auto& c : y.coords()) a.push_back(c.get_str());
  return a;
}

Matrix parse_matrix(const Json& j, const FieldPtr& field, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail("matrix must have " + std::to_string(n) + " rows: " + j.dump());
  std::vector<FieldElement> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) fail("matrix row must have " + std::to_string(n) + " entries: " + row.dump());
    for (const auto& x : row) entries.push_back(parse_element(x, field));
  }
  return Matrix(n, std::move(entries));
}

Json matrix_to_json(const Matrix& m, const FieldPtr& field) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(element_to_json(m(r, c), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupDescription parse_group(const Json& j, const FieldPtr& field, std::size_t n) {
  if (!j.is_array()) fail("generator list must be an array");
  GroupDescription g;
  g.field = field;
  g.n = n;
  std::size_t k = 0;
  for (const auto& gen : j) {
    std::string label = "g" + std::to_string(k++);
    if (gen.is_object()) {
      if (gen.contains("label")) {
        if (!gen.at("label").is_string()) fail("label must be a string");
        label = gen.at("label").get<std::string>();
      }
      g.generators.push_back({label, parse_matrix(field_of(gen, "matrix"), field, n)});
    } else {
      g.generators.push_back({label, parse_matrix(gen, field, n)});
    }
  }
  try {
    g.validate();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInvertible || e.code() == ErrorCode::InvalidArgument) fail(e.what());
    throw;
  }
  return g;
}

Json group_to_json(const GroupDescription& g) {
  Json a = Json::array();
  for (const auto& gen : g.generators) {
    Json o;
    o["label"] = gen.label;
    o["matrix"] = matrix_to_json(gen.matrix, g.field);
    a.push_back(std::move(o));
  }
  return a;
}

void apply_config(const Json& j, separator::Options& opts) {
  if (!j.is_object()) fail("config must be an object");
  try {
    if (j.contains("relation_bound")) opts.relation_bound = j.at("relation_bound").get<long>();
    if (j.contains("search_limit")) opts.search_limit = j.at("search_limit").get<long>();
    if (j.contains("closure_cap")) opts.closure_cap = j.at("closure_cap").get<std::size_t>();
    if (j.contains("fast_path")) opts.fast_path = j.at("fast_path").get<bool>();
    if (j.contains("jobs")) opts.jobs = j.at("jobs").get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("bad config: ") + e.what());
  }
}

Problem parse_problem(const Json& j) {
  Problem p;
  const FieldPtr field = j.contains("field") ? parse_field(j.at("field")) : nfield::NumberField::rationals();
  const std::size_t n = parse_size(field_of(j, "n"), "n");
  if (n == 0) fail("n must be positive");
  p.gamma = parse_group(field_of(j, "gamma"), field, n);
  p.H = parse_group(field_of(j, "H"), field, n);
  p.h = parse_matrix(field_of(j, "h"), field, n);
  if (!p.h.is_invertible()) fail("h is singular");
  if (j.contains("config")) apply_config(j.at("config"), p.options);
  return p;
}

Problem load_problem(const std::string& path) { return parse_problem(read_json_file(path)); }

Json problem_to_json(const Problem& p) {
  Json j;
  j["field"] = field_to_json(p.gamma.field);
  j["n"] = p.gamma.n;
  j["gamma"] = group_to_json(p.gamma);
  j["H"] = group_to_json(p.H);
  j["h"] = matrix_to_json(p.h, p.gamma.field);
  Json c;
  c["relation_bound"] = p.options.relation_bound;
  c["search_limit"] = p.options.search_limit;
  c["closure_cap"] = p.options.closure_cap;
  c["fast_path"] = p.options.fast_path;
  j["config"] = std::move(c);
  return j;
}

Json certificate_to_json(const separator::SeparationCertificate& cert, const FieldPtr& field, std::size_t n) {
  Json j;
  j["field"] = field_to_json(field);
  j["n"] = n;
  j["method"] = cert.method;
  Json comps = Json::array();
  for (const auto& c : cert.hom.components) {
    Json o;
    o["q"] = c.target().modulus();
    o["g"] = poly_to_json(c.target().poly());
    Json avoid = Json::array();
    for (const auto& a : c.avoid()) avoid.push_back(Json::parse(a.get_str()));
    o["avoid"] = std::move(avoid);
    comps.push_back(std::move(o));
  }
  j["components"] = std::move(comps);
  auto images = [](const std::vector<separator::LabeledImage>& list) {
    Json a = Json::array();
    for (const auto& x : list) {
      Json o;
      o["label"] = x.label;
      o["images"] = tuple_to_json(x.image);
      a.push_back(std::move(o));
    }
    return a;
  };
  j["gamma_images"] = images(cert.gamma_images);
  j["H_images"] = images(cert.H_images);
  j["h_image"] = tuple_to_json(cert.h_image);
  j["closure_order"] = cert.closure_order;
  if (cert.conjugator) j["conjugator"] = matrix_to_json(*cert.conjugator, field);
  return j;
}

separator::SeparationCertificate parse_certificate(const Json& j, const FieldPtr& field) {
  separator::SeparationCertificate cert;
  const FieldPtr own = parse_field(field_of(j, "field"));
  if (!own->same_as(*field)) fail("certificate field " + own->to_string() + " differs from " + field->to_string());
  const std::size_t n = parse_size(field_of(j, "n"), "n");
  if (j.contains("method")) cert.method = j.at("method").is_string() ? j.at("method").get<std::string>() : "";
  const Json& comps = field_of(j, "components");
  if (!comps.is_array()) fail("components must be an array");
  std::vector<residue::FiniteRing> rings;
  for (const auto& c : comps) {
    const std::int64_t q = parse_i64(field_of(c, "q"));
    if (q < 2) fail("modulus must be at least 2");
    IntPoly g = parse_poly_json(field_of(c, "g"));
    std::vector<Integer> avoid;
    if (c.contains("avoid")) {
      if (!c.at("avoid").is_array()) fail("avoid must be an array");
      for (const auto& a : c.at("avoid")) avoid.push_back(parse_integer_json(a));
    }
    if (g.degree() < 1 || g.leading() != 1) fail("residue polynomial must be monic of positive degree");
    residue::FiniteRing ring(q, std::move(g));
    rings.push_back(ring);
    cert.hom.components.emplace_back(field, std::move(ring), std::move(avoid));
  }
  auto images = [&](const Json& a) {
    if (!a.is_array()) fail("image list must be an array");
    std::vector<separator::LabeledImage> out;
    for (const auto& x : a) {
      const Json& label = field_of(x, "label");
      if (!label.is_string()) fail("label must be a string");
      out.push_back({label.get<std::string>(), parse_tuple(field_of(x, "images"), rings, n)});
    }
    return out;
  };
  cert.gamma_images = images(field_of(j, "gamma_images"));
  cert.H_images = images(field_of(j, "H_images"));
  cert.h_image = parse_tuple(field_of(j, "h_image"), rings, n);
  cert.closure_order = parse_size(field_of(j, "closure_order"), "closure_order");
  if (j.contains("conjugator")) cert.conjugator = parse_matrix(j.at("conjugator"), field, n);
  return cert;
}

FieldElement parse_element_text(std::string_view text, const FieldPtr& field) {
  std::string s(text);
  const auto start = s.find_first_not_of(" \t");
  if (start != std::string::npos && s[start] == '[') return parse_element(parse_json_text(s), field);
  return FieldElement(exact::parse_rational(s)).with_field(field);
}

std::vector<FieldElement> parse_element_list(std::string_view text, const FieldPtr& field) {
  std::vector<FieldElement> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") == std::string::npos) fail("empty element in list");
    out.push_back(parse_element_text(cur, field));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      flush();
      continue;
    }
    cur.push_back(ch);
  }
  if (depth != 0) fail("unbalanced brackets in element list");
  flush();
  return out;
}

IntPoly parse_poly_text(std::string_view text) {
  std::vector<Integer> c;
  std::string cur;
  auto flush = [&] {
    const Rational r = exact::parse_rational(cur);
    if (r.get_den() != 1) fail("polynomial coefficients must be integers");
    c.push_back(r.get_num());
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '[' || ch == ']') continue;
    if (ch == ',') {
      flush();
      continue;
    }
    cur.push_back(ch);
  }
  flush();
  return IntPoly(std::move(c));
}

}  // namespace sepcert::io
