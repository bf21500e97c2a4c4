#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sepcert/chevalley/chevalley.hpp"
#include "sepcert/error.hpp"
#include "sepcert/io/json_io.hpp"
#include "sepcert/nfield/triangularize.hpp"
#include "sepcert/separator/bs12.hpp"
#include "sepcert/separator/separate.hpp"
#include "sepcert/units/units.hpp"

using namespace sepcert;
using io::Json;
using nfield::FieldPtr;

namespace {

struct Flags {
  std::optional<long> relation_bound, search_limit;
  std::optional<std::size_t> closure_cap;
  std::optional<bool> fast_path;
  std::optional<unsigned> jobs;
  std::string output;

  void apply(separator::Options& o) const {
    if (relation_bound) o.relation_bound = *relation_bound;
    if (search_limit) o.search_limit = *search_limit;
    if (closure_cap) o.closure_cap = *closure_cap;
    if (fast_path) o.fast_path = *fast_path;
    if (jobs) o.jobs = *jobs;
  }
};

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Mathematical: return 1;
    case ErrorClass::Resource: return 2;
    case ErrorClass::Parse: return 3;
  }
  return 1;
}

void emit(const Flags& f, const Json& j) {
  if (f.output.empty()) {
    std::cout << io::dump(j);
    return;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + f.output);
  out << io::dump(j);
}

FieldPtr field_arg(const std::string& text) {
  if (text.empty()) return nfield::NumberField::rationals();
  return io::parse_field(io::parse_json_text("[" + text + "]"));
}

int cmd_separate(const std::string& path, const Flags& f) {
  auto p = io::load_problem(path);
  f.apply(p.options);
  const auto r = separator::separate_abelian(p.gamma, p.H, p.h, p.options);
  std::cerr << "method=" << r.certificate.method << " maps=" << r.certificate.hom.components.size()
            << " closure_order=" << r.certificate.closure_order << "\n";
  emit(f, io::certificate_to_json(r.certificate, p.gamma.field, p.gamma.n));
  return 0;
}

int cmd_verify(const std::string& cert_path, const std::string& problem_path, const Flags& f) {
  auto p = io::load_problem(problem_path);
  f.apply(p.options);
  const auto cert = io::parse_certificate(io::read_json_file(cert_path), p.gamma.field);
  const auto v = separator::verify_certificate(cert, p.gamma, p.H, p.h, p.options.closure_cap);
  std::cout << (v.ok ? "ok" : v.reason) << "\n";
  return v.ok ? 0 : 1;
}

int cmd_chevalley(const std::string& field_text, const std::string& units_text, long r,
                  const std::string& avoid_text, const Flags& f) {
  const FieldPtr field = field_arg(field_text);
  separator::Options o;
  f.apply(o);
  const units::UnitList u{field, io::parse_element_list(units_text, field), o.relation_bound};
  std::vector<exact::Integer> avoid;
  if (!avoid_text.empty())
    for (const auto& c : io::parse_poly_text(avoid_text).coeffs()) avoid.push_back(c);
  const auto m = chevalley::chevalley_modulus(u, r, avoid, o.search());
  std::cout << "q=" << m.q << " r=" << m.r << " w=" << m.structure.torsion_order
            << " free_rank=" << m.structure.free_generators.size() << " image_order=" << m.image_order
            << " tested=" << m.tested << " skipped=" << m.skipped << "\n";
  if (!f.output.empty()) {
    Json j;
    j["q"] = Json::parse(m.q.get_str());
    j["r"] = Json::parse(m.r.get_str());
    j["torsion_order"] = Json::parse(m.structure.torsion_order.get_str());
    Json k = Json::array();
    for (const auto& v : m.kernel) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(Json::parse(x.get_str()));
      k.push_back(std::move(row));
    }
    j["kernel"] = std::move(k);
    j["image_order"] = Json::parse(m.image_order.get_str());
    emit(f, j);
  }
  return 0;
}

int cmd_units_basis(const std::string& field_text, const std::string& units_text, const Flags& f) {
  const FieldPtr field = field_arg(field_text);
  separator::Options o;
  f.apply(o);
  const units::UnitList u{field, io::parse_element_list(units_text, field), o.relation_bound};
  const auto b = units::free_basis(u);
  std::cout << "p=" << b.torsion.order << " I={";
  for (std::size_t i = 0; i < b.indices.size(); ++i) std::cout << (i ? "," : "") << b.indices[i] + 1;
  std::cout << "} D=" << b.index << "\n";
  if (!f.output.empty()) {
    Json j;
    j["p"] = Json::parse(b.torsion.order.get_str());
    Json idx = Json::array();
    for (auto i : b.indices) idx.push_back(i + 1);
    j["I"] = std::move(idx);
    j["D"] = Json::parse(b.index.get_str());
    Json gens = Json::array();
    for (const auto& z : b.generators) gens.push_back(io::element_to_json(z, field));
    j["generators"] = std::move(gens);
    emit(f, j);
  }
  return 0;
}

int cmd_triangularize(const std::string& path, const Flags& f) {
  const Json j = io::read_json_file(path);
  const FieldPtr field = j.contains("field") ? io::parse_field(j.at("field")) : nfield::NumberField::rationals();
  if (!j.contains("n") || !j.at("n").is_number_unsigned()) throw Error(ErrorCode::Parse, "missing n");
  const std::size_t n = j.at("n").get<std::size_t>();
  const char* key = j.contains("generators") ? "generators" : "H";
  if (!j.contains(key)) throw Error(ErrorCode::Parse, "missing generators");
  const auto g = io::parse_group(j.at(key), field, n);
  const auto t = nfield::triangularize_abelian(g);
  std::cout << "P=" << t.P.to_string() << "\n";
  for (const auto& gen : t.conjugated.generators) std::cout << gen.label << " -> " << gen.matrix.to_string() << "\n";
  if (!f.output.empty()) {
    Json out;
    out["P"] = io::matrix_to_json(t.P, field);
    out["conjugated"] = io::group_to_json(t.conjugated);
    emit(f, out);
  }
  return 0;
}

int cmd_demo_bs12(long lo, long hi, const Flags& f) {
  const auto rows = separator::bs12_odd_order(lo, hi);
  bool all = true;
  Json table = Json::array();
  std::cout << "p\torder(a)\todd\trelation\n";
  for (const auto& r : rows) {
    std::cout << r.p << "\t" << r.order_a << "\t" << (r.odd ? "yes" : "no") << "\t" << (r.relation ? "ok" : "FAIL") << "\n";
    all = all && r.odd && r.relation;
    Json o;
    o["p"] = r.p;
    o["order_a"] = r.order_a;
    o["order_t"] = r.order_t;
    o["odd"] = r.odd;
    o["relation"] = r.relation;
    table.push_back(std::move(o));
  }
  std::cout << (all ? "all odd" : "some even") << "\n";
  if (!f.output.empty()) emit(f, table);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepcert: finite quotient separation certificates"};
  app.require_subcommand(1);
  Flags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--relation-bound", flags.relation_bound, "radius of the unit relation search");
    sub->add_option("--search-limit", flags.search_limit, "largest modulus tried");
    sub->add_option("--closure-cap", flags.closure_cap, "largest finite group enumerated");
    sub->add_option("--fast-path", flags.fast_path, "try single primes first (true/false)");
    sub->add_option("--jobs", flags.jobs, "parallel modulus candidates");
    sub->add_option("--output,-o", flags.output, "write JSON here");
  };

  std::string problem, cert, field_text, units_text, avoid_text;
  long r = 2, lo = 3, hi = 97;

  auto* sep = app.add_subcommand("separate", "build a certificate for a problem file");
  sep->add_option("problem", problem)->required();
  add_common(sep);

  auto* ver = app.add_subcommand("verify", "re-check a certificate against a problem file");
  ver->add_option("certificate", cert)->required();
  ver->add_option("problem", problem)->required();
  add_common(ver);

  auto* chev = app.add_subcommand("chevalley", "smallest Chevalley modulus for a unit list");
  chev->add_option("--field", field_text, "minimal polynomial coefficients, ascending");
  chev->add_option("--units", units_text, "comma separated units")->required();
  chev->add_option("--r", r, "power");
  chev->add_option("--avoid", avoid_text, "extra primes to avoid");
  add_common(chev);

  auto* ub = app.add_subcommand("units-basis", "torsion order and free basis of a unit list");
  ub->add_option("--field", field_text, "minimal polynomial coefficients, ascending");
  ub->add_option("--units", units_text, "comma separated units")->required();
  add_common(ub);

  auto* tri = app.add_subcommand("triangularize", "simultaneous triangular form of commuting generators");
  tri->add_option("file", problem)->required();
  add_common(tri);

  auto* demo = app.add_subcommand("demo-bs12", "orders of a in BS(1,2) mod odd primes");
  demo->add_option("--from", lo, "first prime");
  demo->add_option("--to", hi, "last prime");
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*sep) return cmd_separate(problem, flags);
    if (*ver) return cmd_verify(cert, problem, flags);
    if (*chev) return cmd_chevalley(field_text, units_text, r, avoid_text, flags);
    if (*ub) return cmd_units_basis(field_text, units_text, flags);
    if (*tri) return cmd_triangularize(problem, flags);
    if (*demo) return cmd_demo_bs12(lo, hi, flags);
  } catch (const separator::NotUnipotentFreeError& e) {
    Json j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    j["witness"] = e.witness().to_string();
    std::cerr << j.dump() << "\n";
    return exit_code(classify(e.code()));
  } catch (const Error& e) {
    Json j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return exit_code(classify(e.code()));
  }
  return 0;
}
