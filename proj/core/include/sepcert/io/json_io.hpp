#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepcert/nfield/matrix.hpp"
#include "sepcert/separator/certificate.hpp"
#include "sepcert/separator/options.hpp"

namespace sepcert::io {

using Json = nlohmann::ordered_json;
using exact::IntPoly;
using nfield::FieldElement;
using nfield::FieldPtr;
using nfield::GroupDescription;
using nfield::Matrix;

// Encoding: rationals are strings "p/q"; field elements are coefficient
// arrays ascending in alpha (a bare string or integer is a rational);
// matrices are row-major arrays of rows. All parse failures raise Parse.

struct Problem {
  GroupDescription gamma;
  GroupDescription H;
  Matrix h;
  separator::Options options;
};

Json read_json_file(const std::string& path);
Json parse_json_text(std::string_view text);
/// Indented, key order preserved, trailing newline.
std::string dump(const Json& j);

FieldPtr parse_field(const Json& j);
Json field_to_json(const FieldPtr& field);

FieldElement parse_element(const Json& j, const FieldPtr& field);
Json element_to_json(const FieldElement& x, const FieldPtr& field);

Matrix parse_matrix(const Json& j, const FieldPtr& field, std::size_t n);
Json matrix_to_json(const Matrix& m, const FieldPtr& field);

GroupDescription parse_group(const Json& j, const FieldPtr& field, std::size_t n);
Json group_to_json(const GroupDescription& g);

void apply_config(const Json& j, separator::Options& opts);
Problem parse_problem(const Json& j);
Problem load_problem(const std::string& path);
Json problem_to_json(const Problem& p);

Json certificate_to_json(const separator::SeparationCertificate& cert, const FieldPtr& field, std::size_t n);
separator::SeparationCertificate parse_certificate(const Json& j, const FieldPtr& field);

/// "p/q" or a JSON coefficient array such as "[1,1]".
FieldElement parse_element_text(std::string_view text, const FieldPtr& field);
/// Comma separated elements; commas inside brackets do not split.
std::vector<FieldElement> parse_element_list(std::string_view text, const FieldPtr& field);
/// Comma separated integer coefficients, ascending.
IntPoly parse_poly_text(std::string_view text);

}  // namespace sepcert::io
