#pragma once

// JSON and CSV encodings. Complex entries are [re, im] pairs; matrices are
// arrays of rows.

#include <string>

#include <json.hpp>

#include "distvar/canonical.hpp"
#include "distvar/inner.hpp"
#include "distvar/polydisc.hpp"
#include "distvar/symm.hpp"

namespace distvar::io {

using json = nlohmann::json;

json to_json(cplx z);
json to_json(const Matrix& m);
json to_json(const ModelTriple& t);
json to_json(const ModelTuple& t);
json to_json(const Colligation& c);
json to_json(const BivariatePoly& p);
json to_json(const ValidationReport& r);
json to_json(const CertificateBundle& b);
json to_json(const TupleCertificate& c);
json to_json(const VarietySample& s);
json to_json(const SymmSample& s);

cplx complex_from_json(const json& j);
/// Shape-checked; rows == 0 or cols == 0 accept empty arrays.
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what);

ModelTriple triple_from_json(const json& j);
ModelTuple tuple_from_json(const json& j);
Colligation colligation_from_json(const json& j);
BivariatePoly poly_from_json(const json& j);

json points_to_json(const std::vector<VarietyPoint>& pts, Verdict verdict);
std::string points_to_csv(const std::vector<VarietyPoint>& pts);
std::string symm_to_csv(const std::vector<SymmPoint>& pts);

/// Throws Error(InvalidInput) on I/O or parse failure.
json read_json_file(const std::string& path);

}  // namespace distvar::io
