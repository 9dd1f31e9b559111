#ifndef HOPFKIT_IO_HPP
#define HOPFKIT_IO_HPP

// JSON interchange.  Key order is fixed (ordered_json) so identical
// inputs serialize to identical bytes.  Malformed input throws ParseError.

#include <string>

#include "hopfkit/catalog.hpp"
#include "json.hpp"

namespace hopfkit {

using Json = nlohmann::ordered_json;

Json to_json(const CycNumber& x);
CycNumber cyc_from_json(const Json& j);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);
/// Array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int conductor);

Json to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j);

Json to_json(const ModuleSpec& m);
ModuleSpec module_from_json(const Json& j, int conductor);
Json to_json(const CandidateData& c);
CandidateData candidates_from_json(const Json& j, int conductor);
Json params_to_json(const FamilyParams& p);
FamilyParams params_from_json(const Json& j);
/// {"family", "params", "candidates"}
Json sidecar_json(const Family& f);

Json to_json(const YDDatum& d);
YDDatum datum_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace hopfkit

#endif  // HOPFKIT_IO_HPP
