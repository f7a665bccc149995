#pragma once

// JSON documents exchanged by the command-line tool.
//
// Every document carries "kind" and "schema_version". Complex numbers are
// [re, im] pairs and matrices are arrays of rows. Object keys are sorted, so
// dumping a parsed document reproduces it byte for byte.

#include <iosfwd>
#include <map>
#include <string>

#include "json.hpp"
#include "qgraph/abelian.hpp"
#include "qgraph/constructions.hpp"
#include "qgraph/obstruction.hpp"

namespace qgraph {

using Json = nlohmann::json;
using Metadata = std::map<std::string, std::string>;

inline constexpr int kSchemaVersion = 1;

Json complex_to_json(cplx z);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
/// `where` is a JSON pointer used in error messages.
cplx complex_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);

Json set_to_json(const QuantumSet& set);
SetPtr set_from_json(const Json& j, double tol, const std::string& where = "/set");

Json set_document(const QuantumSet& set, const Metadata& meta = {});
Json graph_document(const QuantumGraph& g, const Metadata& meta = {});
Json operator_document(const Operator& op, const Metadata& meta = {});
Json projection_document(const EdgeProjection& p, const Metadata& meta = {});
Json bicharacter_document(const Bicharacter& b, const Metadata& meta = {});
Json report_document(const Report& r, const Metadata& meta = {});
Json graph_report_document(const QuantumSet& set, const GraphReport& r, const Report& checks,
                           const Metadata& meta = {});
Json certificate_document(const QuantumSet& set, const ObstructionResult& r, const Metadata& meta = {});

/// Checks kind and schema_version.
void expect_kind(const Json& doc, const std::string& kind);
QuantumGraph graph_from_document(const Json& doc, double tol);
Operator operator_from_document(const Json& doc, double tol);
EdgeProjection projection_from_document(const Json& doc, double tol);
Bicharacter bicharacter_from_json(const Json& j, const AbelianGroup& g, double tol);

/// Parses JSON text; malformed input raises InvalidInput with line and column.
Json parse_document(const std::string& text, const std::string& source);
/// Reads a file, or standard input for "-".
Json read_document(const std::string& path, std::istream& stdin_stream);
/// Sorted keys, two-space indent, trailing newline. Rejects NaN and infinity.
std::string dump_document(const Json& doc);

}  // namespace qgraph
