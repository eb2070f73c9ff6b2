#ifndef MPRING_JSON_IO_HPP
#define MPRING_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "mpring/matrix.hpp"

namespace mpring {

using Json = nlohmann::ordered_json;

/// Matrix wire format, bit-exact both ways:
///   { "ring": "QQ" | "QI" | "Zm:<m>" | "ZZ", "n": <dim>,
///     "matrix": [ [ "<scalar>", ... ], ... ] }
MatrixElement matrix_from_json(const Json& j);
Json matrix_to_json(const MatrixElement& a);

MatrixElement matrix_from_file(const std::string& path);

/// Elements of a statement input file: "p", "q" and, where a statement needs
/// them, "a", "b", "d" — each a matrix object sharing one ring.
struct StatementInputs {
    std::optional<MatrixElement> p, q, a, b, d;
};

StatementInputs inputs_from_json(const Json& j);
StatementInputs inputs_from_file(const std::string& path);

Json penrose_report_to_json(const struct PenroseReport& report);
Json mp_result_to_json(const struct MpResult& result);

} // namespace mpring

#endif
