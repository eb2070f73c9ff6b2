#include "mpring/json_io.hpp"

#include <fstream>

#include "mpring/mp.hpp"

namespace mpring {

MatrixElement matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    for (const char* key : {"ring", "n", "matrix"})
        if (!j.contains(key)) throw ParseError(std::string("matrix JSON missing \"") + key + "\"");
    if (!j["ring"].is_string() || !j["n"].is_number_integer() || !j["matrix"].is_array())
        throw ParseError("matrix JSON has wrong field types");

    const int n = j["n"].get<int>();
    RingContext ring = RingContext::make(j["ring"].get<std::string>(), n);
    const auto& rows = j["matrix"];
    if (static_cast<int>(rows.size()) != n) throw ParseError("matrix has wrong row count");

    MatrixElement out(ring, n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
        for (int jj = 0; jj < n; ++jj) {
            if (!row[jj].is_string())
                throw ParseError("matrix entries must be scalar strings");
            out.at(i, jj) = parse_scalar(ring.kind, row[jj].get<std::string>(), ring.modulus);
        }
    }
    return out;
}

Json matrix_to_json(const MatrixElement& a) {
    Json j;
    j["ring"] = a.ring().id();
    j["n"] = a.ring().n;
    Json rows = Json::array();
    for (int i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < a.cols(); ++jj) row.push_back(a.at(i, jj).to_string());
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace

MatrixElement matrix_from_file(const std::string& path) {
    return matrix_from_json(load_json_file(path));
}

StatementInputs inputs_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("statement input JSON must be an object");
    StatementInputs in;
    std::optional<RingContext> ring;
    auto take = [&](const char* key, std::optional<MatrixElement>& slot) {
        if (!j.contains(key)) return;
        slot = matrix_from_json(j[key]);
        if (ring && slot->ring() != *ring)
            throw ParseError(std::string("element \"") + key + "\" is over a different ring");
        ring = slot->ring();
    };
    take("p", in.p);
    take("q", in.q);
    take("a", in.a);
    take("b", in.b);
    take("d", in.d);
    if (!ring) throw ParseError("statement input supplies no elements");
    return in;
}

StatementInputs inputs_from_file(const std::string& path) {
    return inputs_from_json(load_json_file(path));
}

Json penrose_report_to_json(const PenroseReport& report) {
    Json j;
    j["eq1_aba"] = report.eq1_aba;
    j["eq2_bab"] = report.eq2_bab;
    j["eq3_ab_sym"] = report.eq3_ab_sym;
    j["eq4_ba_sym"] = report.eq4_ba_sym;
    j["overall"] = report.overall;
    if (report.witness) {
        j["failed_equation"] = report.failed_equation;
        j["witness_lhs"] = report.witness->first.to_string();
        j["witness_rhs"] = report.witness->second.to_string();
    }
    return j;
}

Json mp_result_to_json(const MpResult& result) {
    Json j;
    j["exists"] = result.exists;
    j["method"] = to_string(result.method);
    if (result.inverse) j["inverse"] = matrix_to_json(*result.inverse);
    if (result.report) j["report"] = penrose_report_to_json(*result.report);
    return j;
}

} // namespace mpring
