// mpring: exact Moore-Penrose inverses of matrices over *-rings (QQ, QI,
// Z_m, Z), statement checking, seeded fuzzing and finite-ring exhaustive
// verification.
//
// Exit codes: 0 verified/computed, 1 non-existence or hypothesis skip,
// 2 input/config error, 3 identity falsified.

#include <iostream>

#include <CLI11.hpp>

#include "mpring/finite_oracle.hpp"
#include "mpring/fuzz.hpp"
#include "mpring/json_io.hpp"
#include "mpring/linalg.hpp"
#include "mpring/statements.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoInverseOrSkip = 1;
constexpr int kExitInputError = 2;
constexpr int kExitFalsified = 3;

struct CommonOpts {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void print_json(const mpring::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_mp(const std::string& input, const CommonOpts& common) {
    mpring::MatrixElement a = mpring::matrix_from_file(input);
    mpring::MpResult result = mpring::mp_inverse(a);
    if (common.json()) {
        print_json(mpring::mp_result_to_json(result));
    } else if (result.exists) {
        std::cout << "MP-inverse exists (method: " << mpring::to_string(result.method) << ")\n"
                  << mpring::matrix_to_json(*result.inverse).dump(2) << "\n"
                  << "Penrose certificate: aba=a bab=b (ab)*=ab (ba)*=ba all hold\n";
    } else {
        std::cout << "no MP-inverse over " << a.ring().id()
                  << " (method: " << mpring::to_string(result.method) << ")\n";
    }
    return result.exists ? kExitOk : kExitNoInverseOrSkip;
}

int cmd_check(const std::string& statement, const std::string& input, const CommonOpts& common) {
    if (!mpring::is_statement_id(statement)) {
        std::cerr << "error: unknown statement id '" << statement << "'\n";
        return kExitInputError;
    }
    mpring::StatementInputs in = mpring::inputs_from_file(input);
    mpring::StatementReport rep = mpring::run_statement(statement, in);

    if (common.json()) {
        mpring::Json j;
        j["statement"] = rep.id;
        j["outcome"] = mpring::to_string(rep.outcome);
        j["detail"] = rep.detail;
        j["data"] = rep.data;
        if (!rep.witness.empty()) j["witness"] = rep.witness;
        print_json(j);
    } else {
        std::cout << rep.id << ": " << mpring::to_string(rep.outcome) << " — " << rep.detail
                  << "\n";
        if (!rep.data.empty()) std::cout << rep.data.dump(2) << "\n";
        if (rep.outcome == mpring::Outcome::falsified)
            std::cout << "witness:\n" << rep.witness.dump(2) << "\n";
    }
    switch (rep.outcome) {
        case mpring::Outcome::verified: return kExitOk;
        case mpring::Outcome::skipped: return kExitNoInverseOrSkip;
        case mpring::Outcome::falsified: return kExitFalsified;
    }
    return kExitInputError;
}

int cmd_fuzz(mpring::FuzzConfig config, const std::string& config_path, const CommonOpts& common) {
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw mpring::ParseError("cannot open '" + config_path + "'");
        mpring::Json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw mpring::ParseError("invalid JSON config: " + std::string(e.what()));
        }
        config = mpring::FuzzConfig::from_json(j);
    }
    mpring::FuzzSummary summary = mpring::run_fuzz(config);
    if (common.json()) print_json(summary.to_json());
    else std::cout << summary.to_text();
    return summary.ok() ? kExitOk : kExitFalsified;
}

int cmd_oracle(const std::string& ring_id, int dim, const CommonOpts& common) {
    mpring::RingContext ring = mpring::RingContext::make(ring_id, dim);
    mpring::OracleSummary summary = mpring::run_finite_oracle(ring);
    if (common.json()) print_json(summary.to_json());
    else std::cout << summary.to_text();
    return summary.ok() ? kExitOk : kExitFalsified;
}

int cmd_demo(const CommonOpts& common) {
    mpring::CounterexampleReport rep = mpring::integer_counterexample_demo();
    if (common.json()) {
        mpring::Json j;
        j["difference_invertible"] = rep.difference_invertible;
        j["sum_has_no_inverse"] = rep.sum_has_no_inverse;
        j["rational_half"] = rep.rational_half;
        j["text"] = rep.text;
        j["ok"] = rep.ok();
        print_json(j);
    } else {
        std::cout << rep.text;
    }
    return rep.ok() ? kExitOk : kExitFalsified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moore-Penrose inverses of projector differences, sums and products "
                 "over exact *-rings"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--format", common.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string input;
    std::string statement;
    std::string ring_id = "QQ";
    int dim = 2;
    mpring::FuzzConfig fuzz_config;
    std::string fuzz_config_path;

    auto* mp = app.add_subcommand("mp", "Compute the MP-inverse of a matrix file");
    mp->add_option("--input", input, "Matrix JSON file")->required();

    auto* check = app.add_subcommand("check", "Run one statement on supplied elements");
    check->add_option("--statement", statement, "Statement id")->required();
    check->add_option("--input", input, "Pair JSON file with p, q (and a, b, d)")->required();

    auto* fuzz = app.add_subcommand("fuzz", "Run statements over seeded random projector pairs");
    fuzz->add_option("--ring", fuzz_config.ring_id, "Ring id (QQ or QI)")->capture_default_str();
    fuzz->add_option("--seed", fuzz_config.seed, "Master seed")->capture_default_str();
    fuzz->add_option("--trials", fuzz_config.trials, "Number of pairs")->capture_default_str();
    fuzz->add_option("--dim", fuzz_config.dim, "Matrix dimension")->capture_default_str();
    std::string fuzz_statement = "all";
    fuzz->add_option("--statement", fuzz_statement, "Statement id or 'all'")
        ->capture_default_str();
    fuzz->add_option("--input", fuzz_config_path,
                     "JSON config (ring, seed, kind, rank_min, rank_max, dim, trials, "
                     "statements); overrides the flags");
    fuzz->add_option("--corrupt", fuzz_config.corrupt_id,
                     "Self-test: tamper with this statement's value before certification")
        ->group("");

    auto* oracle = app.add_subcommand("oracle",
                                      "Exhaustively verify all projector pairs of a finite ring");
    oracle->add_option("--ring", ring_id, "Finite ring id (Zm:<m>)")->required();
    oracle->add_option("--dim", dim, "Matrix dimension")->capture_default_str();

    auto* demo = app.add_subcommand("demo", "The 1x1 integer counterexample: p - q = 0 is "
                                            "MP-invertible while p + q = 2 is not");
    (void)demo;

    CLI11_PARSE(app, argc, argv);

    try {
        if (mp->parsed()) return cmd_mp(input, common);
        if (check->parsed()) return cmd_check(statement, input, common);
        if (fuzz->parsed()) {
            if (fuzz_statement != "all") fuzz_config.statements = {fuzz_statement};
            return cmd_fuzz(fuzz_config, fuzz_config_path, common);
        }
        if (oracle->parsed()) return cmd_oracle(ring_id, dim, common);
        if (demo->parsed()) return cmd_demo(common);
    } catch (const mpring::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const mpring::ContextError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const mpring::UnsupportedRing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const mpring::SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
