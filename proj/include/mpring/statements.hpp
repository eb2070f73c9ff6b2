#ifndef MPRING_STATEMENTS_HPP
#define MPRING_STATEMENTS_HPP

#include <string>
#include <vector>

#include "mpring/identities.hpp"
#include "mpring/json_io.hpp"

namespace mpring {

/// Stable statement identifiers exposed by the CLI and reports.
const std::vector<std::string>& statement_ids();
bool is_statement_id(const std::string& id);

enum class Outcome { verified, skipped, falsified };
std::string to_string(Outcome outcome);

struct StatementReport {
    std::string id;
    Outcome outcome = Outcome::verified;
    std::string detail;     // hypothesis name, falsified claim, or summary
    Json data = Json::object(); // statement-specific results (F/G/H, flags, ...)
    Json witness = Json::object(); // inputs, on skip/falsify
};

struct RunOptions {
    /// Self-test hook: tamper with the computed value (sign flip, or identity
    /// shift when the value is its own negation) before certification, to
    /// prove the harness detects a falsified identity.
    bool corrupt = false;
};

/// Dispatch one statement over named input elements. Required elements:
///   lemma-intertwine:           a (= a1), b (= a2), d
///   lemma-commuting-product:    a, b
///   lemma-orthogonal-sum:       a, b
///   thm-pencil:                 a, b, p
///   all others:                 p, q
/// Missing elements raise ParseError; unknown ids raise ParseError.
StatementReport run_statement(const std::string& id, const StatementInputs& in,
                              const RunOptions& opts = {});

} // namespace mpring

#endif
