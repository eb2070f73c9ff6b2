#ifndef MPRING_FINITE_ORACLE_HPP
#define MPRING_FINITE_ORACLE_HPP

#include "mpring/statements.hpp"

namespace mpring {

/// Exhaustive verification over a finite ring: every ordered projector pair
/// is pushed through every statement, and every formula output is
/// cross-checked against the brute-force MP search. A mismatch means a
/// falsified identity or an engine bug; hypothesis violations are counted as
/// skips of the affected statement.
struct OracleSummary {
    std::string ring_id;
    int dim = 0;
    int projector_count = 0;
    long pairs = 0;
    long formula_checks = 0; // formula-vs-brute comparisons performed
    std::map<std::string, long> verified;
    std::map<std::string, long> skipped;
    std::vector<Json> mismatches;
    /// Pairs where a cancellability hypothesis failed but the formula held
    /// anyway (recorded, never asserted).
    std::vector<Json> observations;

    bool ok() const { return mismatches.empty(); }
    Json to_json() const;
    std::string to_text() const;
};

OracleSummary run_finite_oracle(const RingContext& ring);

} // namespace mpring

#endif
