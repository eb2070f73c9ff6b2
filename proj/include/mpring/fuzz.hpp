#ifndef MPRING_FUZZ_HPP
#define MPRING_FUZZ_HPP

#include <map>
#include <optional>

#include "mpring/generators.hpp"
#include "mpring/statements.hpp"

namespace mpring {

/// Seeded statement fuzzing over QQ/QI. Trial t draws its pair kind from a
/// fixed mix (4 generic : 2 commuting : 2 orthogonal : 1 equal :
/// 1 complement) unless `kind` pins one, generates (p, q) plus
/// hypothesis-satisfying inputs for the element statements, and runs every
/// selected statement on them — including the (q, p) swap and, for the
/// existence triple, the complementary pair (1-p, 1-q).
struct FuzzConfig {
    std::string ring_id = "QQ";
    std::uint64_t seed = 0;
    int trials = 100;
    int dim = 3;
    int rank_min = 0;
    int rank_max = -1; // -1: dim
    std::vector<std::string> statements; // empty: all
    std::optional<PairKind> kind;        // pin the pair kind
    std::string corrupt_id;              // self-test hook

    static FuzzConfig from_json(const Json& j);
    Json to_json() const;
};

struct FuzzSummary {
    struct Tally {
        long verified = 0;
        long skipped = 0;
        long falsified = 0;
    };
    FuzzConfig config;
    long trials_run = 0;
    std::map<std::string, Tally> per_statement; // ordered by id
    std::vector<Json> failures;

    bool ok() const { return failures.empty(); }
    Json to_json() const;
    std::string to_text() const;
};

FuzzSummary run_fuzz(const FuzzConfig& config);

} // namespace mpring

#endif
