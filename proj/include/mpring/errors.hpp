#ifndef MPRING_ERRORS_HPP
#define MPRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpring {

/// Operands belong to different rings (kind, dimension or modulus mismatch),
/// or shapes are incompatible for the requested operation.
class ContextError : public std::runtime_error {
public:
    explicit ContextError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The operation is not defined over the given ring (e.g. rank factorization
/// over Z_m or Z).
class UnsupportedRing : public std::runtime_error {
public:
    explicit UnsupportedRing(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exhaustive enumeration would exceed the hard candidate budget.
class SearchBudgetExceeded : public std::runtime_error {
public:
    explicit SearchBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed scalar/matrix/config input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A statement's stated hypothesis does not hold for the supplied elements.
/// The statement is skipped, not asserted; the witness reproduces the failure.
class HypothesisViolation : public std::runtime_error {
public:
    HypothesisViolation(std::string statement_id, std::string hypothesis,
                        std::string witness = "")
        : std::runtime_error(statement_id + ": hypothesis not satisfied: " + hypothesis),
          statement_id_(std::move(statement_id)),
          hypothesis_(std::move(hypothesis)),
          witness_(std::move(witness)) {}

    const std::string& statement_id() const { return statement_id_; }
    const std::string& hypothesis() const { return hypothesis_; }
    const std::string& witness() const { return witness_; }

private:
    std::string statement_id_;
    std::string hypothesis_;
    std::string witness_;
};

/// A statement's conclusion failed although its hypotheses were satisfied.
/// This is a hard error: either the implementation is wrong or the claimed
/// identity is false for the witness elements.
class IdentityFalsified : public std::runtime_error {
public:
    IdentityFalsified(std::string statement_id, std::string claim,
                      std::string witness = "")
        : std::runtime_error(statement_id + ": identity falsified: " + claim),
          statement_id_(std::move(statement_id)),
          claim_(std::move(claim)),
          witness_(std::move(witness)) {}

    const std::string& statement_id() const { return statement_id_; }
    const std::string& claim() const { return claim_; }
    const std::string& witness() const { return witness_; }

private:
    std::string statement_id_;
    std::string claim_;
    std::string witness_;
};

} // namespace mpring

#endif
