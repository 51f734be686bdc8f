#pragma once

#include "quandle/cayley.hpp"
#include "quandle/presentation.hpp"
#include "quandle/winker.hpp"

#include <string>
#include <variant>
#include <vector>

namespace quandle {

/// One named check with an optional counterexample description.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness; // empty when passed

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    int failure_count() const {
        int n = 0;
        for (const CheckResult& c : checks) {
            if (!c.passed) ++n;
        }
        return n;
    }
    const CheckResult* first_failure() const {
        for (const CheckResult& c : checks) {
            if (!c.passed) return &c;
        }
        return nullptr;
    }
};

/// Idempotence (A1), the involutory form of A2, and right
/// self-distributivity (A3), checked exhaustively; the witness carries
/// the first failing tuple.
VerificationReport check_axioms(const QuandleOpTable& q);

/// A named relation to verify against an enumerated table. A Relation is
/// checked at the generator seeds; a SecondaryRelation must fix every
/// element.
struct SuiteEntry {
    std::string name;
    std::variant<Relation, SecondaryRelation> rel;
};

VerificationReport verify_relations(const CayleyTable& t, const std::vector<SuiteEntry>& suite);

} // namespace quandle
