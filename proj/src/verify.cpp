#include "quandle/verify.hpp"

#include <string>

namespace quandle {

namespace {

std::string tuple_witness(std::initializer_list<int> xs) {
    std::string out = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    }
    out += ")";
    return out;
}

} // namespace

VerificationReport check_axioms(const QuandleOpTable& q) {
    const int n = q.size;
    VerificationReport report;

    CheckResult a1{"A1: x>x = x", true, ""};
    for (int x = 0; x < n && a1.passed; ++x) {
        if (q.op(x, x) != x) {
            a1.passed = false;
            a1.witness = tuple_witness({x});
        }
    }
    report.checks.push_back(std::move(a1));

    CheckResult a2{"A2: (x>y)>y = x", true, ""};
    for (int x = 0; x < n && a2.passed; ++x) {
        for (int y = 0; y < n && a2.passed; ++y) {
            if (q.op(q.op(x, y), y) != x) {
                a2.passed = false;
                a2.witness = tuple_witness({x, y});
            }
        }
    }
    report.checks.push_back(std::move(a2));

    CheckResult a3{"A3: (x>y)>z = (x>z)>(y>z)", true, ""};
    for (int x = 0; x < n && a3.passed; ++x) {
        for (int y = 0; y < n && a3.passed; ++y) {
            for (int z = 0; z < n && a3.passed; ++z) {
                if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z))) {
                    a3.passed = false;
                    a3.witness = tuple_witness({x, y, z});
                }
            }
        }
    }
    report.checks.push_back(std::move(a3));

    return report;
}

VerificationReport verify_relations(const CayleyTable& t, const std::vector<SuiteEntry>& suite) {
    VerificationReport report;
    for (const SuiteEntry& entry : suite) {
        CheckResult res{entry.name, true, ""};
        if (const Relation* r = std::get_if<Relation>(&entry.rel)) {
            const int from = t.seed[static_cast<size_t>(r->lhs_base)];
            const int to = t.seed[static_cast<size_t>(r->rhs_base)];
            if (apply_word(t, from, r->word) != to) {
                res.passed = false;
                res.witness = "seed " + std::to_string(from);
            }
        } else {
            const SecondaryRelation& s = std::get<SecondaryRelation>(entry.rel);
            for (int v = 0; v < t.size(); ++v) {
                if (apply_word(t, v, s.word) != v) {
                    res.passed = false;
                    res.witness = "element " + std::to_string(v);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(res));
    }
    return report;
}

} // namespace quandle
