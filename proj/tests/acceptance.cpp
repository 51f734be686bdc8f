// Acceptance suite: runs the full verification battery over the family
// sweep 2 <= q <= 9, gcd(p, q) = 1, 0 < p < q, -2 <= k <= 3 and prints
// one PASS/FAIL line per criterion.

#include "quandle/analysis.hpp"
#include "quandle/export.hpp"
#include "quandle/link_family.hpp"
#include "quandle/parser.hpp"
#include "quandle/verify.hpp"
#include "quandle/winker.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

using namespace quandle;

namespace {

struct SweepCase {
    FamilyParams fp;
    CayleyTable table;
};

struct Criterion {
    std::string label;
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) {
            passed = false;
            detail = why;
        }
    }
};

std::string param_string(const FamilyParams& fp) {
    return "(k=" + std::to_string(fp.k) + ", p=" + std::to_string(fp.p) +
           ", q=" + std::to_string(fp.q) + ")";
}

int report(std::vector<Criterion>& criteria) {
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::cout << (c.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.label;
        if (!c.passed) {
            std::cout << " -- " << c.detail;
        }
        std::cout << "\n";
        all = all && c.passed;
    }
    std::cout << (all ? "acceptance: all criteria passed\n"
                      : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}

} // namespace

int main() {
    constexpr int kQMax = 9;
    constexpr int kKMin = -2;
    constexpr int kKMax = 3;

    std::vector<Criterion> criteria(8);
    criteria[0].label = "cardinality formula 2q(|kq-p|+1) over the sweep, within 60 s";
    criteria[1].label = "component structure {2q|d|, 2q} (d odd) / {q|d|, q|d|, 2q} (d even)";
    criteria[2].label = "axioms A1, involutory A2, A3 exhaustive for sizes <= 200";
    criteria[3].label = "derived relation suites hold pointwise";
    criteria[4].label = "raw and reduced presentations isomorphic for q <= 7";
    criteria[5].label = "mirror pairs isomorphic, non-mirror pairs distinct";
    criteria[6].label = "two-bridge sanity: trefoil 3/1, figure-eight 5/1, Hopf 2/2";
    criteria[7].label = "byte-identical JSON on repeated enumeration";

    // Enumerate the sweep (criterion 1 also bounds its wall time).
    std::vector<SweepCase> sweep;
    const auto sweep_start = std::chrono::steady_clock::now();
    for (int q = 2; q <= kQMax; ++q) {
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (int k = kKMin; k <= kKMax; ++k) {
                const FamilyParams fp{k, p, q};
                EnumerationResult res = enumerate(reduced_presentation(fp));
                if (!res.finite()) {
                    criteria[0].fail("budget exceeded at " + param_string(fp));
                    continue;
                }
                sweep.push_back({fp, std::move(*res.table)});
            }
        }
    }
    const double sweep_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();

    // 1. cardinality
    for (const SweepCase& c : sweep) {
        if (c.table.size() != expected_cardinality(c.fp)) {
            criteria[0].fail("size " + std::to_string(c.table.size()) + " != " +
                             std::to_string(expected_cardinality(c.fp)) + " at " +
                             param_string(c.fp));
        }
    }
    if (sweep_seconds >= 60.0) {
        criteria[0].fail("sweep took " + std::to_string(sweep_seconds) + " s");
    }
    std::cout << "sweep: " << sweep.size() << " cases enumerated in " << sweep_seconds
              << " s\n";

    // 2. components
    for (const SweepCase& c : sweep) {
        if (components(c.table).sizes != expected_components(c.fp)) {
            criteria[1].fail("component multiset mismatch at " + param_string(c.fp));
        }
    }

    // 3. axioms on small tables
    int axiom_cases = 0;
    for (const SweepCase& c : sweep) {
        if (c.table.size() > 200) continue;
        ++axiom_cases;
        const VerificationReport report = check_axioms(full_op_table(c.table));
        if (!report.all_passed()) {
            criteria[2].fail(report.first_failure()->name + " fails at " +
                             report.first_failure()->witness + " for " + param_string(c.fp));
        }
    }
    if (axiom_cases == 0) criteria[2].fail("no case within the size bound");

    // 4. relation suites
    for (const SweepCase& c : sweep) {
        const VerificationReport report = verify_relations(c.table, lemma_relation_suite(c.fp));
        if (!report.all_passed()) {
            criteria[3].fail(report.first_failure()->name + " fails at " +
                             report.first_failure()->witness + " for " + param_string(c.fp));
        }
    }

    // 5. raw vs reduced
    for (const SweepCase& c : sweep) {
        if (c.fp.q > 7) continue;
        const EnumerationResult raw = enumerate(raw_presentation(c.fp));
        if (!raw.finite()) {
            criteria[4].fail("raw enumeration exceeded budget at " + param_string(c.fp));
            continue;
        }
        if (!is_isomorphic(*raw.table, c.table).isomorphic) {
            criteria[4].fail("raw and reduced differ at " + param_string(c.fp));
        }
    }

    // 6. classification over all sweep pairs
    for (size_t i = 0; i < sweep.size(); ++i) {
        for (size_t j = i + 1; j < sweep.size(); ++j) {
            const bool mirror = mirror_params(sweep[i].fp) == sweep[j].fp;
            const bool iso = is_isomorphic(sweep[i].table, sweep[j].table).isomorphic;
            if (mirror && !iso) {
                criteria[5].fail("mirror pair not isomorphic: " + param_string(sweep[i].fp) +
                                 " vs " + param_string(sweep[j].fp));
            }
            if (!mirror && iso) {
                criteria[5].fail("non-mirror pair isomorphic: " + param_string(sweep[i].fp) +
                                 " vs " + param_string(sweep[j].fp));
            }
        }
    }

    // 7. two-bridge sanity from PD codes
    {
        struct PdCase {
            const char* name;
            const char* code;
            int size;
            size_t comps;
        };
        const PdCase cases[] = {
            {"trefoil", "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)", 3, 1},
            {"figure-eight", "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)", 5, 1},
            {"Hopf", "X(1,3,2,4),X(3,1,4,2)", 2, 2},
        };
        for (const PdCase& pc : cases) {
            const EnumerationResult res = enumerate(wirtinger_presentation(parse_pd(pc.code)));
            if (!res.finite()) {
                criteria[6].fail(std::string(pc.name) + ": budget exceeded");
                continue;
            }
            const ComponentReport comps = components(*res.table);
            if (res.table->size() != pc.size ||
                comps.members.size() != pc.comps) {
                criteria[6].fail(std::string(pc.name) + ": got size " +
                                 std::to_string(res.table->size()) + " with " +
                                 std::to_string(comps.members.size()) + " components");
            }
        }
    }

    // 8. determinism of the JSON export
    for (const SweepCase& c : sweep) {
        const Presentation pres = reduced_presentation(c.fp);
        const EnumerationResult again = enumerate(pres);
        if (!again.finite()) {
            criteria[7].fail("re-enumeration exceeded budget at " + param_string(c.fp));
            continue;
        }
        if (table_to_json(c.table, pres.generators) !=
            table_to_json(*again.table, pres.generators)) {
            criteria[7].fail("JSON differs at " + param_string(c.fp));
        }
    }

    return report(criteria);
}
