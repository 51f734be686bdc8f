#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quandle/analysis.hpp"
#include "quandle/link_family.hpp"
#include "quandle/parser.hpp"
#include "quandle/verify.hpp"
#include "quandle/winker.hpp"
#include "test_support.hpp"

using namespace quandle;

namespace {

CayleyTable enumerate_family(const FamilyParams& fp) {
    const EnumerationResult res = enumerate(reduced_presentation(fp));
    REQUIRE(res.finite());
    return *res.table;
}

} // namespace

TEST_CASE("component decomposition") {
    const CayleyTable one = testing::enumerate_text("gens: a; rels: ;");
    const ComponentReport r1 = components(one);
    CHECK(r1.count == 1);
    CHECK(r1.sizes == std::vector<long long>{1});

    const CayleyTable hopf = testing::enumerate_text("gens: a b; rels: a^b = a; b^a = b;");
    const ComponentReport r2 = components(hopf);
    CHECK(r2.count == 2);
    CHECK(r2.sizes == std::vector<long long>{1, 1});
    CHECK(r2.membership == std::vector<int>{0, 1});

    const CayleyTable big = enumerate_family(FamilyParams{2, 1, 3});
    const ComponentReport r3 = components(big);
    CHECK(r3.sizes == std::vector<long long>{6, 30});
    long long total = 0;
    for (long long s : r3.sizes) total += s;
    CHECK(total == big.size());
    // members lists partition the elements
    std::vector<char> seen(static_cast<size_t>(big.size()), 0);
    for (const auto& comp : r3.members) {
        for (int v : comp) {
            CHECK_FALSE(seen[static_cast<size_t>(v)]);
            seen[static_cast<size_t>(v)] = 1;
            CHECK(r3.membership[static_cast<size_t>(v)] ==
                  r3.membership[static_cast<size_t>(comp[0])]);
        }
    }
}

TEST_CASE("axiom checks accept enumerated quandles and catch corruption") {
    const CayleyTable t = enumerate_family(FamilyParams{1, 1, 2});
    REQUIRE(t.size() == 8);
    QuandleOpTable op = full_op_table(t);
    CHECK(check_axioms(op).all_passed());

    CHECK(check_axioms(testing::dihedral_op_table(3)).all_passed());
    CHECK(check_axioms(testing::dihedral_op_table(5)).all_passed());

    // break the involution at (0, 1)
    QuandleOpTable broken = op;
    broken.table[1] = (broken.table[1] + 1) % broken.size;
    const VerificationReport report = check_axioms(broken);
    CHECK_FALSE(report.all_passed());
    bool found_a2 = false;
    for (const CheckResult& c : report.checks) {
        if (!c.passed && c.name.rfind("A2", 0) == 0) {
            found_a2 = true;
            CHECK(c.witness == "(0,1)");
        }
    }
    CHECK(found_a2);
}

TEST_CASE("verify_relations reports witnesses on corrupted tables") {
    const FamilyParams fp{2, 1, 3};
    CayleyTable t = enumerate_family(fp);
    REQUIRE(verify_relations(t, lemma_relation_suite(fp)).all_passed());

    // swap two non-loop edges of one generator column consistently to
    // leave an involution but break the relations
    CayleyTable corrupted = t;
    const int g = 0;
    int x = -1, y = -1;
    for (int v = 0; v < corrupted.size() && x < 0; ++v) {
        if (corrupted.act(v, g) != v) x = v;
    }
    for (int v = corrupted.size() - 1; v >= 0 && y < 0; --v) {
        if (corrupted.act(v, g) != v && v != x && corrupted.act(x, g) != v) y = v;
    }
    REQUIRE(x >= 0);
    REQUIRE(y >= 0);
    const int xs = corrupted.act(x, g), ys = corrupted.act(y, g);
    auto set = [&](int v, int w) {
        corrupted.action[static_cast<size_t>(v) * static_cast<size_t>(corrupted.num_generators) +
                         static_cast<size_t>(g)] = w;
    };
    set(x, ys);
    set(ys, x);
    set(y, xs);
    set(xs, y);
    const VerificationReport report = verify_relations(corrupted, lemma_relation_suite(fp));
    CHECK_FALSE(report.all_passed());
    CHECK(report.first_failure() != nullptr);
    CHECK_FALSE(report.first_failure()->witness.empty());
}

TEST_CASE("isomorphism search finds the identity") {
    const CayleyTable t = enumerate_family(FamilyParams{2, 1, 3});
    const IsoResult iso = is_isomorphic(t, t);
    REQUIRE(iso.isomorphic);
    // lexicographically smallest witness: generator seeds map to themselves
    CHECK(iso.generator_images ==
          std::vector<int>{t.seed[0], t.seed[1], t.seed[2]});
    for (int v = 0; v < t.size(); ++v) {
        CHECK(iso.full_map[static_cast<size_t>(v)] == v);
    }
}

TEST_CASE("isomorphism results intertwine the quandle operations") {
    const CayleyTable s = enumerate_family(FamilyParams{1, 1, 2});
    const CayleyTable t = enumerate_family(mirror_params(FamilyParams{1, 1, 2}));
    const IsoResult iso = is_isomorphic(s, t);
    REQUIRE(iso.isomorphic);
    for (int x = 0; x < s.size(); ++x) {
        for (int y = 0; y < s.size(); ++y) {
            const int lhs = iso.full_map[static_cast<size_t>(quandle_op(s, x, y))];
            const int rhs = quandle_op(t, iso.full_map[static_cast<size_t>(x)],
                                       iso.full_map[static_cast<size_t>(y)]);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("size and component mismatches are rejected with reasons") {
    const CayleyTable small = enumerate_family(FamilyParams{1, 1, 2});  // 8 elements
    const CayleyTable large = enumerate_family(FamilyParams{1, 1, 3});  // 18 elements
    const IsoResult bad = is_isomorphic(small, large);
    CHECK_FALSE(bad.isomorphic);
    CHECK(bad.reason.find("size") != std::string::npos);

    // same size, different structure: the 4-element trivial quandle vs
    // the dihedral quandle on Z/4
    const CayleyTable trivial4 =
        testing::enumerate_text("gens: a b c d; rels: a^b = a; a^c = a; a^d = a; "
                                "b^a = b; b^c = b; b^d = b; c^a = c; c^b = c; c^d = c; "
                                "d^a = d; d^b = d; d^c = d;");
    REQUIRE(trivial4.size() == 4);
    const CayleyTable r4 = testing::enumerate_text(
        "gens: a b; rels: a^((b a)^2) = a; b^((a b)^2) = b;");
    REQUIRE(r4.size() == 4);
    CHECK(testing::op_tables_isomorphic_bruteforce(full_op_table(r4),
                                                   testing::dihedral_op_table(4)));
    const IsoResult mismatch = is_isomorphic(trivial4, r4);
    CHECK_FALSE(mismatch.isomorphic);
    CHECK_FALSE(mismatch.reason.empty());
}

TEST_CASE("isomorphism search is symmetric") {
    const CayleyTable a = enumerate_family(FamilyParams{1, 1, 2});
    const CayleyTable b = enumerate_family(mirror_params(FamilyParams{1, 1, 2}));
    const CayleyTable c = enumerate_family(FamilyParams{2, 1, 3});
    CHECK(is_isomorphic(a, b).isomorphic == is_isomorphic(b, a).isomorphic);
    CHECK(is_isomorphic(a, c).isomorphic == is_isomorphic(c, a).isomorphic);
    CHECK_FALSE(is_isomorphic(a, c).isomorphic);
}

TEST_CASE("isomorphism agrees with the brute-force oracle on small tables") {
    const CayleyTable trefoil = testing::enumerate_text(
        "gens: a b c; rels: a^c = b; b^a = c; c^b = a;");
    const CayleyTable hopf = testing::enumerate_text("gens: a b; rels: a^b = a; b^a = b;");
    CHECK(is_isomorphic(trefoil, trefoil).isomorphic ==
          testing::op_tables_isomorphic_bruteforce(full_op_table(trefoil),
                                                   full_op_table(trefoil)));
    CHECK(is_isomorphic(trefoil, hopf).isomorphic == false);
    CHECK(testing::op_tables_isomorphic_bruteforce(full_op_table(trefoil),
                                                   full_op_table(hopf)) == false);
}

TEST_CASE("structure summary is deterministic and sorted") {
    const CayleyTable t = enumerate_family(FamilyParams{3, 3, 5});
    const StructureSummary summary = structure_summary(t);
    CHECK(summary.size == 130);
    CHECK(summary.component_sizes == std::vector<long long>{10, 60, 60});
    CHECK(summary.generator_fixed_points.size() == 3);
    const StructureSummary again = structure_summary(t);
    CHECK(again.size == summary.size);
    CHECK(again.component_sizes == summary.component_sizes);
    CHECK(again.generator_fixed_points == summary.generator_fixed_points);
}

TEST_CASE("full op table of known small quandles") {
    // Hopf link: both actions fix both elements
    const CayleyTable hopf = testing::enumerate_text("gens: a b; rels: a^b = a; b^a = b;");
    const QuandleOpTable op = full_op_table(hopf);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            CHECK(op.op(x, y) == x);
        }
    }
    // one-element quandle
    const CayleyTable one = testing::enumerate_text("gens: a; rels: ;");
    const QuandleOpTable op1 = full_op_table(one);
    CHECK(op1.size == 1);
    CHECK(op1.op(0, 0) == 0);
}
