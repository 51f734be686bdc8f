#pragma once

#include "quandle/parser.hpp"
#include "quandle/presentation.hpp"
#include "quandle/verify.hpp"

#include <string>
#include <vector>

namespace quandle {

/// Parameters of the link family: a two-bridge link built from k
/// right-handed half-twists and a p/q-tangle, together with an unknotted
/// axis. Normal form keeps q >= 2, gcd(p,q) = 1 and 0 < p < q; flypes
/// trade p +- q against k +- 1 to reach it.
struct FamilyParams {
    int k = 0;
    int p = 0;
    int q = 0;

    /// kq - p; never zero in normal form.
    int twist_defect() const { return k * q - p; }

    /// Half-twist word exponent: k/2 for even k, (k-1)/2 for odd k.
    /// Both divisions are exact, so this is sign-safe.
    int t() const { return k % 2 == 0 ? k / 2 : (k - 1) / 2; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Validates and flype-normalizes (k, p, q).
/// Throws std::invalid_argument when q < 2, p = 0 mod q (trivial
/// tangle), or gcd(p, q) != 1 (extra tangle components).
FamilyParams normalize_params(int k, int p, int q);

/// Parameters of the mirror image: k' = 1 - k, p' = q - p.
FamilyParams mirror_params(const FamilyParams& fp);

/// Under-crossing symbols seen along a strand of the p/q-tangle:
/// Right is the arc entering from the right; Bottom and Top are the arcs
/// leaving on the left after the half-twist block (their generator words
/// depend on the parity of k and are assigned when building the
/// presentation).
enum class TangleArc { Right, Bottom, Top };

/// Where a strand of the tangle ends.
enum class StrandEnd { GeneratorB, BottomArc, TopArc };

/// The two strand paths through the p/q-tangle, recorded as the ordered
/// sequence of arcs each strand passes under. Orders follow the
/// slope-one line on the plane tiled with p-by-q rectangles, with the
/// interchangeable Bottom/Top factor pairs gathered Bottom-first.
/// For odd q both strands start on the right (at a and b); for even q
/// the first starts at a and the second enters from the bottom-left arc.
struct TangleWalk {
    std::vector<TangleArc> strand_a;
    std::vector<TangleArc> strand_b;
    StrandEnd end_a = StrandEnd::BottomArc;
    StrandEnd end_b = StrandEnd::TopArc;
    bool second_starts_at_bottom = false;

    int count(TangleArc arc) const;
};

/// Requires 0 < p < q and gcd(p, q) = 1.
TangleWalk tangle_grid_walk(int p, int q);

/// Three-generator presentation {a, b, c} read off the diagram: the axis
/// relation c^(ab) = c plus the two tangle relations from the grid walk,
/// with the half-twist arc labels substituted and flattened.
Presentation raw_presentation(const FamilyParams& fp);

/// The equivalent reduced presentation; its tangle relations depend only
/// on the parity of kq - p.
Presentation reduced_presentation(const FamilyParams& fp);

/// One generator per arc of the diagram, one relation per crossing.
/// Arcs are the over-strand classes of the PD edge labels. An empty code
/// is the unknot: one generator, no relations.
Presentation wirtinger_presentation(const PdCode& pd);

/// |Q2| = 2q(|kq-p| + 1).
long long expected_cardinality(const FamilyParams& fp);

/// Component orders, keyed by the parity of d = kq-p: {2q|d|, 2q} for
/// odd d and {q|d|, q|d|, 2q} for even d, sorted ascending.
std::vector<long long> expected_components(const FamilyParams& fp);

/// The full relation suite the enumerated quandle must satisfy: the
/// defining relations, the derived families R4-R8 with alpha, beta and
/// gamma (gamma instantiated for 0 <= i < 2q, which covers all i by
/// 2q-periodicity), the all-element consequences of the axis relation,
/// the half-twist label exchange identities, and the secondary relations
/// SR1-SR3.
std::vector<SuiteEntry> lemma_relation_suite(const FamilyParams& fp);

} // namespace quandle
