#include "quandle/link_family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace quandle {

namespace {

constexpr int A = 0;
constexpr int B = 1;
constexpr int C = 2;

const std::vector<GeneratorId> kAbc = {{0, "a"}, {1, "b"}, {2, "c"}};

/// (xy)^m as a word; negative m is the positive power of the reversal.
Word pair_pow(int x, int y, int m) {
    return word_pow(Word({x, y}), m);
}

Word letters(std::initializer_list<int> ls) {
    return Word(std::vector<int>(ls));
}

Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const Word& p : parts) out = concat(out, p);
    return out;
}

/// base1 ^ (w1) = base2 ^ (w2) in normal form.
Relation make_relation(int base1, const Word& w1, int base2, const Word& w2) {
    return Relation(base1, normalize_word(concat(w1, reversed(w2))), base2);
}

/// All-element identity z^(u) = z^(v) as the closed word u reversed(v).
SecondaryRelation make_identity(const Word& u, const Word& v) {
    return SecondaryRelation{normalize_word(concat(u, reversed(v)))};
}

/// Conjugation word of the element base^w, namely reversed(w) base w.
Word conjugation_word(int base, const Word& w) {
    Word out = reversed(w);
    out.letters.push_back(base);
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

struct ArcElement {
    int base;
    Word word;
};

} // namespace

FamilyParams normalize_params(int k, int p, int q) {
    if (q < 2) {
        throw std::invalid_argument("q must be at least 2");
    }
    const int pm = ((p % q) + q) % q;
    if (pm == 0) {
        throw std::invalid_argument("p is a multiple of q: the tangle is trivial");
    }
    if (std::gcd(pm, q) != 1) {
        throw std::invalid_argument("gcd(p, q) must be 1: the tangle has extra components");
    }
    // Each flype changes p by q and k by 1 in the same direction,
    // keeping kq - p (and so the link) fixed.
    FamilyParams fp;
    fp.q = q;
    fp.p = pm;
    fp.k = k + (pm - p) / q;
    return fp;
}

FamilyParams mirror_params(const FamilyParams& fp) {
    return normalize_params(1 - fp.k, fp.q - fp.p, fp.q);
}

int TangleWalk::count(TangleArc arc) const {
    auto n = std::count(strand_a.begin(), strand_a.end(), arc) +
             std::count(strand_b.begin(), strand_b.end(), arc);
    return static_cast<int>(n);
}

TangleWalk tangle_grid_walk(int p, int q) {
    if (!(0 < p && p < q) || std::gcd(p, q) != 1) {
        throw std::invalid_argument("tangle_grid_walk requires 0 < p < q with gcd(p, q) = 1");
    }
    auto pairs = [](std::vector<TangleArc>& out, TangleArc first, TangleArc second, int times) {
        for (int i = 0; i < times; ++i) {
            out.push_back(first);
            out.push_back(second);
        }
    };

    TangleWalk walk;
    if (q % 2 == 1) {
        if (p % 2 == 1) {
            pairs(walk.strand_a, TangleArc::Bottom, TangleArc::Right, (p - 1) / 2);
            pairs(walk.strand_a, TangleArc::Top, TangleArc::Right, (q - p) / 2);
            walk.end_a = StrandEnd::BottomArc;
            pairs(walk.strand_b, TangleArc::Bottom, TangleArc::Right, (p + 1) / 2);
            pairs(walk.strand_b, TangleArc::Top, TangleArc::Right, (q - p - 2) / 2);
            walk.end_b = StrandEnd::TopArc;
        } else {
            pairs(walk.strand_a, TangleArc::Bottom, TangleArc::Right, p / 2);
            pairs(walk.strand_a, TangleArc::Top, TangleArc::Right, (q - p - 1) / 2);
            walk.end_a = StrandEnd::TopArc;
            pairs(walk.strand_b, TangleArc::Bottom, TangleArc::Right, p / 2);
            pairs(walk.strand_b, TangleArc::Top, TangleArc::Right, (q - p - 1) / 2);
            walk.end_b = StrandEnd::BottomArc;
        }
    } else {
        // q even forces p odd; the strands run right-to-right and
        // left-to-left.
        pairs(walk.strand_a, TangleArc::Bottom, TangleArc::Right, (p - 1) / 2);
        pairs(walk.strand_a, TangleArc::Top, TangleArc::Right, (q - p - 1) / 2);
        walk.strand_a.push_back(TangleArc::Bottom);
        walk.end_a = StrandEnd::GeneratorB;
        pairs(walk.strand_b, TangleArc::Right, TangleArc::Bottom, (p - 1) / 2);
        pairs(walk.strand_b, TangleArc::Right, TangleArc::Top, (q - p - 1) / 2);
        walk.strand_b.push_back(TangleArc::Right);
        walk.end_b = StrandEnd::TopArc;
        walk.second_starts_at_bottom = true;
    }
    return walk;
}

Presentation raw_presentation(const FamilyParams& fp) {
    const int t = fp.t();
    const Word x_word = cat({pair_pow(B, A, t), letters({C})});     // (ba)^t c
    const Word y_word = cat({pair_pow(B, A, t + 1), letters({C})}); // (ba)^(t+1) c
    const bool k_odd = fp.k % 2 != 0;

    const ArcElement bottom = k_odd ? ArcElement{A, x_word} : ArcElement{B, x_word};
    const ArcElement top = k_odd ? ArcElement{B, y_word} : ArcElement{A, x_word};

    auto element_of = [&](StrandEnd end) -> ArcElement {
        switch (end) {
        case StrandEnd::GeneratorB: return ArcElement{B, Word{}};
        case StrandEnd::BottomArc: return bottom;
        case StrandEnd::TopArc: return top;
        }
        throw std::logic_error("unreachable");
    };
    auto action_of = [&](TangleArc arc) -> Word {
        switch (arc) {
        case TangleArc::Right: return letters({A});
        case TangleArc::Bottom: return conjugation_word(bottom.base, bottom.word);
        case TangleArc::Top: return conjugation_word(top.base, top.word);
        }
        throw std::logic_error("unreachable");
    };
    auto strand_relation = [&](const ArcElement& start, const std::vector<TangleArc>& unders,
                               StrandEnd end) {
        Word lhs = start.word;
        for (TangleArc arc : unders) lhs = concat(lhs, action_of(arc));
        const ArcElement finish = element_of(end);
        return make_relation(start.base, lhs, finish.base, finish.word);
    };

    const TangleWalk walk = tangle_grid_walk(fp.p, fp.q);
    const ArcElement start_a{A, Word{}};
    const ArcElement start_b = walk.second_starts_at_bottom ? bottom : ArcElement{B, Word{}};

    Presentation out;
    out.generators = kAbc;
    out.relations.push_back(make_relation(C, letters({A, B}), C, Word{}));
    out.relations.push_back(strand_relation(start_a, walk.strand_a, walk.end_a));
    out.relations.push_back(strand_relation(start_b, walk.strand_b, walk.end_b));
    return out;
}

Presentation reduced_presentation(const FamilyParams& fp) {
    const int d = fp.twist_defect();
    const int q = fp.q;

    Presentation out;
    out.generators = kAbc;
    out.relations.push_back(make_relation(C, letters({A, B}), C, Word{}));
    if (d % 2 != 0) {
        const int m = (d - 1) / 2;
        out.relations.push_back(make_relation(A, pair_pow(C, A, q), B, pair_pow(A, B, m)));
        out.relations.push_back(make_relation(A, pair_pow(A, C, q), B, pair_pow(A, B, m)));
    } else {
        const int m = d / 2;
        out.relations.push_back(make_relation(A, pair_pow(C, A, q), A, pair_pow(B, A, m)));
        out.relations.push_back(make_relation(B, pair_pow(B, C, q), B, pair_pow(A, B, m)));
    }
    return out;
}

Presentation wirtinger_presentation(const PdCode& pd) {
    Presentation out;
    if (pd.crossings.empty()) {
        out.generators.push_back({0, "x1"});
        return out;
    }

    // Arcs are classes of edge labels joined where the over-strand
    // continues through a crossing.
    std::map<int, int> rep; // label -> class representative
    auto find = [&](int x) {
        while (rep[x] != x) {
            rep[x] = rep[rep[x]];
            x = rep[x];
        }
        return x;
    };
    for (const auto& c : pd.crossings) {
        for (int label : c) rep.emplace(label, label);
    }
    for (const auto& c : pd.crossings) {
        const int over_in = find(c[1]);
        const int over_out = find(c[3]);
        if (over_in != over_out) rep[std::max(over_in, over_out)] = std::min(over_in, over_out);
    }

    std::map<int, int> arc_gen; // class representative -> generator index
    for (const auto& [label, _] : rep) {
        const int root = find(label);
        if (!arc_gen.count(root)) arc_gen.emplace(root, 0);
    }
    int next = 0;
    for (auto& [root, idx] : arc_gen) {
        idx = next++;
        out.generators.push_back({idx, "x" + std::to_string(root)});
    }

    for (const auto& c : pd.crossings) {
        const int in_under = arc_gen.at(find(c[0]));
        const int over = arc_gen.at(find(c[1]));
        const int out_under = arc_gen.at(find(c[2]));
        // x_i = x_k ^ x_j, in normal form x_i ^ x_j = x_k.
        out.relations.push_back(Relation(in_under, Word({over}), out_under));
    }
    return out;
}

long long expected_cardinality(const FamilyParams& fp) {
    const long long d = std::abs(static_cast<long long>(fp.twist_defect()));
    return 2LL * fp.q * (d + 1);
}

std::vector<long long> expected_components(const FamilyParams& fp) {
    // The Cayley graph has two components when kq - p is odd and three
    // when kq - p is even. (q even forces kq - p odd, since gcd(p,q)=1.)
    const long long d = std::abs(static_cast<long long>(fp.twist_defect()));
    const long long q = fp.q;
    std::vector<long long> sizes;
    if (d % 2 == 1) {
        sizes = {2 * q * d, 2 * q};
    } else {
        sizes = {q * d, q * d, 2 * q};
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<SuiteEntry> lemma_relation_suite(const FamilyParams& fp) {
    const int d = fp.twist_defect();
    const int q = fp.q;
    const int ad = std::abs(d);
    const int t = fp.t();

    std::vector<SuiteEntry> suite;
    auto add_rel = [&](std::string name, Relation r) {
        suite.push_back({std::move(name), std::move(r)});
    };
    auto add_id = [&](std::string name, SecondaryRelation s) {
        suite.push_back({std::move(name), std::move(s)});
    };

    // Defining relations.
    {
        const Presentation p = reduced_presentation(fp);
        add_rel("R1", p.relations[0]);
        add_rel("R2", p.relations[1]);
        add_rel("R3", p.relations[2]);
    }

    add_rel("R4", make_relation(C, pair_pow(A, C, 2 * q), C, Word{}));
    add_rel("R5", make_relation(A, pair_pow(C, A, 2 * q), A, Word{}));
    add_rel("R6", make_relation(B, pair_pow(C, B, 2 * q), B, Word{}));

    if (d % 2 != 0) {
        add_rel("R7", make_relation(A, pair_pow(B, A, (d - 1) / 2), B, pair_pow(B, C, q)));
        const int jmax = (ad - 1) / 2;
        for (int i = 0; i <= q; ++i) {
            for (int j = 0; j <= jmax; ++j) {
                add_rel("alpha[" + std::to_string(i) + "," + std::to_string(j) + "]",
                        make_relation(A, cat({pair_pow(C, A, i), pair_pow(B, A, j), letters({C})}),
                                      A, cat({pair_pow(C, A, i), letters({C}), pair_pow(B, A, j)})));
                add_rel("beta[" + std::to_string(i) + "," + std::to_string(j) + "]",
                        make_relation(A,
                                      cat({pair_pow(C, A, i), pair_pow(A, B, j), letters({A, B, C})}),
                                      A, cat({pair_pow(C, A, i + 1), pair_pow(B, A, j), letters({B})})));
            }
        }
    } else {
        add_rel("R7", make_relation(A, pair_pow(B, A, d / 2), A, pair_pow(A, C, q)));
        add_rel("R8", make_relation(B, pair_pow(A, B, d / 2), B, pair_pow(B, C, q)));
        const int jmax = ad / 2;
        for (int i = 0; i <= q; ++i) {
            for (int j = 0; j <= jmax; ++j) {
                const std::string ij = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
                add_rel("alpha_a" + ij,
                        make_relation(A, cat({pair_pow(C, A, i), pair_pow(B, A, j), letters({C})}),
                                      A, cat({pair_pow(C, A, i), letters({C}), pair_pow(B, A, j)})));
                add_rel("alpha_b" + ij,
                        make_relation(B, cat({pair_pow(C, B, i), pair_pow(A, B, j), letters({C})}),
                                      B, cat({pair_pow(C, B, i), letters({C}), pair_pow(A, B, j)})));
                add_rel("beta_a" + ij,
                        make_relation(A,
                                      cat({pair_pow(C, A, i), pair_pow(A, B, j), letters({A, B, C})}),
                                      A, cat({pair_pow(C, A, i + 1), pair_pow(B, A, j), letters({B})})));
                add_rel("beta_b" + ij,
                        make_relation(B,
                                      cat({pair_pow(C, B, i), pair_pow(B, A, j), letters({B, A, C})}),
                                      B, cat({pair_pow(C, B, i + 1), pair_pow(A, B, j), letters({A})})));
            }
        }
    }

    // gamma is 2q-periodic through R4, so 0 <= i < 2q covers every index.
    for (int i = 0; i < 2 * q; ++i) {
        add_rel("gamma[" + std::to_string(i) + "]",
                make_relation(C, cat({pair_pow(A, C, i), letters({A})}), C,
                              cat({pair_pow(A, C, i), letters({B})})));
    }

    // All-element consequences of the axis relation c^(ab) = c.
    add_id("z^(aca)=z^(bcb)", make_identity(letters({A, C, A}), letters({B, C, B})));
    add_id("z^(cab)=z^(abc)", make_identity(letters({C, A, B}), letters({A, B, C})));
    add_id("z^(cba)=z^(bac)", make_identity(letters({C, B, A}), letters({B, A, C})));
    const std::vector<std::pair<std::string, Word>> conj_pairs = {
        {"ca", letters({C, A})},
        {"ac", letters({A, C})},
        {"cb", letters({C, B})},
        {"bc", letters({B, C})},
    };
    for (const auto& [wn, w] : conj_pairs) {
        add_id("z^(" + wn + ".ab)=z^(ba." + wn + ")",
               make_identity(cat({w, letters({A, B})}), cat({letters({B, A}), w})));
        add_id("z^(" + wn + ".ba)=z^(ab." + wn + ")",
               make_identity(cat({w, letters({B, A})}), cat({letters({A, B}), w})));
        const Word w2 = concat(w, w);
        add_id("z^(" + wn + "^2.ab)=z^(ab." + wn + "^2)",
               make_identity(cat({w2, letters({A, B})}), cat({letters({A, B}), w2})));
        add_id("z^(" + wn + "^2.ba)=z^(ba." + wn + "^2)",
               make_identity(cat({w2, letters({B, A})}), cat({letters({B, A}), w2})));
    }

    // Exchange identities for the half-twist arc labels
    // X = (ba)^t c and Y = (ba)^(t+1) c.
    {
        const Word x_word = cat({pair_pow(B, A, t), letters({C})});
        const Word y_word = cat({pair_pow(B, A, t + 1), letters({C})});
        const Word act_ax = conjugation_word(A, x_word);
        const Word act_bx = conjugation_word(B, x_word);
        const Word act_by = conjugation_word(B, y_word);
        add_id("z^(bY.a.aX)=z^(aX.a.bY)",
               make_identity(cat({act_by, letters({A}), act_ax}),
                             cat({act_ax, letters({A}), act_by})));
        add_id("z^(bX.a.aX)=z^(aX.a.bX)",
               make_identity(cat({act_bx, letters({A}), act_ax}),
                             cat({act_ax, letters({A}), act_bx})));
    }

    // Secondary relations of the defining relations.
    add_id("SR1", SecondaryRelation{normalize_word(letters({B, A, C, A, B, C}))});
    if (d % 2 != 0) {
        add_id("SR2", make_identity(pair_pow(A, C, 2 * q), pair_pow(B, A, d)));
        add_id("SR3", make_identity(pair_pow(C, A, 2 * q), pair_pow(B, A, d)));
    } else {
        add_id("SR2", make_identity(pair_pow(A, C, 2 * q), pair_pow(A, B, d)));
        add_id("SR3", make_identity(pair_pow(C, B, 2 * q), pair_pow(B, A, d)));
    }

    return suite;
}

} // namespace quandle
