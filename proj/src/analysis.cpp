#include "quandle/analysis.hpp"

#include <algorithm>
#include <deque>

namespace quandle {

ComponentReport components(const CayleyTable& t) {
    const int n = t.size();
    ComponentReport report;
    report.membership.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (report.membership[static_cast<size_t>(v)] != -1) continue;
        const int id = report.count++;
        std::deque<int> queue{v};
        report.membership[static_cast<size_t>(v)] = id;
        std::vector<int> members;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            members.push_back(x);
            for (int j = 0; j < t.num_generators; ++j) {
                const int y = t.act(x, j);
                if (report.membership[static_cast<size_t>(y)] == -1) {
                    report.membership[static_cast<size_t>(y)] = id;
                    queue.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        report.sizes.push_back(static_cast<long long>(members.size()));
        report.members.push_back(std::move(members));
    }
    std::sort(report.sizes.begin(), report.sizes.end());
    return report;
}

namespace {

/// Conjugation column of element e: x -> x > e for every x.
std::vector<int> conjugation_column(const CayleyTable& t, int e) {
    const CayleyTable::Rep& r = t.reps[static_cast<size_t>(e)];
    const int n = t.size();
    std::vector<int> col(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        int v = x;
        for (auto it = r.word.letters.rbegin(); it != r.word.letters.rend(); ++it) {
            v = t.act(v, *it);
        }
        v = t.act(v, r.base);
        for (int g : r.word.letters) {
            v = t.act(v, g);
        }
        col[static_cast<size_t>(x)] = v;
    }
    return col;
}

std::vector<int> fixed_point_counts(const CayleyTable& t) {
    const int n = t.size();
    std::vector<int> fix(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e) {
        const std::vector<int> col = conjugation_column(t, e);
        int f = 0;
        for (int x = 0; x < n; ++x) {
            if (col[static_cast<size_t>(x)] == x) ++f;
        }
        fix[static_cast<size_t>(e)] = f;
    }
    return fix;
}

/// Extends the generator images chosen so far (generators 0..chosen-1)
/// to the unique equivariant partial map, following only edges labeled
/// by chosen generators. Fails on any conflict or loss of injectivity.
/// With all generators chosen the map must be a bijection: every element
/// is seed^w for some word w, so the closure covers everything.
bool propagate(const CayleyTable& s, const std::vector<std::vector<int>>& image_columns,
               const std::vector<int>& images, int chosen, std::vector<int>& map_out) {
    const int n = s.size();
    map_out.assign(static_cast<size_t>(n), -1);
    std::vector<char> hit(static_cast<size_t>(n), 0);
    std::deque<int> queue;
    auto assign = [&](int x, int mx) {
        int& slot = map_out[static_cast<size_t>(x)];
        if (slot != -1) return slot == mx;
        char& h = hit[static_cast<size_t>(mx)];
        if (h) return false; // not injective
        h = 1;
        slot = mx;
        queue.push_back(x);
        return true;
    };
    for (int j = 0; j < chosen; ++j) {
        if (!assign(s.seed[static_cast<size_t>(j)], images[static_cast<size_t>(j)])) return false;
    }
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        const int mx = map_out[static_cast<size_t>(x)];
        for (int j = 0; j < chosen; ++j) {
            const int my = image_columns[static_cast<size_t>(j)][static_cast<size_t>(mx)];
            if (!assign(s.act(x, j), my)) return false;
        }
    }
    if (chosen == s.num_generators) {
        for (int x = 0; x < n; ++x) {
            if (map_out[static_cast<size_t>(x)] == -1) return false;
        }
    }
    return true;
}

} // namespace

IsoResult is_isomorphic(const CayleyTable& s, const CayleyTable& t) {
    IsoResult result;
    if (s.size() != t.size()) {
        result.reason = "sizes differ: " + std::to_string(s.size()) + " vs " +
                        std::to_string(t.size());
        return result;
    }
    const ComponentReport cs = components(s);
    const ComponentReport ct = components(t);
    if (cs.sizes != ct.sizes) {
        result.reason = "component size multisets differ";
        return result;
    }
    const std::vector<int> fix_s = fixed_point_counts(s);
    const std::vector<int> fix_t = fixed_point_counts(t);
    {
        std::vector<int> ms = fix_s, mt = fix_t;
        std::sort(ms.begin(), ms.end());
        std::sort(mt.begin(), mt.end());
        if (ms != mt) {
            result.reason = "fixed-point count multisets differ";
            return result;
        }
    }

    const int g = s.num_generators;
    const int n = t.size();

    // Candidate images per generator: matching fixed-point count and
    // component size.
    std::vector<std::vector<int>> candidates(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) {
        const int sv = s.seed[static_cast<size_t>(j)];
        const long long comp_size =
            static_cast<long long>(cs.members[static_cast<size_t>(
                                                  cs.membership[static_cast<size_t>(sv)])]
                                       .size());
        for (int e = 0; e < n; ++e) {
            if (fix_t[static_cast<size_t>(e)] != fix_s[static_cast<size_t>(sv)]) continue;
            const long long esize =
                static_cast<long long>(ct.members[static_cast<size_t>(
                                                      ct.membership[static_cast<size_t>(e)])]
                                           .size());
            if (esize != comp_size) continue;
            candidates[static_cast<size_t>(j)].push_back(e);
        }
        if (candidates[static_cast<size_t>(j)].empty()) {
            result.reason = "no candidate image for generator " + std::to_string(j);
            return result;
        }
    }

    std::vector<int> images(static_cast<size_t>(g), -1);
    std::vector<std::vector<int>> image_columns(static_cast<size_t>(g));
    std::vector<int> map;

    // Lexicographically ordered backtracking over candidate tuples, with
    // partial propagation after each choice; the first success is the
    // smallest witness.
    auto search = [&](auto&& self, int j) -> bool {
        if (j == g) return true;
        for (int e : candidates[static_cast<size_t>(j)]) {
            images[static_cast<size_t>(j)] = e;
            image_columns[static_cast<size_t>(j)] = conjugation_column(t, e);
            if (!propagate(s, image_columns, images, j + 1, map)) continue;
            if (self(self, j + 1)) return true;
        }
        images[static_cast<size_t>(j)] = -1;
        return false;
    };
    if (search(search, 0)) {
        result.isomorphic = true;
        result.generator_images = images;
        result.full_map = std::move(map);
        return result;
    }
    result.reason = "no equivariant bijection over " +
                    std::to_string(candidates[0].size()) + " candidate seeds";
    return result;
}

StructureSummary structure_summary(const CayleyTable& t) {
    StructureSummary summary;
    summary.size = t.size();
    summary.component_sizes = components(t).sizes;
    summary.generator_fixed_points.resize(static_cast<size_t>(t.num_generators));
    for (int j = 0; j < t.num_generators; ++j) {
        int f = 0;
        for (int v = 0; v < t.size(); ++v) {
            if (t.act(v, j) == v) ++f;
        }
        summary.generator_fixed_points[static_cast<size_t>(j)] = f;
    }
    return summary;
}

} // namespace quandle
