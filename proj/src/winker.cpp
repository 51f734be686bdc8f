#include "quandle/winker.hpp"

#include <stdexcept>

namespace quandle {

SecondaryRelation secondary_of(const Relation& r) {
    Word w = reversed(r.word);
    w.letters.push_back(r.lhs_base);
    w.letters.insert(w.letters.end(), r.word.letters.begin(), r.word.letters.end());
    w.letters.push_back(r.rhs_base);
    return SecondaryRelation{normalize_word(w)};
}

EnumerationState::EnumerationState(int num_generators, EnumerationBudget budget)
    : g_(num_generators), budget_(budget) {
    if (num_generators <= 0) {
        throw std::invalid_argument("enumeration requires at least one generator");
    }
    for (int i = 0; i < g_; ++i) {
        if (live_ >= budget_.max_elements) {
            budget_hit_ = true;
            return;
        }
        parent_.push_back(i);
        created_from_.push_back(-1);
        created_via_.push_back(-1);
        action_.resize(action_.size() + static_cast<size_t>(g_), kUndefined);
        ++live_;
        raw(i, i) = i; // loop encoding axiom A1 at the generator vertex
    }
}

int EnumerationState::find(int v) const {
    int root = v;
    while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
    while (parent_[static_cast<size_t>(v)] != v) {
        int next = parent_[static_cast<size_t>(v)];
        parent_[static_cast<size_t>(v)] = root;
        v = next;
    }
    return root;
}

int EnumerationState::neighbor(int v, int j) const {
    int n = raw(v, j);
    return n == kUndefined ? kUndefined : find(n);
}

bool EnumerationState::charge_step() {
    if (budget_hit_) return false;
    if (++steps_ > budget_.max_steps) {
        budget_hit_ = true;
        return false;
    }
    return true;
}

int EnumerationState::new_vertex(int from, int j) {
    if (live_ >= budget_.max_elements) {
        budget_hit_ = true;
        return kUndefined;
    }
    const int v = vertex_count();
    parent_.push_back(v);
    created_from_.push_back(from);
    created_via_.push_back(j);
    action_.resize(action_.size() + static_cast<size_t>(g_), kUndefined);
    ++live_;
    set_edge(from, j, v);
    return v;
}

void EnumerationState::set_edge(int u, int j, int v) {
    raw(u, j) = v;
    raw(v, j) = u;
}

void EnumerationState::enqueue_merge(int u, int v) {
    u = find(u);
    v = find(v);
    if (u != v) pending_.emplace_back(u, v);
}

void EnumerationState::trace(int start, const Word& w, int end) {
    if (budget_hit_) return;
    int cur = find(start);
    const int target = find(end);
    const int len = w.size();
    if (len == 0) {
        enqueue_merge(cur, target);
        return;
    }
    for (int i = 0; i + 1 < len; ++i) {
        if (!charge_step()) return;
        const int j = w.letters[static_cast<size_t>(i)];
        const int next = neighbor(cur, j);
        if (next != kUndefined) {
            cur = next;
        } else {
            cur = new_vertex(cur, j);
            if (cur == kUndefined) return;
        }
    }
    if (!charge_step()) return;
    const int j = w.letters[static_cast<size_t>(len - 1)];
    const int ahead = neighbor(cur, j);
    if (ahead != kUndefined) {
        enqueue_merge(ahead, target);
        return;
    }
    const int back = neighbor(target, j);
    if (back != kUndefined) {
        enqueue_merge(back, cur);
        return;
    }
    set_edge(cur, j, target);
}

void EnumerationState::trace(const Relation& r) {
    if (budget_hit_) return;
    trace(find(r.lhs_base), r.word, find(r.rhs_base));
}

void EnumerationState::trace_at(int v, const SecondaryRelation& s) {
    if (budget_hit_) return;
    v = find(v);
    trace(v, s.word, v);
}

bool EnumerationState::saturate(int v, int j) {
    if (budget_hit_) return false;
    v = find(v);
    if (neighbor(v, j) != kUndefined) return false;
    return new_vertex(v, j) != kUndefined;
}

void EnumerationState::collapse() {
    while (!pending_.empty()) {
        auto [x, y] = pending_.front();
        pending_.pop_front();
        x = find(x);
        y = find(y);
        if (x == y) continue;
        const int s = x < y ? x : y; // smaller index survives
        const int t = x < y ? y : x;
        parent_[static_cast<size_t>(t)] = s;
        --live_;
        ++merges_;
        for (int j = 0; j < g_; ++j) {
            const int u_raw = raw(t, j);
            if (u_raw == kUndefined) continue;
            const int u = find(u_raw);
            const int w_raw = raw(s, j);
            if (w_raw == kUndefined) {
                raw(s, j) = u;
                // keep the reverse side of the inherited edge consistent
                const int back = raw(u, j);
                if (back == kUndefined) {
                    raw(u, j) = s;
                } else if (find(back) != s) {
                    pending_.emplace_back(find(back), s);
                }
            } else if (find(w_raw) != u) {
                pending_.emplace_back(find(w_raw), u);
            }
        }
    }
}

CayleyTable EnumerationState::finish() const {
    CayleyTable out;
    out.num_generators = g_;
    const int total = vertex_count();
    std::vector<int> dense(static_cast<size_t>(total), -1);
    int next = 0;
    for (int v = 0; v < total; ++v) {
        if (find(v) == v) dense[static_cast<size_t>(v)] = next++;
    }
    out.action.assign(static_cast<size_t>(next) * static_cast<size_t>(g_), -1);
    out.reps.resize(static_cast<size_t>(next));
    out.seed.resize(static_cast<size_t>(g_));
    for (int j = 0; j < g_; ++j) out.seed[static_cast<size_t>(j)] = dense[static_cast<size_t>(find(j))];
    for (int v = 0; v < total; ++v) {
        if (find(v) != v) continue;
        const int nv = dense[static_cast<size_t>(v)];
        for (int j = 0; j < g_; ++j) {
            const int n = raw(v, j);
            out.action[static_cast<size_t>(nv) * static_cast<size_t>(g_) + static_cast<size_t>(j)] =
                n == kUndefined ? -1 : dense[static_cast<size_t>(find(n))];
        }
        // Representative from the creation chain; each recorded edge
        // survives collapsing, so the chain stays valid in the quotient.
        std::vector<int> chain;
        int cur = v;
        while (created_from_[static_cast<size_t>(cur)] != -1) {
            chain.push_back(created_via_[static_cast<size_t>(cur)]);
            cur = created_from_[static_cast<size_t>(cur)];
        }
        CayleyTable::Rep rep;
        rep.base = cur;
        rep.word.letters.assign(chain.rbegin(), chain.rend());
        out.reps[static_cast<size_t>(nv)] = std::move(rep);
    }
    return out;
}

EnumerationResult enumerate(const Presentation& p, const EnumerationBudget& budget) {
    EnumerationState state(p.num_generators(), budget);

    for (const Relation& r : p.relations) {
        state.trace(r);
        state.collapse();
    }

    std::vector<SecondaryRelation> secondaries;
    for (const Relation& r : p.relations) {
        SecondaryRelation s = secondary_of(r);
        if (!s.word.empty()) secondaries.push_back(std::move(s));
    }

    // Sweep vertices in index order; vertices created mid-sweep are
    // reached later in the same pass. Repeat until a pass is quiet.
    bool changed = true;
    while (changed && !state.budget_exceeded()) {
        changed = false;
        for (int v = 0; v < state.vertex_count(); ++v) {
            if (!state.is_live(v)) continue;
            for (int j = 0; j < p.num_generators(); ++j) {
                if (state.saturate(v, j)) changed = true;
            }
            for (const SecondaryRelation& s : secondaries) {
                const int before_vertices = state.vertex_count();
                const std::int64_t before_merges = state.merges_done();
                state.trace_at(v, s);
                state.collapse();
                if (state.vertex_count() != before_vertices ||
                    state.merges_done() != before_merges) {
                    changed = true;
                }
                if (!state.is_live(v)) break; // v was merged away
            }
            if (state.budget_exceeded()) break;
        }
    }

    EnumerationResult result;
    result.steps_used = state.steps_used();
    result.elements_reached = state.live_count();
    if (state.budget_exceeded()) return result;
    result.table = state.finish();
    return result;
}

} // namespace quandle
