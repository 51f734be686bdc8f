#pragma once

#include "quandle/cayley.hpp"
#include "quandle/presentation.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace quandle {

/// Caps for an enumeration run. A cap is required because a presentation
/// may describe an infinite quandle, in which case the method never
/// terminates on its own.
struct EnumerationBudget {
    int max_elements = 10000;
    std::int64_t max_steps = 10'000'000;
};

/// The consequence y ^ word = y of a primary relation, valid for every
/// element y. For g_j ^ w = g_k the word is reversed(w) g_j w g_k.
struct SecondaryRelation {
    Word word;

    friend bool operator==(const SecondaryRelation&, const SecondaryRelation&) = default;
};

SecondaryRelation secondary_of(const Relation& r);

/// Outcome of enumerate(): a finite Cayley table, or the point where the
/// budget ran out.
struct EnumerationResult {
    std::optional<CayleyTable> table;
    int elements_reached = 0;
    std::int64_t steps_used = 0;

    bool finite() const { return table.has_value(); }
};

/// Mutable state of a Winker enumeration. Vertices are numbered in
/// creation order; merged vertices keep the smaller index. The edge
/// table stores each generator action as an involution, so the
/// involutory relations y^(g g) = y never need tracing; the per-vertex
/// step of the method reduces to creating any still-missing edges.
///
/// Exposed so the tracing and collapsing steps can be driven and
/// inspected directly; enumerate() is the standard schedule.
class EnumerationState {
public:
    static constexpr int kUndefined = -1;

    EnumerationState(int num_generators, EnumerationBudget budget);

    /// Ensures a path labeled by w from `start` to `end`, creating
    /// vertices for all but the last letter and closing the path with an
    /// edge or a queued identification. Call collapse() afterwards.
    void trace(int start, const Word& w, int end);

    /// Primary relation at its generator seeds.
    void trace(const Relation& r);

    /// Secondary relation at one vertex: a closed path v -> v.
    void trace_at(int v, const SecondaryRelation& s);

    /// Processes queued identifications until quiescent. Identifying two
    /// vertices unifies their edge rows label by label, which may queue
    /// further identifications.
    void collapse();

    /// Creates the missing j-edge at v if absent (the structural form of
    /// tracing y^(j j) = y). Returns true if an edge was created.
    bool saturate(int v, int j);

    int find(int v) const;
    bool is_live(int v) const { return find(v) == v; }
    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int live_count() const { return live_; }
    std::int64_t steps_used() const { return steps_; }
    bool budget_exceeded() const { return budget_hit_; }
    bool has_pending_merges() const { return !pending_.empty(); }
    std::int64_t merges_done() const { return merges_; }

    /// Raw neighbor along j, normalized to a live vertex; kUndefined if
    /// the edge does not exist yet.
    int neighbor(int v, int j) const;

    /// Compacts live vertices to dense indices in creation order and
    /// emits the finished table.
    CayleyTable finish() const;

private:
    int new_vertex(int from, int j);
    void set_edge(int u, int j, int v);
    void enqueue_merge(int u, int v);
    int raw(int v, int j) const {
        return action_[static_cast<size_t>(v) * static_cast<size_t>(g_) + static_cast<size_t>(j)];
    }
    int& raw(int v, int j) {
        return action_[static_cast<size_t>(v) * static_cast<size_t>(g_) + static_cast<size_t>(j)];
    }
    bool charge_step();

    int g_;
    EnumerationBudget budget_;
    std::vector<int> action_;
    mutable std::vector<int> parent_;
    std::vector<int> created_from_; // creating vertex, -1 for generators
    std::vector<int> created_via_;  // creating generator label, -1 for generators
    std::deque<std::pair<int, int>> pending_;
    std::int64_t steps_ = 0;
    std::int64_t merges_ = 0;
    int live_ = 0;
    bool budget_hit_ = false;
};

/// Winker's method: trace the primary relations in order (collapsing
/// after each), then sweep the vertices in index order, completing the
/// generator edges and tracing every secondary relation at each vertex,
/// until a full sweep changes nothing.
EnumerationResult enumerate(const Presentation& p, const EnumerationBudget& budget = {});

} // namespace quandle
