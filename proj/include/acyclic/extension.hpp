#pragma once

#include "acyclic/coloring.hpp"
#include "acyclic/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acyclic {

struct ColorerOptions {
    // Palette override. Only meant for stress runs below the proven bound,
    // where extension failures are expected and legitimate.
    std::optional<int> palette;
    // Run a full acyclicity check after every single mutation.
    bool check_each_mutation = false;
    // Throw ClaimViolated when a counting bound the extension relies on
    // fails at runtime. Stress runs with a reduced palette turn this off.
    bool enforce_claims = true;
};

struct ExtensionOutcome {
    // Branch label, e.g. "fresh" or "deg3:2.2.2-recolor>2.2.1-free".
    std::string branch;
    // Edges other than xy whose color changed.
    int recolored = 0;
};

struct ExtensionStats {
    int extensions = 0;
    int max_recolored = 0;
    long long total_recolored = 0;
    std::map<std::string, int> branches;

    // Number of times the lower bounds below were evaluated.
    int claim_checks = 0;
    // Violations seen while enforce_claims was off.
    int claim_violations = 0;
    // Largest number of non-freeable colors seen.
    int max_non_freeable = 0;
    // Smallest |T| - (Δ - 1), or the smallest |C*| - 2 for the k-degenerate
    // colorer.
    std::optional<int> min_slack;

    void record(const ExtensionOutcome& outcome)
    {
        ++extensions;
        ++branches[outcome.branch];
        total_recolored += outcome.recolored;
        max_recolored = std::max(max_recolored, outcome.recolored);
    }
    void note_slack(int slack)
    {
        min_slack = min_slack ? std::min(*min_slack, slack) : slack;
    }
};

struct ColoringRun {
    PartialEdgeColoring coloring;
    int palette = 0;
    // Removal order; edges are restored and colored in reverse.
    std::vector<OrientedEdge> peel;
    ExtensionStats stats;
};

// Undo log over a coloring. Every mutation made by an extension goes through
// here so a failed branch can be rolled back to a mark.
class RecolorJournal {
public:
    RecolorJournal(const Graph& g, PartialEdgeColoring& c, bool check_each_mutation)
        : graph_(g), coloring_(c), check_(check_each_mutation)
    {
    }

    std::size_t mark() const { return log_.size(); }
    void rollback(std::size_t to);

    // Recolors e to col if col is a candidate for e and valid once e is
    // uncolored. Leaves the coloring untouched and returns false otherwise.
    bool try_recolor(EdgeId e, Color col);
    // Colors the uncolored edge e if col is a valid candidate.
    bool try_assign(EdgeId e, Color col);

    // Distinct edges other than `except` changed since the mark.
    int changed_since(std::size_t from, EdgeId except) const;

    PartialEdgeColoring& coloring() { return coloring_; }
    const Graph& graph() const { return graph_; }

private:
    void after_mutation();

    const Graph& graph_;
    PartialEdgeColoring& coloring_;
    bool check_;
    std::vector<std::pair<EdgeId, Color>> log_;
};

} // namespace acyclic
