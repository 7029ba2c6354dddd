#include "acyclic/extension.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <set>

namespace acyclic {

void RecolorJournal::rollback(std::size_t to)
{
    while (log_.size() > to) {
        const auto [e, old] = log_.back();
        log_.pop_back();
        coloring_.force_color(e, kNoColor);
        if (old != kNoColor) {
            coloring_.assign(e, old);
        }
    }
}

bool RecolorJournal::try_recolor(EdgeId e, Color col)
{
    const Color old = coloring_.color(e);
    if (old == col) {
        return false;
    }
    if (old != kNoColor) {
        coloring_.unassign(e);
    }
    if (candidate_colors(coloring_, e).contains(col) && is_valid_color(coloring_, e, col)) {
        coloring_.assign(e, col);
        log_.emplace_back(e, old);
        after_mutation();
        return true;
    }
    if (old != kNoColor) {
        coloring_.assign(e, old);
    }
    return false;
}

bool RecolorJournal::try_assign(EdgeId e, Color col)
{
    if (coloring_.is_colored(e)) {
        throw Error(ErrorCode::EdgeAlreadyColored, "edge id " + std::to_string(e));
    }
    return try_recolor(e, col);
}

int RecolorJournal::changed_since(std::size_t from, EdgeId except) const
{
    std::set<EdgeId> touched;
    for (std::size_t i = from; i < log_.size(); ++i) {
        if (log_[i].first != except) {
            touched.insert(log_[i].first);
        }
    }
    return static_cast<int>(touched.size());
}

void RecolorJournal::after_mutation()
{
    if (!check_) {
        return;
    }
    const ColoringReport report = is_acyclic(graph_, coloring_);
    if (!report.proper || !report.acyclic) {
        throw Error(ErrorCode::ExtensionFailed, "a recoloring step broke acyclicity");
    }
}

} // namespace acyclic
