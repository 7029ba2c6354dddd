#include "acyclic/generator.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <vector>

namespace acyclic {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::RandomKdeg, "random-kdeg"},
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Complete, "complete"},
    {Family::Wheel, "wheel"},
    {Family::SubcubicRandom, "subcubic-random"},
}};

void check_spec(const GenSpec& spec)
{
    if (spec.n < 1) {
        throw Error(ErrorCode::BadSpec, "n must be >= 1");
    }
    if (spec.k < 1) {
        throw Error(ErrorCode::BadSpec, "k must be >= 1");
    }
}

} // namespace

std::string_view to_string(Family f)
{
    for (const auto& [family, name] : kFamilyNames) {
        if (family == f) {
            return name;
        }
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (const auto& [family, n] : kFamilyNames) {
        if (n == name) {
            return family;
        }
    }
    throw Error(ErrorCode::BadSpec, "unknown family '" + std::string(name) + "'");
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) {
        throw Error(ErrorCode::BadSpec, "empty sampling range");
    }
    // Reject the top partial block so that every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
        - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r < limit) {
            return r % bound;
        }
    }
}

Graph random_k_degenerate(const GenSpec& spec)
{
    check_spec(spec);
    Rng rng(spec.seed);
    Graph g(spec.n);
    std::vector<Vertex> pool;
    for (Vertex i = 0; i < spec.n; ++i) {
        const int cap = std::min(spec.k, i);
        const int take = spec.attachment == Attachment::Saturated
            ? cap
            : static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
        // Partial Fisher-Yates over the earlier vertices.
        pool.resize(i);
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<Vertex> chosen;
        for (int j = 0; j < take; ++j) {
            const auto pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(i - j)));
            std::swap(pool[j], pool[pick]);
            chosen.push_back(pool[j]);
        }
        std::sort(chosen.begin(), chosen.end());
        for (Vertex w : chosen) {
            g.add_edge(w, i);
        }
    }
    return g;
}

Graph make_family(const GenSpec& spec)
{
    check_spec(spec);
    const int n = spec.n;
    Graph g(n);
    switch (spec.family) {
    case Family::RandomKdeg:
        return random_k_degenerate(spec);
    case Family::Path:
        for (Vertex v = 0; v + 1 < n; ++v) {
            g.add_edge(v, v + 1);
        }
        break;
    case Family::Cycle:
        if (n < 3) {
            throw Error(ErrorCode::BadSpec, "cycle needs n >= 3");
        }
        for (Vertex v = 0; v < n; ++v) {
            g.add_edge(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
        }
        break;
    case Family::Star:
        for (Vertex v = 1; v < n; ++v) {
            g.add_edge(0, v);
        }
        break;
    case Family::Complete:
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                g.add_edge(u, v);
            }
        }
        break;
    case Family::Wheel:
        if (n < 4) {
            throw Error(ErrorCode::BadSpec, "wheel needs n >= 4");
        }
        for (Vertex v = 1; v < n; ++v) {
            g.add_edge(0, v);
        }
        for (Vertex v = 1; v < n; ++v) {
            const Vertex w = v + 1 < n ? v + 1 : 1;
            g.add_edge(std::min(v, w), std::max(v, w));
        }
        break;
    case Family::SubcubicRandom: {
        if (n < 2) {
            break;
        }
        Rng rng(spec.seed);
        const auto count = static_cast<std::uint64_t>(n);
        for (int attempt = 0; attempt < 3 * n; ++attempt) {
            const auto u = static_cast<Vertex>(rng.below(count));
            const auto v = static_cast<Vertex>(rng.below(count));
            if (u == v || g.degree(u) >= 3 || g.degree(v) >= 3 || g.find_edge(u, v)) {
                continue;
            }
            g.add_edge(std::min(u, v), std::max(u, v));
        }
        break;
    }
    }
    return g;
}

} // namespace acyclic
