#pragma once

#include "acyclic/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace acyclic {

enum class Family { RandomKdeg, Path, Cycle, Star, Complete, Wheel, SubcubicRandom };

std::string_view to_string(Family f);
// Throws BadSpec for unknown names.
Family parse_family(std::string_view name);

enum class Attachment {
    // Vertex i takes a uniform number of earlier neighbors in 0..min(k, i).
    Uniform,
    // Vertex i takes exactly min(k, i) earlier neighbors.
    Saturated,
};

struct GenSpec {
    Family family = Family::RandomKdeg;
    int n = 1;
    int k = 1;
    std::uint64_t seed = 0;
    Attachment attachment = Attachment::Uniform;
};

// Random source. std::mt19937_64 has a fully specified output sequence;
// bounded draws use rejection sampling on its raw 64-bit output rather than
// the implementation-defined standard distributions, so a seed yields the
// same graph with every compiler.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Vertices are added in id order; vertex i links to a uniformly chosen set
// of earlier vertices. Degeneracy <= k by construction. Throws BadSpec.
Graph random_k_degenerate(const GenSpec& spec);

// path: P_n; cycle: C_n (n >= 3); star: K(1, n-1) centered at 0;
// complete: K_n; wheel: hub 0 joined to the cycle 1..n-1 (n >= 4);
// subcubic-random: random edges with maximum degree <= 3;
// random-kdeg: random_k_degenerate. Throws BadSpec.
Graph make_family(const GenSpec& spec);

} // namespace acyclic
