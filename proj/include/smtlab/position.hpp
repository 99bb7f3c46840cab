#pragma once

#include "smtlab/variety.hpp"

#include <cstdint>
#include <map>

namespace smtlab {

struct HypersurfaceEntry {
    std::string name;
    int degree = 1;
    MovingPoly poly;
};

// Family {Q_i} of moving hypersurfaces over a fixed ambient space.
struct HypersurfaceFamily {
    int nvars = 1;
    std::vector<HypersurfaceEntry> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

HypersurfaceFamily make_family(int nvars, std::vector<HypersurfaceEntry> entries);

// Randomized specialization realizes "for generic points z": the per-z
// invariants are constant off a proper closed locus, so independent random
// samples agree with overwhelming probability; disagreement is reported,
// never silently resolved.
struct SamplingConfig {
    std::uint64_t seed = 1;
    int num_points = 3;
    long coeff_bound = 1000;
};

// Codimension inside V; nullopt encodes an empty intersection
// (dim empty = -infinity, codim = +infinity).
using Codim = std::optional<int>;

struct DistributiveReport {
    Rational delta;
    std::vector<int> witness;                 // 1-based indices into the family
    std::map<std::vector<int>, Codim> table;  // visited subsets at the reporting sample
    bool stable = true;
    std::vector<Rational> samples_used;
    std::vector<Rational> per_sample_delta;   // entries only for non-degenerate samples
};

struct SubgeneralReport {
    bool holds = true;
    std::vector<int> violating_subset; // 1-based, empty when holds
    std::vector<Rational> samples_used;
};

struct GenericityReport {
    std::vector<std::optional<int>> values; // projective dimension per sample
    bool stable = true;
    std::vector<Rational> samples_used;
};

// dim V - dim(V intersect common zeros of polys); nullopt when the
// intersection is empty. V itself must be nonempty.
Codim codim_in_V(const Ideal& V, const std::vector<Poly>& polys);

// Distributive constant (max over nonempty subsets of #subset/codim, with
// empty intersections contributing 0), evaluated at random samples of z.
// Subset enumeration is exhaustive with anti-monotone pruning; q <= 15.
DistributiveReport distributive_constant(const Ideal& V, const HypersurfaceFamily& fam,
                                         const SamplingConfig& cfg);

// Weak l-subgeneral position: every (l+1)-subset meets V emptily at all
// samples.
SubgeneralReport subgeneral_position_check(const Ideal& V, const HypersurfaceFamily& fam, int l,
                                           const SamplingConfig& cfg);

// Stability of dim(intersection of the family) across samples, inside V
// when given (ambient space otherwise).
GenericityReport genericity_sample(const HypersurfaceFamily& fam, const SamplingConfig& cfg,
                                   const Ideal* V = nullptr);

// The sample points a config produces (pole-free for every entry of fam).
std::vector<Rational> sample_points(const HypersurfaceFamily& fam, const SamplingConfig& cfg);

} // namespace smtlab
