#include "smtlab/position.hpp"

#include "smtlab/errors.hpp"

#include <algorithm>
#include <random>

namespace smtlab {

HypersurfaceFamily make_family(int nvars, std::vector<HypersurfaceEntry> entries) {
    HypersurfaceFamily fam;
    fam.nvars = nvars;
    for (auto& e : entries) {
        if (e.poly.num_vars() != nvars)
            throw std::invalid_argument("family entry '" + e.name + "' over a different variable set");
        if (e.poly.is_zero())
            throw DomainError("family entry '" + e.name + "' is identically zero");
        if (e.poly.degree() != e.degree)
            throw DomainError("family entry '" + e.name + "' has degree " +
                              std::to_string(e.poly.degree()) + ", declared " +
                              std::to_string(e.degree));
        fam.entries.push_back(std::move(e));
    }
    return fam;
}

namespace {

void validate_config(const SamplingConfig& cfg) {
    if (cfg.num_points < 3)
        throw std::invalid_argument("sampling config needs num_points >= 3");
    if (cfg.coeff_bound < 1) throw std::invalid_argument("sampling config needs coeff_bound >= 1");
}

// z0 must not be a pole of any coefficient of q and must not kill every
// coefficient (Q(z0)* would be all of projective space).
bool admissible_sample(const MovingPoly& q, const Rational& z0) {
    bool all_vanish = true;
    for (const auto& [m, c] : q.terms()) {
        if (up::eval(c.den(), z0) == 0) return false;
        if (up::eval(c.num(), z0) != 0) all_vanish = false;
    }
    return !all_vanish;
}

} // namespace

std::vector<Rational> sample_points(const HypersurfaceFamily& fam, const SamplingConfig& cfg) {
    validate_config(cfg);
    std::mt19937_64 eng(cfg.seed);
    auto draw_int = [&](long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    std::vector<Rational> points;
    long attempts = 0;
    const long max_attempts = 400L * cfg.num_points;
    while (static_cast<int>(points.size()) < cfg.num_points) {
        if (++attempts > max_attempts)
            throw BudgetError("sampling failed: every candidate hit a pole or a vanishing "
                              "coefficient (coeff_bound too small)");
        Rational z0(draw_int(-cfg.coeff_bound, cfg.coeff_bound), draw_int(1, cfg.coeff_bound));
        z0.canonicalize();
        if (std::find(points.begin(), points.end(), z0) != points.end()) continue;
        bool ok = true;
        for (const auto& e : fam.entries)
            if (!admissible_sample(e.poly, z0)) {
                ok = false;
                break;
            }
        if (ok) points.push_back(z0);
    }
    return points;
}

Codim codim_in_V(const Ideal& V, const std::vector<Poly>& polys) {
    auto dim_v = projective_dimension(V);
    if (!dim_v) throw DomainError("codim_in_V: V is empty");
    auto dim_cut = projective_dimension(with_extra_generators(V, polys));
    if (!dim_cut) return std::nullopt;
    return *dim_v - *dim_cut;
}

namespace {

struct SampleScan {
    std::map<std::vector<int>, Codim> table;
    Rational best{0};
    std::vector<int> witness;
    bool degenerate = false; // some singleton has codimension 0
};

// DFS over subsets, extending by larger indices; descendants of
// empty-intersection subsets are skipped (their ratio is 0 by convention).
void scan_subsets(const Ideal& V, int dim_v, const std::vector<Poly>& evaluated,
                  std::vector<int>& subset, std::vector<Poly>& gens, int next, SampleScan& out) {
    for (int i = next; i < static_cast<int>(evaluated.size()); ++i) {
        subset.push_back(i + 1);
        gens.push_back(evaluated[i]);
        auto dim_cut = projective_dimension(with_extra_generators(V, gens));
        Codim codim = dim_cut ? Codim(dim_v - *dim_cut) : std::nullopt;
        out.table[subset] = codim;
        if (codim) {
            if (*codim == 0) {
                out.degenerate = true;
            } else {
                Rational ratio(static_cast<long>(subset.size()), static_cast<long>(*codim));
                ratio.canonicalize();
                if (out.witness.empty() || ratio > out.best) {
                    out.best = ratio;
                    out.witness = subset;
                }
            }
            scan_subsets(V, dim_v, evaluated, subset, gens, i + 1, out);
        }
        gens.pop_back();
        subset.pop_back();
    }
}

std::vector<Poly> evaluate_family(const HypersurfaceFamily& fam, const Rational& z0) {
    std::vector<Poly> out;
    out.reserve(fam.entries.size());
    for (const auto& e : fam.entries) out.push_back(evaluate_moving(e.poly, z0));
    return out;
}

} // namespace

DistributiveReport distributive_constant(const Ideal& V, const HypersurfaceFamily& fam,
                                         const SamplingConfig& cfg) {
    if (fam.size() == 0) throw std::invalid_argument("distributive_constant: empty family");
    if (fam.size() > 15)
        throw BudgetError("distributive_constant: subset cap exceeded (q = " +
                          std::to_string(fam.size()) + " > 15)");
    auto dim_v = projective_dimension(V);
    if (!dim_v) throw DomainError("distributive_constant: V is empty");

    DistributiveReport report;
    report.samples_used = sample_points(fam, cfg);
    std::vector<SampleScan> scans;
    for (const Rational& z0 : report.samples_used) {
        SampleScan scan;
        std::vector<int> subset;
        std::vector<Poly> gens;
        std::vector<Poly> evaluated = evaluate_family(fam, z0);
        scan_subsets(V, *dim_v, evaluated, subset, gens, 0, scan);
        scans.push_back(std::move(scan));
    }

    int good = -1;
    bool any_degenerate = false;
    for (std::size_t s = 0; s < scans.size(); ++s) {
        if (scans[s].degenerate) {
            any_degenerate = true;
            continue;
        }
        report.per_sample_delta.push_back(scans[s].best);
        if (good < 0 || scans[s].best > scans[good].best) good = static_cast<int>(s);
    }
    if (good < 0) {
        // codimension 0 at every sample: some Q_i contains V generically
        throw DomainError("distributive_constant: V is contained in a family hypersurface at "
                          "every sample (codimension 0)");
    }
    report.delta = scans[good].best;
    report.witness = scans[good].witness;
    report.table = scans[good].table;
    report.stable = !any_degenerate;
    for (const SampleScan& s : scans)
        if (!s.degenerate && s.table != scans[good].table) report.stable = false;
    return report;
}

SubgeneralReport subgeneral_position_check(const Ideal& V, const HypersurfaceFamily& fam, int l,
                                           const SamplingConfig& cfg) {
    if (l < 0) throw std::invalid_argument("subgeneral_position_check: negative l");
    if (fam.size() < l + 1)
        throw std::invalid_argument("subgeneral_position_check: needs q >= l+1");
    if (!projective_dimension(V)) throw DomainError("subgeneral_position_check: V is empty");

    SubgeneralReport report;
    report.samples_used = sample_points(fam, cfg);
    int q = fam.size();
    std::vector<int> subset(l + 1);
    for (const Rational& z0 : report.samples_used) {
        std::vector<Poly> evaluated = evaluate_family(fam, z0);
        // iterate over all (l+1)-subsets in lexicographic order
        for (int i = 0; i <= l; ++i) subset[i] = i;
        for (;;) {
            std::vector<Poly> gens;
            for (int i : subset) gens.push_back(evaluated[i]);
            if (projective_dimension(with_extra_generators(V, gens))) {
                report.holds = false;
                for (int i : subset) report.violating_subset.push_back(i + 1);
                return report;
            }
            int k = l;
            while (k >= 0 && subset[k] == q - (l + 1) + k) --k;
            if (k < 0) break;
            ++subset[k];
            for (int i = k + 1; i <= l; ++i) subset[i] = subset[i - 1] + 1;
        }
    }
    return report;
}

GenericityReport genericity_sample(const HypersurfaceFamily& fam, const SamplingConfig& cfg,
                                   const Ideal* V) {
    if (fam.size() == 0) throw std::invalid_argument("genericity_sample: empty family");
    GenericityReport report;
    report.samples_used = sample_points(fam, cfg);
    Ideal base = V ? *V : Ideal::zero(fam.nvars);
    for (const Rational& z0 : report.samples_used) {
        report.values.push_back(
            projective_dimension(with_extra_generators(base, evaluate_family(fam, z0))));
    }
    for (std::size_t i = 1; i < report.values.size(); ++i)
        if (report.values[i] != report.values[0]) report.stable = false;
    return report;
}

} // namespace smtlab
