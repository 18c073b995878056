#include "livlab/transfer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "livlab/error.hpp"
#include "livlab/rng.hpp"

namespace livlab {

namespace {

// Deterministic parallel map over [0, count): results land by index, so the
// output is independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t n_threads = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t t = 0; t < n_threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

double TransferSolution::interpolate(TorusPoint p) const {
    int n = grid_n;
    double gx = p.x1 * n;
    double gy = p.x2 * n;
    int i0 = static_cast<int>(std::floor(gx)) % n;
    int j0 = static_cast<int>(std::floor(gy)) % n;
    double fx = gx - std::floor(gx);
    double fy = gy - std::floor(gy);
    int i1 = (i0 + 1) % n;
    int j1 = (j0 + 1) % n;
    return (1 - fx) * (1 - fy) * value_at(i0, j0) + fx * (1 - fy) * value_at(i1, j0) +
           (1 - fx) * fy * value_at(i0, j1) + fx * fy * value_at(i1, j1);
}

double mean_constant(const FourierCocycle& phi) { return phi.mean(); }

std::vector<ObstructionWitness> periodic_obstruction(const FourierCocycle& phi,
                                                     const HyperbolicAutomorphism& map,
                                                     int max_period) {
    if (max_period < 1 || max_period > 12)
        fail(ErrorKind::invalid_input, "periodic_obstruction: max_period must lie in [1,12]");
    double c = mean_constant(phi);
    std::vector<ObstructionWitness> out;
    for (int m = 1; m <= max_period; ++m) {
        for (auto& orbit : periodic_points(map, m)) {
            if (static_cast<int>(orbit.size()) != m) continue;  // least period < m, already seen
            double sum = 0.0;
            for (const TorusPoint& p : orbit) sum += phi.eval(p) - c;
            double mag = std::fabs(sum);
            // per-point evaluation roundoff model
            double err = 1e-13 * static_cast<double>(orbit.size()) * (1.0 + phi.sup_bound());
            if (mag > err + 1e-9) {
                ObstructionWitness w;
                w.kind = ObstructionWitness::Kind::periodic_orbit;
                w.payload = orbit;
                w.magnitude = mag;
                w.certified_floor = mag - err;
                out.push_back(std::move(w));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ObstructionWitness& a, const ObstructionWitness& b) {
                  return a.magnitude > b.magnitude;
              });
    return out;
}

TransferSolution solve_via_su_paths(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                                    TorusPoint anchor, int grid_n, double tol,
                                    double bracket_radius) {
    if (grid_n < 4) fail(ErrorKind::invalid_input, "solve_via_su_paths: grid_n must be >= 4");
    if (!(tol > 0.0)) fail(ErrorKind::invalid_input, "solve_via_su_paths: tol must be positive");
    TransferSolution sol;
    sol.grid_n = grid_n;
    sol.anchor = anchor;
    sol.c = mean_constant(phi);
    FourierCocycle phi0 = phi;
    phi0.set_mean(0.0);
    std::size_t count = static_cast<std::size_t>(grid_n) * grid_n;
    sol.values.assign(count, 0.0);
    sol.errors.assign(count, 0.0);

    std::vector<std::exception_ptr> errs(count);
    parallel_for(count, [&](std::size_t idx) {
        try {
            int i = static_cast<int>(idx) / grid_n;
            int j = static_cast<int>(idx) % grid_n;
            TorusPoint y = wrap(static_cast<double>(i) / grid_n, static_cast<double>(j) / grid_n);
            SuPath path = su_path(map, anchor, y, bracket_radius);
            PcfValue v = pcf_path(phi0, map, path, tol);
            sol.values[idx] = -v.value;
            sol.errors[idx] = v.error_bound;
        } catch (...) {
            errs[idx] = std::current_exception();
        }
    });
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return sol;
}

double consistency_check(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                         TransferSolution& sol, int n_alternates, std::uint64_t seed, double tol,
                         double bracket_radius) {
    if (n_alternates < 1)
        fail(ErrorKind::invalid_input, "consistency_check: n_alternates must be >= 1");
    if (sol.grid_n < 1) fail(ErrorKind::invalid_input, "consistency_check: empty solution");

    FourierCocycle phi0 = phi;
    phi0.set_mean(0.0);

    Rng rng(seed);
    int n = sol.grid_n;
    std::size_t node_budget = std::min<std::size_t>(64, static_cast<std::size_t>(n) * n);
    static const LatticeVector kTranslates[] = {{1, 0},  {0, 1},  {-1, 0}, {0, -1},
                                                {1, 1},  {-1, -1}, {1, -1}, {-1, 1}};

    struct Job {
        TorusPoint y;
        std::size_t idx;
        std::vector<TorusPoint> detours;
        int n_alt;
    };
    std::vector<Job> jobs;
    for (std::size_t k = 0; k < node_budget; ++k) {
        int i = static_cast<int>(rng.uniform_int(0, n - 1));
        int j = static_cast<int>(rng.uniform_int(0, n - 1));
        Job job;
        job.idx = static_cast<std::size_t>(i) * n + j;
        job.y = wrap(static_cast<double>(i) / n, static_cast<double>(j) / n);
        job.n_alt = n_alternates;
        for (int a = 0; a < n_alternates; ++a)
            job.detours.push_back(wrap(rng.uniform(), rng.uniform()));
        jobs.push_back(std::move(job));
    }

    std::vector<double> spreads(jobs.size(), 0.0), allowances(jobs.size(), 0.0);
    std::vector<std::exception_ptr> errs(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        try {
            const Job& job = jobs[k];
            double lo = sol.values[job.idx], hi = sol.values[job.idx];
            double allowance = sol.errors[job.idx];
            for (int a = 0; a < job.n_alt; ++a) {
                double v, bound;
                if (a % 2 == 0) {
                    // detour anchor -> z -> y
                    TorusPoint z = job.detours[a];
                    SuPath p1 = su_path(map, sol.anchor, z, bracket_radius);
                    SuPath p2 = su_path(map, z, job.y, bracket_radius);
                    PcfValue pv = pcf_path(phi0, map, p1, tol) + pcf_path(phi0, map, p2, tol);
                    v = -pv.value;
                    bound = pv.error_bound;
                } else {
                    // forced lattice translate in the bracket
                    LatticeVector kv = kTranslates[(a / 2) % 8];
                    SuPath p = su_path_via(map, sol.anchor, job.y, kv);
                    PcfValue pv = pcf_path(phi0, map, p, tol);
                    v = -pv.value;
                    bound = pv.error_bound;
                }
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                allowance = std::max(allowance, bound);
            }
            spreads[k] = hi - lo;
            allowances[k] = 2.0 * allowance;
        } catch (...) {
            errs[k] = std::current_exception();
        }
    });
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    double spread = 0.0, allowance = 0.0;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (spreads[k] > spread) {
            spread = spreads[k];
            allowance = allowances[k];
        }
    }
    sol.consistency_spread = spread;
    sol.spread_allowance = allowance;
    return spread;
}

double residual(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                TransferSolution& sol) {
    int n = sol.grid_n;
    double c = sol.c;
    std::vector<double> rows(n, 0.0);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            TorusPoint p = wrap((static_cast<double>(i) + 0.5) / n,
                                (static_cast<double>(j) + 0.5) / n);
            double r = phi.eval(p) - sol.interpolate(map.apply(p)) + sol.interpolate(p) - c;
            worst = std::max(worst, std::fabs(r));
        }
        rows[i] = worst;
    });
    double sup = 0.0;
    for (double w : rows) sup = std::max(sup, w);
    sol.residual_sup = sup;
    return sup;
}

ClassifyResult classify(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                        const ClassifyConfig& config) {
    ClassifyResult res;
    auto witnesses = periodic_obstruction(phi, map, config.max_period);

    res.solution = solve_via_su_paths(phi, map, config.anchor, config.grid_n, config.tol,
                                      config.bracket_radius);
    consistency_check(phi, map, res.solution, config.n_alternates, config.seed, config.tol,
                      config.bracket_radius);
    residual(phi, map, res.solution);

    if (!witnesses.empty() && witnesses.front().certified_floor > config.witness_tol) {
        res.verdict = ClassifyResult::Verdict::obstructed;
        res.witness = witnesses.front();
        return res;
    }
    if (res.solution.consistency_spread >
        res.solution.spread_allowance + config.witness_tol) {
        ObstructionWitness w;
        w.kind = ObstructionWitness::Kind::accessible_cycle;
        w.payload = AccessibleCycle{};  // cycle family is implicit in the path alternates
        w.magnitude = res.solution.consistency_spread;
        w.certified_floor = res.solution.consistency_spread - res.solution.spread_allowance;
        res.verdict = ClassifyResult::Verdict::obstructed;
        res.witness = w;
        return res;
    }
    res.verdict = ClassifyResult::Verdict::coboundary;
    return res;
}

}  // namespace livlab
