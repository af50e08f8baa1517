#pragma once

#include "modular.hpp"

#include <atomic>
#include <thread>

namespace stscreen {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One candidate (lambda, gamma, mu1) with the filters it passed.  Survivors
// written into a report carry all four flags.
struct CandidateTriple {
    Weight lambda;
    Weight gamma;
    Weight mu1;
    bool inner_ineq = false;
    bool weight_ineq = false;
    bool linkage = false;
    bool gamma_not_simple = false;

    friend bool operator==(const CandidateTriple&, const CandidateTriple&) = default;
};

struct ScreeningCounts {
    long long lambdas_scanned = 0;
    long long candidate_gamma_pairs = 0; // (lambda, gamma) passing the inner inequalities
    long long weight_pairs = 0;          // (lambda, gamma, mu1) passing the weight inequality
    long long linked_pairs = 0;          // ... additionally G1-linked
    long long survivors = 0;             // ... with nabla(gamma) not simple
    long long surrogate_checked = 0;
    long long surrogate_eliminated = 0;

    friend bool operator==(const ScreeningCounts&, const ScreeningCounts&) = default;
};

struct ScreeningReport {
    static constexpr const char* schema = "v1";
    char series = 'A';
    int rank = 0;
    int p = 2;
    std::vector<Weight> resolved; // lambdas with no surviving triple, sorted
    std::vector<std::pair<Weight, std::vector<CandidateTriple>>> unresolved; // sorted by lambda
    std::vector<CandidateTriple> surrogate_eliminated; // reported separately
    ScreeningCounts counts;

    bool all_resolved() const { return unresolved.empty(); }

    friend bool operator==(const ScreeningReport&, const ScreeningReport&) = default;
};

// Dominant gamma != 0 with p<gamma,alpha0^vee> <= <lambda,alpha0^vee> and
// p<gamma,alphatilde^vee> <= <lambda,alphatilde^vee>, in lexicographic order.
inline std::vector<Weight> candidate_gammas(const Weight& lambda, const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    if (!is_restricted(lambda, ctx)) throw std::invalid_argument("candidate_gammas requires lambda in X_1");
    if (lambda == ctx.steinberg_weight())
        throw std::invalid_argument("candidate_gammas rejects the Steinberg weight");
    const long long bound0 = sys.pairing(lambda, sys.alpha0());
    const long long bound1 = sys.pairing(lambda, sys.alpha_tilde());
    const auto& c0 = sys.alpha0().coroot_coords;
    const auto& c1 = sys.alpha_tilde().coroot_coords;
    std::vector<Weight> out;
    Weight g(std::vector<int>(static_cast<size_t>(sys.rank), 0));
    std::function<void(int, long long, long long)> rec = [&](int k, long long s0, long long s1) {
        if (s0 > bound0 || s1 > bound1) return;
        if (k == sys.rank) {
            if (!g.is_zero()) out.push_back(g);
            return;
        }
        for (int v = 0;; ++v) {
            g[k] = v;
            long long n0 = s0 + static_cast<long long>(v) * ctx.p * c0[static_cast<size_t>(k)];
            long long n1 = s1 + static_cast<long long>(v) * ctx.p * c1[static_cast<size_t>(k)];
            if (n0 > bound0 || n1 > bound1) break;
            rec(k + 1, n0, n1);
        }
        g[k] = 0;
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// mu1 in X_1 with p*gamma <= lambda - mu1 in the integral dominance order.
inline std::vector<Weight> weight_witnesses(const Weight& lambda, const Weight& gamma, const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    if (!is_restricted(lambda, ctx)) throw std::invalid_argument("witnesses requires lambda in X_1");
    Weight target = lambda - ctx.p * gamma;
    auto ts = sys.root_coords_scaled(target);
    std::vector<Weight> out;
    for (const auto& mu1 : restricted_weights(ctx)) {
        auto ms = sys.root_coords_scaled(mu1);
        bool ok = true;
        for (size_t i = 0; i < ts.size(); ++i) {
            long long d = ts[i] - ms[i];
            if (d < 0 || d % sys.cartan_det != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(mu1);
    }
    return out;
}

// Witnesses per the screening method: the weight inequality plus linkage.
// The linkage test is the G_1T-level one, lambda in the W_p dot orbit of
// mu_(1) + p*gamma; it implies that lambda is G_1-linked to mu_(1) (the
// block relation adds translation by pX, and p*gamma lies in pX).
inline std::vector<Weight> witnesses(const Weight& lambda, const Weight& gamma, const PrimeContext& ctx) {
    std::vector<Weight> out;
    Weight lam_rep = wp_orbit_rep(lambda, ctx);
    for (const auto& mu1 : weight_witnesses(lambda, gamma, ctx))
        if (wp_orbit_rep(mu1 + ctx.p * gamma, ctx) == lam_rep) out.push_back(mu1);
    return out;
}

struct ScreenOptions {
    long long cap = 100000;
    int jobs = 1;
    std::optional<Weight> lambda_filter;
};

namespace detail {

// Coefficient of chi((p-1)rho + p*gamma) in St_1 (x) H^0(lambda); zero means
// the corresponding induced section is absent at character level.
inline BigInt steinberg_tensor_chi_coefficient(const Weight& lambda, const Weight& gamma, const PrimeContext& ctx) {
    Character st = weyl_character(ctx.sys, ctx.steinberg_weight());
    Character ch = weyl_character(ctx.sys, lambda);
    SignedChiExpansion dec = decompose_into_chi(tensor_character(st, ch));
    Weight target = ctx.steinberg_weight() + ctx.p * gamma;
    auto it = dec.terms.find(target);
    return it == dec.terms.end() ? BigInt(0) : it->second;
}

} // namespace detail

// The full screening pipeline for (type, p) at r = 1.
inline ScreeningReport screen(const PrimeContext& ctx, const ScreenOptions& opts = {}) {
    const RootSystem& sys = *ctx.sys;
    if (ctx.r != 1) throw std::invalid_argument("screen is defined for r = 1 only");
    long long total = 1;
    for (int i = 0; i < sys.rank; ++i) {
        total *= ctx.p;
        if (total > opts.cap)
            throw ResourceLimitError("screen: |X_1| = p^rank exceeds the enumeration cap (" +
                                     std::to_string(opts.cap) + ")");
    }

    const std::vector<Weight> X1 = restricted_weights(ctx);
    const Weight st = ctx.steinberg_weight();

    // Precompute scaled root coordinates and W_p orbit representatives.
    std::vector<std::vector<long long>> rc(X1.size());
    std::vector<Weight> wp_rep(X1.size());
    for (size_t i = 0; i < X1.size(); ++i) {
        rc[i] = sys.root_coords_scaled(X1[i]);
        wp_rep[i] = wp_orbit_rep(X1[i], ctx);
    }

    // Simplicity of candidate gammas is shared across lambdas; precompute over
    // the Steinberg-weight bound, which dominates every lambda.
    std::map<Weight, bool> gamma_simple;
    {
        PrimeContext stctx = ctx;
        const long long b0 = sys.pairing(st, sys.alpha0());
        const long long b1 = sys.pairing(st, sys.alpha_tilde());
        Weight g(std::vector<int>(static_cast<size_t>(sys.rank), 0));
        std::function<void(int, long long, long long)> rec = [&](int k, long long s0, long long s1) {
            if (k == sys.rank) {
                if (!g.is_zero()) gamma_simple.emplace(g, is_weyl_simple(g, stctx));
                return;
            }
            for (int v = 0;; ++v) {
                g[k] = v;
                long long n0 = s0 + static_cast<long long>(v) * ctx.p * sys.alpha0().coroot_coords[static_cast<size_t>(k)];
                long long n1 = s1 + static_cast<long long>(v) * ctx.p * sys.alpha_tilde().coroot_coords[static_cast<size_t>(k)];
                if (n0 > b0 || n1 > b1) break;
                rec(k + 1, n0, n1);
            }
            g[k] = 0;
        };
        rec(0, 0, 0);
    }

    struct PerLambda {
        std::vector<CandidateTriple> survivors;
        ScreeningCounts counts;
    };
    std::vector<PerLambda> results(X1.size());

    auto run_lambda = [&](size_t li) {
        const Weight& lambda = X1[li];
        PerLambda& out = results[li];
        if (lambda == st) return;
        if (opts.lambda_filter && lambda != *opts.lambda_filter) return;
        out.counts.lambdas_scanned = 1;
        for (const auto& gamma : candidate_gammas(lambda, ctx)) {
            ++out.counts.candidate_gamma_pairs;
            bool not_simple = !gamma_simple.at(gamma);
            Weight target = lambda - ctx.p * gamma;
            auto ts = sys.root_coords_scaled(target);
            for (size_t mi = 0; mi < X1.size(); ++mi) {
                bool ok = true;
                for (size_t c = 0; c < ts.size(); ++c) {
                    long long d = ts[c] - rc[mi][c];
                    if (d < 0 || d % sys.cartan_det != 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                ++out.counts.weight_pairs;
                if (wp_orbit_rep(X1[mi] + ctx.p * gamma, ctx) != wp_rep[li]) continue;
                ++out.counts.linked_pairs;
                if (!not_simple) continue;
                ++out.counts.survivors;
                out.survivors.push_back(CandidateTriple{lambda, gamma, X1[mi], true, true, true, true});
            }
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < X1.size(); ++i) run_lambda(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < X1.size(); i = next.fetch_add(1)) run_lambda(i);
            });
        for (auto& th : pool) th.join();
    }

    ScreeningReport rep;
    rep.series = series_char(sys.series);
    rep.rank = sys.rank;
    rep.p = ctx.p;
    for (size_t i = 0; i < X1.size(); ++i) {
        if (X1[i] == st) continue;
        if (opts.lambda_filter && X1[i] != *opts.lambda_filter) continue;
        auto& r = results[i];
        rep.counts.lambdas_scanned += r.counts.lambdas_scanned;
        rep.counts.candidate_gamma_pairs += r.counts.candidate_gamma_pairs;
        rep.counts.weight_pairs += r.counts.weight_pairs;
        rep.counts.linked_pairs += r.counts.linked_pairs;
        rep.counts.survivors += r.counts.survivors;
        std::vector<CandidateTriple> kept;
        for (auto& tr : r.survivors) {
            // The B3, p=2 pipeline resolves lambda = w1 + w2 by a character
            // computation inside St_1 (x) H^0(lambda); this filter applies only
            // there and its eliminations are reported separately.
            bool surrogate_case = sys.series == Series::B && sys.rank == 3 && ctx.p == 2 && tr.mu1.is_zero();
            if (surrogate_case) {
                ++rep.counts.surrogate_checked;
                if (detail::steinberg_tensor_chi_coefficient(tr.lambda, tr.gamma, ctx) == 0) {
                    ++rep.counts.surrogate_eliminated;
                    rep.surrogate_eliminated.push_back(tr);
                    continue;
                }
            }
            kept.push_back(tr);
        }
        std::sort(kept.begin(), kept.end(), [](const CandidateTriple& a, const CandidateTriple& b) {
            if (a.mu1 != b.mu1) return a.mu1 < b.mu1;
            return a.gamma < b.gamma;
        });
        if (kept.empty())
            rep.resolved.push_back(X1[i]);
        else
            rep.unresolved.emplace_back(X1[i], std::move(kept));
    }
    return rep;
}

// Empirical content of the p >= 2h-4 theorem: every gamma that survives the
// inequality filters with at least one witness lies in the closed fundamental
// alcove.
inline bool check_bound_theorem(const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    int h = sys.coxeter_number;
    if (ctx.p < 2 * h - 4) throw std::invalid_argument("check_bound_theorem requires p >= 2h-4");
    const Weight st = ctx.steinberg_weight();
    // Gammas reachable from any lambda obey the Steinberg-weight bound.
    std::vector<Weight> outside;
    {
        const long long b0 = sys.pairing(st, sys.alpha0());
        const long long b1 = sys.pairing(st, sys.alpha_tilde());
        Weight g(std::vector<int>(static_cast<size_t>(sys.rank), 0));
        std::function<void(int, long long, long long)> rec = [&](int k, long long s0, long long s1) {
            if (k == sys.rank) {
                if (!g.is_zero() && !in_fundamental_alcove_closure(g, ctx)) outside.push_back(g);
                return;
            }
            for (int v = 0;; ++v) {
                g[k] = v;
                long long n0 = s0 + static_cast<long long>(v) * ctx.p * sys.alpha0().coroot_coords[static_cast<size_t>(k)];
                long long n1 = s1 + static_cast<long long>(v) * ctx.p * sys.alpha_tilde().coroot_coords[static_cast<size_t>(k)];
                if (n0 > b0 || n1 > b1) break;
                rec(k + 1, n0, n1);
            }
            g[k] = 0;
        };
        rec(0, 0, 0);
    }
    if (outside.empty()) return true;
    for (const auto& lambda : restricted_weights(ctx)) {
        if (lambda == st) continue;
        for (const auto& gamma : candidate_gammas(lambda, ctx)) {
            if (in_fundamental_alcove_closure(gamma, ctx)) continue;
            if (!witnesses(lambda, gamma, ctx).empty()) return false;
        }
    }
    return true;
}

// Empirical content of the <lambda, alpha0^vee> <= 2p^r - 1 bound: every
// surviving gamma for this lambda is minuscule.
inline bool check_weight_bound(const Weight& lambda, const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    if (sys.pairing(lambda, sys.alpha0()) > 2 * ctx.q() - 1)
        throw std::invalid_argument("check_weight_bound requires <lambda, alpha0^vee> <= 2p^r - 1");
    if (lambda == ctx.steinberg_weight()) return true; // nothing to screen
    for (const auto& gamma : candidate_gammas(lambda, ctx)) {
        if (is_minuscule(sys, gamma)) continue;
        if (!witnesses(lambda, gamma, ctx).empty()) return false;
    }
    return true;
}

// Classification of fundamental weights via h(j,r,p) = <w_j, alpha0^vee>/p^r.
// For F4 the highest-root coroot replaces alpha0^vee and the flag is decided
// by solvability of p^r delta <=_Q w_j over nonzero dominant delta.
struct FundWeightEntry {
    int j = 0; // 1-based node index
    long long pairing = 0;
    bool flagged = false;
    std::optional<Weight> delta; // F4 witness when flagged
};

inline std::vector<FundWeightEntry> fundamental_weight_check(const PrimeContext& ctx, int r) {
    const RootSystem& sys = *ctx.sys;
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    long long pr = 1;
    for (int i = 0; i < r; ++i) pr *= ctx.p;
    const bool f4 = sys.series == Series::F;
    const PositiveRoot& tau = f4 ? sys.alpha_tilde() : sys.alpha0();
    std::vector<FundWeightEntry> out;
    for (int j = 0; j < sys.rank; ++j) {
        FundWeightEntry e;
        e.j = j + 1;
        std::vector<int> c(static_cast<size_t>(sys.rank), 0);
        c[static_cast<size_t>(j)] = 1;
        Weight wj(std::move(c));
        e.pairing = sys.pairing(wj, tau);
        if (!f4) {
            e.flagged = e.pairing >= 2 * pr;
        } else {
            // enumerate dominant delta != 0 with p^r <delta, tau> <= <w_j, tau>
            Weight d(std::vector<int>(static_cast<size_t>(sys.rank), 0));
            std::function<bool(int, long long)> rec = [&](int k, long long s) -> bool {
                if (k == sys.rank) {
                    if (d.is_zero()) return false;
                    Weight scaled = static_cast<int>(pr) * d;
                    if (sys.dominance_le(scaled, wj, RootSystem::DominanceMode::Rational)) {
                        e.delta = d;
                        return true;
                    }
                    return false;
                }
                for (int v = 0;; ++v) {
                    d[k] = v;
                    long long n = s + static_cast<long long>(v) * pr * tau.coroot_coords[static_cast<size_t>(k)];
                    if (n > e.pairing) break;
                    if (rec(k + 1, n)) return true;
                }
                d[k] = 0;
                return false;
            };
            e.flagged = rec(0, 0);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Weights of c strictly above sigma and, for each, whether sigma is strongly
// linked to it.  sigma is certified maximal when every flag is false.
struct MaximalityReport {
    Weight sigma;
    std::vector<Weight> weights_above;
    std::vector<bool> strong_links;

    bool certified_maximal() const {
        for (bool b : strong_links)
            if (b) return false;
        return true;
    }
};

inline MaximalityReport maximality_report(const Character& c, const Weight& sigma, const PrimeContext& ctx) {
    const RootSystem& sys = *c.system();
    if (c.multiplicity(sigma) == 0) throw std::invalid_argument("sigma is not a weight of the character");
    std::set<Weight> above;
    for (const auto& [nu, m] : c.full_support()) {
        (void)m;
        if (nu == sigma) continue;
        if (sys.dominance_le(sigma, nu, RootSystem::DominanceMode::Integral)) above.insert(nu);
    }
    MaximalityReport rep;
    rep.sigma = sigma;
    for (const auto& nu : above) {
        rep.weights_above.push_back(nu);
        rep.strong_links.push_back(strongly_linked(sigma, nu, ctx));
    }
    return rep;
}

} // namespace stscreen
