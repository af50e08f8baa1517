#pragma once

#include "character.hpp"

#include <optional>

namespace stscreen {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Characteristic-p context: the root system together with p and the Frobenius
// twist depth r.  Immutable.
struct PrimeContext {
    std::shared_ptr<const RootSystem> sys;
    int p = 2;
    int r = 1;

    PrimeContext(std::shared_ptr<const RootSystem> s, int prime, int depth = 1)
        : sys(std::move(s)), p(prime), r(depth) {
        if (!is_prime(p)) throw std::invalid_argument("p must be prime");
        if (r < 1) throw std::invalid_argument("r must be >= 1");
    }

    // p^r, guarded against overflow for the ranks we enumerate.
    long long q() const {
        long long v = 1;
        for (int i = 0; i < r; ++i) {
            v *= p;
            if (v > (1ll << 40)) throw std::overflow_error("p^r too large");
        }
        return v;
    }

    Weight steinberg_weight() const {
        return static_cast<int>(q() - 1) * sys->rho;
    }
};

// The p^r-restricted dominant weights in lexicographic order.
inline std::vector<Weight> restricted_weights(const PrimeContext& ctx) {
    long long bound = ctx.q();
    long long count = 1;
    for (int i = 0; i < ctx.sys->rank; ++i) {
        count *= bound;
        if (count > 20'000'000ll) throw std::length_error("restricted weight set too large to enumerate");
    }
    std::vector<Weight> out;
    out.reserve(static_cast<size_t>(count));
    Weight w(std::vector<int>(static_cast<size_t>(ctx.sys->rank), 0));
    std::function<void(int)> rec = [&](int k) {
        if (k == ctx.sys->rank) {
            out.push_back(w);
            return;
        }
        for (int v = 0; v < bound; ++v) {
            w[k] = v;
            rec(k + 1);
        }
        w[k] = 0;
    };
    rec(0);
    return out;
}

inline bool is_restricted(const Weight& w, const PrimeContext& ctx) {
    long long bound = ctx.q();
    for (int c : w.coords)
        if (c < 0 || c >= bound) return false;
    return true;
}

// mu_(r) = (p^r - 1) rho - mu, an involution on the restricted weights.
inline Weight mu_complement(const Weight& mu, const PrimeContext& ctx) {
    if (!is_restricted(mu, ctx)) throw std::invalid_argument("mu_complement requires a restricted weight");
    return ctx.steinberg_weight() - mu;
}

// Canonical representative of the G_1-linkage class of lambda.  The blocks of
// the first Frobenius kernel are the dot orbits of W_p = W x p(root lattice)
// taken modulo p X(T); the class therefore meets the closed fundamental
// alcove in det(cartan) points, one per coset of X over the root lattice, and
// the lexicographically smallest of them is the canonical representative.
struct LinkageClassRep {
    Weight canonical;
    friend bool operator==(const LinkageClassRep&, const LinkageClassRep&) = default;
};

namespace detail {

// Unique point of the W_p orbit of x (ordinary action) inside the closed
// alcove 0 <= <., alpha_i^vee>, <., alpha0^vee> <= p, by repeated reflections.
inline Weight alcove_reduce(Weight x, const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    const Weight alpha0_fw = sys.root_fw(sys.alpha0());
    for (long long guard = 0;; ++guard) {
        if (guard > 1'000'000) throw std::logic_error("alcove reduction failed to terminate");
        int neg = -1;
        for (int i = 0; i < sys.rank; ++i)
            if (x[i] < 0) {
                neg = i;
                break;
            }
        if (neg >= 0) {
            x = sys.simple_reflect(x, neg);
            continue;
        }
        long long t = sys.pairing(x, sys.alpha0());
        if (t > ctx.p) {
            // affine reflection about <., alpha0^vee> = p
            long long c = t - ctx.p;
            for (int i = 0; i < sys.rank; ++i) x[i] -= static_cast<int>(c) * alpha0_fw[i];
            continue;
        }
        break;
    }
    return x;
}

} // namespace detail

inline LinkageClassRep linkage_rep(const Weight& lambda, const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    std::optional<Weight> best;
    for (const auto& nu : sys.fundamental_group_reps) {
        Weight x = lambda + sys.rho + ctx.p * nu;
        Weight r = detail::alcove_reduce(std::move(x), ctx);
        if (!best || r < *best) best = r;
    }
    return LinkageClassRep{*best - sys.rho};
}

// Canonical representative of the finer W_p = W x p(root lattice) dot orbit
// itself (the G_1T notion, no translation by pX).  Used by the screening
// filter, which tests lambda against mu_(1) + p*gamma in this relation.
inline Weight wp_orbit_rep(const Weight& lambda, const PrimeContext& ctx) {
    return detail::alcove_reduce(lambda + ctx.sys->rho, ctx) - ctx.sys->rho;
}

inline bool wp_linked(const Weight& lambda, const Weight& mu, const PrimeContext& ctx) {
    return wp_orbit_rep(lambda, ctx) == wp_orbit_rep(mu, ctx);
}

inline bool g1_linked(const Weight& lambda, const Weight& mu, const PrimeContext& ctx) {
    return linkage_rep(lambda, ctx) == linkage_rep(mu, ctx);
}

// mu is strongly linked to lambda: mu == lambda or mu is reachable from lambda
// by affine reflections s_{beta,mp}. that strictly descend in the dominance
// order.  Depth-first search with the interval [mu, lambda] as pruning.
inline bool strongly_linked(const Weight& mu, const Weight& lambda, const PrimeContext& ctx) {
    const RootSystem& sys = *ctx.sys;
    if (mu == lambda) return true;
    if (!sys.dominance_le(mu, lambda, RootSystem::DominanceMode::Integral)) return false;
    std::set<Weight> visited{lambda};
    std::vector<Weight> stack{lambda};
    while (!stack.empty()) {
        Weight nu = stack.back();
        stack.pop_back();
        for (const auto& beta : sys.positive_roots) {
            long long npair = sys.pairing(nu + sys.rho, beta);
            Weight beta_fw = sys.root_fw(beta);
            for (long long mp = ctx.p; mp < npair; mp += ctx.p) {
                long long c = npair - mp;
                Weight next = nu;
                for (int i = 0; i < sys.rank; ++i) next[i] -= static_cast<int>(c) * beta_fw[i];
                if (next == mu) return true;
                if (!sys.dominance_le(mu, next, RootSystem::DominanceMode::Integral)) continue;
                if (visited.insert(next).second) stack.push_back(next);
            }
        }
    }
    return false;
}

// lambda + rho lies between the walls <., alpha^vee> = 0 and
// <., alpha0^vee> = p.
inline bool in_fundamental_alcove_closure(const Weight& lambda, const PrimeContext& ctx) {
    if (!lambda.is_dominant()) throw std::invalid_argument("alcove test requires a dominant weight");
    return ctx.sys->pairing(lambda + ctx.sys->rho, ctx.sys->alpha0()) <= ctx.p;
}

// Nonzero dominant weight whose module weights form a single W-orbit,
// equivalently <lambda, beta^vee> <= 1 for every positive root beta.
inline bool is_minuscule(const RootSystem& sys, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("is_minuscule requires a dominant weight");
    if (lambda.is_zero()) return false;
    for (const auto& beta : sys.positive_roots)
        if (sys.pairing(lambda, beta) > 1) return false;
    return true;
}

// Jantzen sum formula: sum over beta > 0 and 0 < mp < <lambda+rho, beta^vee>
// of nu_p(mp) chi(s_{beta,mp}.lambda).  The Weyl module is simple exactly when
// this vanishes.
inline SignedChiExpansion jantzen_sum(const Weight& lambda, const PrimeContext& ctx) {
    if (!lambda.is_dominant()) throw std::invalid_argument("jantzen_sum requires a dominant weight");
    const RootSystem& sys = *ctx.sys;
    SignedChiExpansion out{ctx.sys, {}};
    for (const auto& beta : sys.positive_roots) {
        long long npair = sys.pairing(lambda + sys.rho, beta);
        Weight beta_fw = sys.root_fw(beta);
        for (long long mp = ctx.p; mp < npair; mp += ctx.p) {
            long long vp = 0;
            for (long long t = mp; t % ctx.p == 0; t /= ctx.p) ++vp;
            long long c = npair - mp;
            Weight w = lambda;
            for (int i = 0; i < sys.rank; ++i) w[i] -= static_cast<int>(c) * beta_fw[i];
            ChiResult r = chi(sys, w);
            if (!r.zero) out.add(r.dominant, BigInt(r.sign * vp));
        }
    }
    return out;
}

inline bool is_weyl_simple(const Weight& lambda, const PrimeContext& ctx) {
    return jantzen_sum(lambda, ctx).is_zero();
}

} // namespace stscreen
