#pragma once

#include "root_system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace stscreen {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
struct CharacterData {
    std::shared_ptr<const RootSystem> sys;
    std::map<Weight, BigInt> mult; // dominant keys only, values > 0
    mutable std::once_flag full_once;
    mutable std::vector<std::pair<Weight, BigInt>> full; // whole W-orbit expansion
};
} // namespace detail

// W-invariant character with exact multiplicities, stored on dominant weights.
// Cheap to copy (flyweight over shared immutable data).
class Character {
public:
    Character() = default;
    Character(std::shared_ptr<const RootSystem> sys, std::map<Weight, BigInt> mult) {
        auto d = std::make_shared<detail::CharacterData>();
        d->sys = std::move(sys);
        for (auto& [w, m] : mult) {
            if (m == 0) continue;
            if (m < 0) throw std::invalid_argument("character multiplicities must be positive");
            if (!w.is_dominant()) throw std::invalid_argument("character keys must be dominant");
            d->mult.emplace(w, m);
        }
        data_ = std::move(d);
    }

    const std::shared_ptr<const RootSystem>& system() const { return data_->sys; }
    const std::map<Weight, BigInt>& mults() const { return data_->mult; }

    // Multiplicity of an arbitrary weight, resolved through its dominant orbit
    // representative.
    BigInt multiplicity(const Weight& w) const {
        Weight dom = data_->sys->make_dominant(w);
        auto it = data_->mult.find(dom);
        return it == data_->mult.end() ? BigInt(0) : it->second;
    }

    // Orbit-expanded weight function; lazily computed and cached.
    const std::vector<std::pair<Weight, BigInt>>& full_support() const {
        std::call_once(data_->full_once, [&] {
            for (const auto& [w, m] : data_->mult)
                for (const auto& v : data_->sys->orbit(w)) data_->full.emplace_back(v, m);
        });
        return data_->full;
    }

    BigInt dimension() const {
        BigInt d = 0;
        for (const auto& [w, m] : full_support()) {
            (void)w;
            d += m;
        }
        return d;
    }

    friend bool operator==(const Character& a, const Character& b) {
        return a.data_->sys == b.data_->sys && a.data_->mult == b.data_->mult;
    }

private:
    std::shared_ptr<detail::CharacterData> data_;
};

// Integer formal sum of Euler characteristics chi(mu) over dominant mu.
struct SignedChiExpansion {
    std::shared_ptr<const RootSystem> sys;
    std::map<Weight, BigInt> terms; // nonzero values only

    bool is_zero() const { return terms.empty(); }
    void add(const Weight& w, const BigInt& c) {
        if (c == 0) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    friend bool operator==(const SignedChiExpansion& a, const SignedChiExpansion& b) {
        return a.terms == b.terms;
    }
};

// chi(mu): zero when mu + rho is singular, otherwise the sign and dominant
// weight of the dot-action reduction w.(mu) = w(mu + rho) - rho.
struct ChiResult {
    bool zero = false;
    int sign = 1;
    Weight dominant;
};

inline ChiResult chi(const RootSystem& sys, const Weight& mu) {
    int sign = 1;
    Weight x = sys.make_dominant(mu + sys.rho, &sign);
    ChiResult r;
    for (int i = 0; i < sys.rank; ++i) {
        if (x[i] == 0) {
            r.zero = true;
            return r;
        }
    }
    r.sign = sign;
    r.dominant = x - sys.rho;
    return r;
}

namespace detail {

// All dominant mu <= lambda with lambda - mu in the root lattice, i.e. the
// saturated support of ch V(lambda).  Enumerates the root-coordinate box.
inline std::vector<Weight> dominant_weights_below(const RootSystem& sys, const Weight& lambda) {
    auto top = sys.root_coords_scaled(lambda);
    std::vector<long long> bound(top.size());
    for (size_t i = 0; i < top.size(); ++i) {
        if (top[i] < 0) return {};
        bound[i] = top[i] / sys.cartan_det;
    }
    std::vector<Weight> out;
    std::vector<int> c(top.size(), 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == c.size()) {
            Weight mu = lambda;
            for (int i = 0; i < sys.rank; ++i)
                for (int j = 0; j < sys.rank; ++j)
                    mu[i] -= c[static_cast<size_t>(j)] * sys.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (mu.is_dominant()) out.push_back(mu);
            return;
        }
        for (int v = 0; v <= bound[k]; ++v) {
            c[k] = v;
            rec(k + 1);
        }
        c[k] = 0;
    };
    rec(0);
    return out;
}

struct WeylCharKey {
    const RootSystem* sys;
    Weight lambda;
    bool operator==(const WeylCharKey&) const = default;
};
struct WeylCharKeyHash {
    size_t operator()(const WeylCharKey& k) const {
        return std::hash<const void*>()(k.sys) * 31 ^ WeightHash()(k.lambda);
    }
};

} // namespace detail

// ch V(lambda) = ch H^0(lambda) by Freudenthal's recursion, exact integers.
// Hash-consed per (system, lambda); the memo table is the only shared mutable
// state and is mutex guarded.
inline Character weyl_character(const std::shared_ptr<const RootSystem>& sysp, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_character requires a dominant weight");
    static std::mutex mx;
    static std::unordered_map<detail::WeylCharKey, Character, detail::WeylCharKeyHash> cache;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find({sysp.get(), lambda});
        if (it != cache.end()) return it->second;
    }
    const RootSystem& sys = *sysp;
    std::vector<Weight> support = detail::dominant_weights_below(sys, lambda);
    // Height of lambda - mu orders the recursion: higher weights first.
    auto height = [&](const Weight& mu) {
        auto s = sys.root_coords_scaled(lambda - mu);
        long long h = 0;
        for (long long v : s) h += v;
        return h;
    };
    std::sort(support.begin(), support.end(), [&](const Weight& a, const Weight& b) {
        long long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    std::map<Weight, BigInt> mult;
    const Weight rho = sys.rho;
    const long long norm_top = sys.inner_scaled(lambda + rho, lambda + rho);
    const size_t n = static_cast<size_t>(sys.rank);
    // Per-root data: fw coordinates, det-scaled root coordinates, and the
    // weights d_j * m_j so that (nu, beta) = sum_j nu_j d_j m_j exactly.
    struct RootData {
        Weight fw;
        std::vector<long long> rc_scaled;
        std::vector<long long> ip;
    };
    std::vector<RootData> roots;
    roots.reserve(sys.positive_roots.size());
    for (const auto& beta : sys.positive_roots) {
        RootData rd;
        rd.fw = sys.root_fw(beta);
        rd.rc_scaled.resize(n);
        rd.ip.resize(n);
        for (size_t j = 0; j < n; ++j) {
            rd.rc_scaled[j] = sys.cartan_det * beta.root_coords[j];
            rd.ip[j] = static_cast<long long>(sys.symmetrizer[j]) * beta.root_coords[j];
        }
        roots.push_back(std::move(rd));
    }
    for (const auto& mu : support) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        BigInt num = 0;
        auto s0 = sys.root_coords_scaled(lambda - mu);
        for (const auto& rd : roots) {
            Weight nu = mu;
            auto s = s0;
            while (true) {
                nu = nu + rd.fw;
                bool inside = true;
                for (size_t j = 0; j < n; ++j) {
                    s[j] -= rd.rc_scaled[j];
                    if (s[j] < 0) inside = false;
                }
                if (!inside) break; // nu no longer <= lambda, and never again
                Weight dom = sys.make_dominant(nu);
                auto it = mult.find(dom);
                if (it != mult.end()) {
                    long long ip = 0;
                    for (size_t j = 0; j < n; ++j) ip += nu[static_cast<int>(j)] * rd.ip[j];
                    num += it->second * ip;
                }
            }
        }
        num *= 2 * sys.cartan_det;
        long long den = norm_top - sys.inner_scaled(mu + rho, mu + rho);
        if (den <= 0) throw std::logic_error("freudenthal denominator not positive");
        BigInt q = num / den;
        if (q * den != num) throw std::logic_error("freudenthal division not exact");
        // the saturated set is exactly the support, so zero would be a bug
        if (q <= 0) throw std::logic_error("freudenthal produced a non-positive multiplicity");
        mult[mu] = q;
    }
    Character ch(sysp, std::move(mult));
    std::lock_guard<std::mutex> lock(mx);
    cache.emplace(detail::WeylCharKey{sysp.get(), lambda}, ch);
    return ch;
}

// dim V(lambda) by the Weyl product formula over positive coroots.
inline BigInt weyl_dim(const RootSystem& sys, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim requires a dominant weight");
    BigInt num = 1, den = 1;
    for (const auto& beta : sys.positive_roots) {
        num *= sys.pairing(lambda + sys.rho, beta);
        den *= sys.pairing(sys.rho, beta);
    }
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("weyl dimension not integral");
    return q;
}

inline BigInt weyl_dim(const std::shared_ptr<const RootSystem>& sys, const Weight& lambda) {
    return weyl_dim(*sys, lambda);
}

// Pointwise convolution of the orbit-expanded weight functions, re-collected
// on dominant weights.
inline Character tensor_character(const Character& a, const Character& b) {
    if (a.system() != b.system()) throw std::invalid_argument("tensor of characters over different systems");
    std::map<Weight, BigInt> acc;
    for (const auto& [va, ma] : a.full_support()) {
        for (const auto& [vb, mb] : b.full_support()) {
            Weight w = va + vb;
            if (w.is_dominant()) acc[w] += ma * mb;
        }
    }
    return Character(a.system(), std::move(acc));
}

// Expands a W-invariant character in the chi basis by repeatedly peeling the
// lexicographically largest maximal weight of the remaining support.
inline SignedChiExpansion decompose_into_chi(const Character& c) {
    const auto sysp = c.system();
    const RootSystem& sys = *sysp;
    std::map<Weight, BigInt> work(c.mults().begin(), c.mults().end());
    SignedChiExpansion out{sysp, {}};
    while (!work.empty()) {
        std::vector<const Weight*> keys;
        keys.reserve(work.size());
        for (const auto& [w, m] : work) {
            (void)m;
            keys.push_back(&w);
        }
        const Weight* pick = nullptr;
        for (const Weight* cand : keys) {
            bool maximal = true;
            for (const Weight* other : keys) {
                if (other == cand) continue;
                if (sys.dominance_le(*cand, *other, RootSystem::DominanceMode::Integral)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal && (!pick || *pick < *cand)) pick = cand;
        }
        Weight mu = *pick;
        BigInt coeff = work[mu];
        out.add(mu, coeff);
        Character wc = weyl_character(sysp, mu);
        for (const auto& [w, m] : wc.mults()) {
            auto it = work.find(w);
            BigInt nv = (it == work.end() ? BigInt(0) : it->second) - coeff * m;
            if (nv == 0) {
                if (it != work.end()) work.erase(it);
            } else if (it == work.end()) {
                work.emplace(w, nv);
            } else {
                it->second = nv;
            }
        }
    }
    return out;
}

} // namespace stscreen
