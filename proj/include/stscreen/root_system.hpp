#pragma once

#include "weight.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stscreen {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Series parse_series(char c) {
    switch (c) {
        case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
            return static_cast<Series>(c);
        default:
            throw std::invalid_argument(std::string("unknown series '") + c + "'");
    }
}

inline char series_char(Series s) { return static_cast<char>(s); }

// One positive root with every coordinate system we need precomputed.
// root_coords:   beta = sum m_j alpha_j                (integers)
// coroot_coords: beta^vee = sum c_j alpha_j^vee        (integers)
// fw_coords:     <beta, alpha_i^vee> per i             (integers)
// half_norm:     (beta,beta)/2, equal to 1 for short roots.
struct PositiveRoot {
    std::vector<int> root_coords;
    std::vector<int> coroot_coords;
    std::vector<int> fw_coords;
    int half_norm = 1;
    int height = 0;
};

// Irreducible root system with Bourbaki node numbering and the inner product
// normalized so short roots have squared length 2.  Immutable after
// construction; all queries are const and safe to share across threads.
class RootSystem {
public:
    Series series;
    int rank;
    std::vector<std::vector<int>> cartan;     // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> symmetrizer;             // d_i = (alpha_i,alpha_i)/2
    long long cartan_det = 0;
    std::vector<std::vector<long long>> cartan_adj; // adjugate, cartan^-1 = adj/det
    std::vector<PositiveRoot> positive_roots;       // sorted by (height, root_coords)
    Weight rho;
    int alpha0_index = -1;       // highest short root
    int alpha_tilde_index = -1;  // highest root
    int coxeter_number = 0;
    std::vector<int> dual_permutation; // -w0(varpi_i) = varpi_{dual_permutation[i]}
    std::vector<Weight> fundamental_group_reps; // coset representatives of X / (root lattice)

    RootSystem(Series s, int n) : series(s), rank(n) {
        build_cartan();
        compute_adjugate();
        generate_positive_roots();
        locate_highest_roots();
        rho = Weight(std::vector<int>(static_cast<size_t>(rank), 1));
        coxeter_number = static_cast<int>(pairing(rho, positive_roots[static_cast<size_t>(alpha0_index)])) + 1;
        compute_dual_permutation();
        compute_fundamental_group_reps();
        self_check();
    }

    const PositiveRoot& alpha0() const { return positive_roots[static_cast<size_t>(alpha0_index)]; }
    const PositiveRoot& alpha_tilde() const { return positive_roots[static_cast<size_t>(alpha_tilde_index)]; }

    // <lambda, beta^vee>, an integer dot product against the precomputed coroot.
    long long pairing(const Weight& lambda, const PositiveRoot& beta) const {
        long long s = 0;
        for (int i = 0; i < rank; ++i)
            s += static_cast<long long>(lambda[i]) * beta.coroot_coords[static_cast<size_t>(i)];
        return s;
    }

    // <lambda, beta^vee> for beta given in the simple-root basis.  beta must be
    // a root of the system (either sign).
    long long pairing(const Weight& lambda, const RootVector& beta) const {
        if (beta.rank() != rank) throw std::invalid_argument("rank mismatch");
        for (const auto& r : positive_roots) {
            bool plus = true, minus = true;
            for (int i = 0; i < rank; ++i) {
                Rat m(r.root_coords[static_cast<size_t>(i)]);
                if (beta.coeffs[static_cast<size_t>(i)] != m) plus = false;
                if (beta.coeffs[static_cast<size_t>(i)] != -m) minus = false;
            }
            if (plus) return pairing(lambda, r);
            if (minus) return -pairing(lambda, r);
        }
        throw std::invalid_argument("vector is not a root of the system");
    }

    // Simple-root coordinates of lambda scaled by det(cartan), always integral.
    std::vector<long long> root_coords_scaled(const Weight& lambda) const {
        std::vector<long long> out(static_cast<size_t>(rank), 0);
        for (int i = 0; i < rank; ++i) {
            long long s = 0;
            for (int j = 0; j < rank; ++j)
                s += cartan_adj[static_cast<size_t>(i)][static_cast<size_t>(j)] * lambda[j];
            out[static_cast<size_t>(i)] = s;
        }
        return out;
    }

    RootVector root_vector(const Weight& lambda) const {
        auto s = root_coords_scaled(lambda);
        std::vector<Rat> q(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) q[static_cast<size_t>(i)] = Rat(s[static_cast<size_t>(i)], cartan_det);
        return RootVector(std::move(q));
    }

    // Inverse of root_vector; requires integral fundamental-weight coordinates.
    Weight weight_of(const RootVector& v) const {
        if (v.rank() != rank) throw std::invalid_argument("rank mismatch");
        std::vector<int> fw(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) {
            Rat s(0);
            for (int j = 0; j < rank; ++j)
                s += Rat(cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * v.coeffs[static_cast<size_t>(j)];
            if (s.denominator() != 1)
                throw std::invalid_argument("root vector is not in the weight lattice");
            fw[static_cast<size_t>(i)] = static_cast<int>(s.numerator());
        }
        return Weight(std::move(fw));
    }

    enum class DominanceMode { Integral, Rational };

    // mu <= lambda: lambda - mu is a nonnegative (integral or rational)
    // combination of simple roots.
    bool dominance_le(const Weight& mu, const Weight& lambda, DominanceMode mode) const {
        auto s = root_coords_scaled(lambda - mu);
        for (long long v : s) {
            if (v < 0) return false;
            if (mode == DominanceMode::Integral && v % cartan_det != 0) return false;
        }
        return true;
    }

    // Fundamental-weight coordinates of the simple root alpha_i (column i of cartan).
    Weight simple_root_fw(int i) const {
        std::vector<int> c(static_cast<size_t>(rank));
        for (int k = 0; k < rank; ++k) c[static_cast<size_t>(k)] = cartan[static_cast<size_t>(k)][static_cast<size_t>(i)];
        return Weight(std::move(c));
    }

    Weight root_fw(const PositiveRoot& beta) const {
        return Weight(beta.fw_coords);
    }

    Weight simple_reflect(const Weight& w, int i) const {
        int c = w[i];
        if (c == 0) return w;
        Weight r = w;
        for (int k = 0; k < rank; ++k)
            r[k] -= c * cartan[static_cast<size_t>(k)][static_cast<size_t>(i)];
        return r;
    }

    // Dominant representative of the W-orbit (ordinary action).  If sign is
    // given it receives det(w) = (-1)^(number of reflections applied).
    Weight make_dominant(Weight w, int* sign = nullptr) const {
        int s = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < rank; ++i) {
                if (w[i] < 0) {
                    w = simple_reflect(w, i);
                    s = -s;
                    changed = true;
                }
            }
        }
        if (sign) *sign = s;
        return w;
    }

    // lambda^* = -w0(lambda); involution permuting the fundamental weights.
    Weight dual_weight(const Weight& lambda) const {
        if (!lambda.is_dominant()) throw std::invalid_argument("dual_weight requires a dominant weight");
        std::vector<int> c(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) c[static_cast<size_t>(dual_permutation[static_cast<size_t>(i)])] = lambda[i];
        return Weight(std::move(c));
    }

    // Full W-orbit of a weight.  Never used for E7/E8-sized orbits inside the
    // library proper; character code restricts itself to ranks where this is small.
    std::vector<Weight> orbit(const Weight& w) const {
        std::set<Weight> seen;
        std::vector<Weight> queue{make_dominant(w)};
        seen.insert(queue[0]);
        for (size_t q = 0; q < queue.size(); ++q) {
            Weight cur = queue[q];
            for (int i = 0; i < rank; ++i) {
                Weight nx = simple_reflect(cur, i);
                if (seen.insert(nx).second) queue.push_back(nx);
            }
        }
        return queue;
    }

    // det * (x, y) under the normalization (alpha,alpha) = 2 for short roots;
    // integral for weight-lattice arguments.
    long long inner_scaled(const Weight& x, const Weight& y) const {
        auto ry = root_coords_scaled(y);
        long long s = 0;
        for (int i = 0; i < rank; ++i)
            s += static_cast<long long>(x[i]) * symmetrizer[static_cast<size_t>(i)] * ry[static_cast<size_t>(i)];
        return s;
    }

private:
    void build_cartan() {
        auto bad = [&] { throw std::invalid_argument("invalid (series, rank) pair"); };
        int n = rank;
        if (n < 1 || n > 8) bad();
        auto chain = [&](int len) {
            std::vector<std::vector<int>> a(static_cast<size_t>(len), std::vector<int>(static_cast<size_t>(len), 0));
            for (int i = 0; i < len; ++i) {
                a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
                if (i + 1 < len) {
                    a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
                    a[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
                }
            }
            return a;
        };
        symmetrizer.assign(static_cast<size_t>(n), 1);
        switch (series) {
            case Series::A:
                cartan = chain(n);
                break;
            case Series::B:
                if (n < 2) bad();
                cartan = chain(n);
                cartan[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = -2;
                for (int i = 0; i < n - 1; ++i) symmetrizer[static_cast<size_t>(i)] = 2;
                break;
            case Series::C:
                if (n < 2) bad();
                cartan = chain(n);
                cartan[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = -2;
                symmetrizer[static_cast<size_t>(n - 1)] = 2;
                break;
            case Series::D:
                if (n < 4) bad();
                cartan = chain(n - 1);
                for (auto& row : cartan) row.push_back(0);
                cartan.push_back(std::vector<int>(static_cast<size_t>(n), 0));
                cartan[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = 2;
                cartan[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = 0;
                cartan[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = 0;
                cartan[static_cast<size_t>(n - 3)][static_cast<size_t>(n - 1)] = -1;
                cartan[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 3)] = -1;
                break;
            case Series::E: {
                if (n < 6 || n > 8) bad();
                // Bourbaki: chain 1-3-4-5-...-n, extra node 2 attached to node 4.
                cartan.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
                for (int i = 0; i < n; ++i) cartan[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
                auto link = [&](int i, int j) {
                    cartan[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = -1;
                    cartan[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = -1;
                };
                link(1, 3);
                link(3, 4);
                link(2, 4);
                for (int k = 4; k < n; ++k) link(k, k + 1);
                break;
            }
            case Series::F:
                if (n != 4) bad();
                cartan = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
                symmetrizer = {2, 2, 1, 1};
                break;
            case Series::G:
                if (n != 2) bad();
                cartan = {{2, -3}, {-1, 2}};
                symmetrizer = {1, 3};
                break;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (symmetrizer[static_cast<size_t>(i)] * cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                    symmetrizer[static_cast<size_t>(j)] * cartan[static_cast<size_t>(j)][static_cast<size_t>(i)])
                    throw std::logic_error("symmetrizer mismatch");
    }

    long long det_of(const std::vector<std::vector<long long>>& m) const {
        size_t n = m.size();
        if (n == 1) return m[0][0];
        long long d = 0;
        for (size_t j = 0; j < n; ++j) {
            if (m[0][j] == 0) continue;
            std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
            for (size_t r = 1; r < n; ++r) {
                size_t cc = 0;
                for (size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[r - 1][cc++] = m[r][c];
                }
            }
            d += (j % 2 ? -1 : 1) * m[0][j] * det_of(minor);
        }
        return d;
    }

    void compute_adjugate() {
        size_t n = static_cast<size_t>(rank);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m[i][j] = cartan[i][j];
        cartan_det = det_of(m);
        if (cartan_det <= 0) throw std::logic_error("cartan determinant must be positive");
        cartan_adj.assign(n, std::vector<long long>(n));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (n == 1) {
                    cartan_adj[0][0] = 1;
                    continue;
                }
                std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
                size_t rr = 0;
                for (size_t r = 0; r < n; ++r) {
                    if (r == j) continue;
                    size_t cc = 0;
                    for (size_t c = 0; c < n; ++c) {
                        if (c == i) continue;
                        minor[rr][cc++] = m[r][c];
                    }
                    ++rr;
                }
                long long cof = det_of(minor);
                cartan_adj[i][j] = (((i + j) % 2) ? -cof : cof);
            }
        }
        // adj * cartan = det * I
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                long long s = 0;
                for (size_t k = 0; k < n; ++k) s += cartan_adj[i][k] * m[k][j];
                if (s != (i == j ? cartan_det : 0)) throw std::logic_error("adjugate check failed");
            }
    }

    void generate_positive_roots() {
        // Closure of the simple roots under simple reflections, keeping the
        // positive ones.  Roots tracked by simple-root coordinates.
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> queue;
        for (int i = 0; i < rank; ++i) {
            std::vector<int> e(static_cast<size_t>(rank), 0);
            e[static_cast<size_t>(i)] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        for (size_t q = 0; q < queue.size(); ++q) {
            std::vector<int> cur = queue[q];
            // <beta, alpha_i^vee> = sum_j cartan[i][j] * m_j
            for (int i = 0; i < rank; ++i) {
                long long p = 0;
                for (int j = 0; j < rank; ++j) p += static_cast<long long>(cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * cur[static_cast<size_t>(j)];
                std::vector<int> nx = cur;
                nx[static_cast<size_t>(i)] -= static_cast<int>(p);
                bool positive = std::all_of(nx.begin(), nx.end(), [](int v) { return v >= 0; });
                if (positive && seen.insert(nx).second) queue.push_back(nx);
            }
        }
        for (auto& rc : seen) {
            PositiveRoot pr;
            pr.root_coords = rc;
            pr.height = std::accumulate(rc.begin(), rc.end(), 0);
            // (beta,beta)/2 via (alpha_i,alpha_j) = d_i * cartan[i][j]
            long long nn = 0;
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    nn += static_cast<long long>(rc[static_cast<size_t>(i)]) * rc[static_cast<size_t>(j)] *
                          symmetrizer[static_cast<size_t>(i)] * cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (nn % 2 != 0) throw std::logic_error("odd root norm");
            pr.half_norm = static_cast<int>(nn / 2);
            pr.coroot_coords.resize(static_cast<size_t>(rank));
            for (int j = 0; j < rank; ++j) {
                long long c = static_cast<long long>(rc[static_cast<size_t>(j)]) * symmetrizer[static_cast<size_t>(j)];
                if (c % pr.half_norm != 0) throw std::logic_error("coroot coordinates not integral");
                pr.coroot_coords[static_cast<size_t>(j)] = static_cast<int>(c / pr.half_norm);
            }
            pr.fw_coords.resize(static_cast<size_t>(rank));
            for (int i = 0; i < rank; ++i) {
                long long s = 0;
                for (int j = 0; j < rank; ++j) s += static_cast<long long>(cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * rc[static_cast<size_t>(j)];
                pr.fw_coords[static_cast<size_t>(i)] = static_cast<int>(s);
            }
            positive_roots.push_back(std::move(pr));
        }
        std::sort(positive_roots.begin(), positive_roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
            if (a.height != b.height) return a.height < b.height;
            return a.root_coords < b.root_coords;
        });
    }

    void locate_highest_roots() {
        int minimal_half_norm = 1 << 20;
        for (const auto& r : positive_roots) minimal_half_norm = std::min(minimal_half_norm, r.half_norm);
        for (size_t k = 0; k < positive_roots.size(); ++k) {
            const auto& r = positive_roots[k];
            bool dominant = std::all_of(r.fw_coords.begin(), r.fw_coords.end(), [](int v) { return v >= 0; });
            if (!dominant) continue;
            if (alpha_tilde_index < 0 || r.height > positive_roots[static_cast<size_t>(alpha_tilde_index)].height)
                alpha_tilde_index = static_cast<int>(k);
            if (r.half_norm == minimal_half_norm &&
                (alpha0_index < 0 || r.height > positive_roots[static_cast<size_t>(alpha0_index)].height))
                alpha0_index = static_cast<int>(k);
        }
        if (alpha0_index < 0 || alpha_tilde_index < 0) throw std::logic_error("no dominant root found");
    }

    void compute_fundamental_group_reps() {
        // X / (root lattice) has order det(cartan); label classes by the
        // scaled root coordinates mod det and walk the fundamental weights.
        auto label = [&](const Weight& w) {
            auto s = root_coords_scaled(w);
            for (auto& v : s) v = ((v % cartan_det) + cartan_det) % cartan_det;
            return s;
        };
        std::map<std::vector<long long>, Weight> classes;
        std::vector<Weight> queue{Weight(std::vector<int>(static_cast<size_t>(rank), 0))};
        classes.emplace(label(queue[0]), queue[0]);
        for (size_t q = 0; q < queue.size() && static_cast<long long>(classes.size()) < cartan_det; ++q) {
            for (int i = 0; i < rank; ++i) {
                Weight nx = queue[q];
                nx[i] += 1;
                if (classes.emplace(label(nx), nx).second) queue.push_back(nx);
            }
        }
        if (static_cast<long long>(classes.size()) != cartan_det)
            throw std::logic_error("failed to enumerate the fundamental group");
        for (auto& [lab, w] : classes) {
            (void)lab;
            fundamental_group_reps.push_back(w);
        }
    }

    void compute_dual_permutation() {
        dual_permutation.resize(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) {
            std::vector<int> c(static_cast<size_t>(rank), 0);
            c[static_cast<size_t>(i)] = -1;
            Weight img = make_dominant(Weight(std::move(c)));
            int j = -1;
            for (int k = 0; k < rank; ++k) {
                if (img[k] == 1 && j < 0)
                    j = k;
                else if (img[k] != 0)
                    throw std::logic_error("-w0 does not permute fundamental weights");
            }
            if (j < 0) throw std::logic_error("-w0 image broken");
            dual_permutation[static_cast<size_t>(i)] = j;
        }
        for (int i = 0; i < rank; ++i)
            if (dual_permutation[static_cast<size_t>(dual_permutation[static_cast<size_t>(i)])] != i)
                throw std::logic_error("-w0 permutation not an involution");
    }

    void self_check() const {
        size_t expected = 0;
        size_t n = static_cast<size_t>(rank);
        switch (series) {
            case Series::A: expected = n * (n + 1) / 2; break;
            case Series::B:
            case Series::C: expected = n * n; break;
            case Series::D: expected = n * (n - 1); break;
            case Series::E: expected = (n == 6 ? 36 : n == 7 ? 63 : 120); break;
            case Series::F: expected = 24; break;
            case Series::G: expected = 6; break;
        }
        if (positive_roots.size() != expected) throw std::logic_error("positive root count mismatch");
        for (const auto& row : cartan) {
            for (int v : row)
                if (v > 2) throw std::logic_error("cartan entry out of range");
        }
        bool simply_laced = series == Series::A || series == Series::D || series == Series::E;
        if (simply_laced && alpha0_index != alpha_tilde_index)
            throw std::logic_error("simply laced system must have alpha0 == alpha_tilde");
        // Pin the orientation of the non-simply-laced tables against classical data.
        auto expect_coroot = [&](const PositiveRoot& r, std::vector<int> want) {
            if (r.coroot_coords != want) throw std::logic_error("classical coroot expansion mismatch");
        };
        if (series == Series::G) expect_coroot(alpha0(), {2, 3});
        if (series == Series::B && rank == 3) {
            expect_coroot(alpha0(), {2, 2, 1});
            expect_coroot(alpha_tilde(), {1, 2, 1});
        }
        if (series == Series::C && rank == 3) {
            expect_coroot(alpha0(), {1, 2, 2});
            expect_coroot(alpha_tilde(), {1, 1, 1});
        }
        if (series == Series::F) {
            expect_coroot(alpha0(), {2, 4, 3, 2});
            expect_coroot(alpha_tilde(), {2, 3, 2, 1});
        }
    }
};

// Shared, memoized construction.  Pointer identity doubles as a cache key for
// the character tables.
inline std::shared_ptr<const RootSystem> root_system(Series s, int rank) {
    static std::mutex mx;
    static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(series_char(s), rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sys = std::make_shared<const RootSystem>(s, rank);
    cache.emplace(key, sys);
    return sys;
}

inline std::shared_ptr<const RootSystem> root_system(char s, int rank) {
    return root_system(parse_series(s), rank);
}

} // namespace stscreen
