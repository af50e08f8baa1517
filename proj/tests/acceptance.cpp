// Acceptance suite: runs every published-table reproduction and property
// check at its stated tolerance (all integer-exact) and prints one line per
// criterion.  Exits with the number of failed criteria.
//
// Known deviations from the source tables are printed inline and are asserted
// against independently verified values:
//   - C3 p=7, lambda=(6,5,5): the printed mu_(1)=(0,0,0) is a misprint for
//     (2,0,0); two independent linkage routes agree.
//   - F4 p=2: the printed (0,0,0,2) is not a 2-restricted weight (misprint
//     for (1,0,0,0)), and the printed list omits five further pairs that pass
//     every stated filter; the screen output is pinned to the verified table.
//   - B3 p=2: the character-level surrogate does not eliminate the single
//     surviving triple (the relevant chi coefficient is 1, not 0), so the
//     empty-screen expectation fails; see the notes in the report.

#include "oracles.hpp"

#include <stscreen/report.hpp>

#include <chrono>
#include <random>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace stscreen;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, double seconds, const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(58) << name << std::right << std::setw(8)
              << std::fixed << std::setprecision(2) << seconds << "s";
    if (!note.empty()) std::cout << "  [" << note << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& body, double budget_seconds = 0) {
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_seconds > 0 && dt > budget_seconds) {
        ok = false;
        note += " exceeded the " + std::to_string(budget_seconds) + "s budget";
    }
    report(name, ok, dt, note);
}

using PairSet = std::set<std::pair<Weight, Weight>>;

PairSet pairs_for_gamma(const ScreeningReport& r, const Weight& gamma) {
    PairSet out;
    for (const auto& [lam, triples] : r.unresolved)
        for (const auto& t : triples)
            if (t.gamma == gamma) out.insert({t.lambda, t.mu1});
    return out;
}

PairSet all_pairs(const ScreeningReport& r) {
    PairSet out;
    for (const auto& [lam, triples] : r.unresolved)
        for (const auto& t : triples) out.insert({t.lambda, t.mu1});
    return out;
}

std::set<Weight> gammas_of(const ScreeningReport& r) {
    std::set<Weight> out;
    for (const auto& [lam, triples] : r.unresolved)
        for (const auto& t : triples) out.insert(t.gamma);
    return out;
}

// weight-inequality pairs for one gamma over all of X_1 (Steinberg excluded)
PairSet weight_pairs_for_gamma(const PrimeContext& ctx, const Weight& gamma) {
    PairSet out;
    for (const auto& lam : restricted_weights(ctx)) {
        if (lam == ctx.steinberg_weight()) continue;
        long long a0 = ctx.sys->pairing(gamma, ctx.sys->alpha0()) * ctx.p;
        long long at = ctx.sys->pairing(gamma, ctx.sys->alpha_tilde()) * ctx.p;
        if (a0 > ctx.sys->pairing(lam, ctx.sys->alpha0()) || at > ctx.sys->pairing(lam, ctx.sys->alpha_tilde()))
            continue;
        for (const auto& mu1 : weight_witnesses(lam, gamma, ctx)) out.insert({lam, mu1});
    }
    return out;
}

bool expect_eq_pairs(const PairSet& got, const PairSet& want, std::string& note, const char* what) {
    if (got == want) return true;
    note = std::string(what) + ": expected " + std::to_string(want.size()) + " pairs, got " + std::to_string(got.size());
    for (const auto& p : got)
        if (!want.count(p)) note += " +" + p.first.str() + "|" + p.second.str();
    for (const auto& p : want)
        if (!got.count(p)) note += " -" + p.first.str() + "|" + p.second.str();
    return false;
}

} // namespace

static void criterion1_golden_tables() {
    criterion("C1 B3 p=7: 11 pairs for w1+w3, none for 2w1", [](std::string& note) {
        PrimeContext ctx(root_system('B', 3), 7);
        ScreeningReport r = screen(ctx);
        PairSet want{{{6, 5, 5}, {3, 0, 0}}, {{6, 4, 5}, {1, 1, 0}}, {{6, 5, 4}, {2, 0, 1}}, {{5, 5, 5}, {0, 0, 0}},
                     {{5, 5, 4}, {0, 0, 1}}, {{5, 5, 4}, {1, 0, 1}}, {{5, 5, 5}, {2, 0, 0}}, {{5, 4, 5}, {0, 1, 0}},
                     {{4, 5, 5}, {1, 0, 0}}, {{4, 5, 4}, {0, 0, 1}}, {{3, 5, 5}, {0, 0, 0}}};
        bool ok = expect_eq_pairs(pairs_for_gamma(r, Weight{1, 0, 1}), want, note, "w1+w3");
        ok = ok && gammas_of(r) == std::set<Weight>{{1, 0, 1}};
        // 2w1 passes the weight inequality exactly on the three quoted
        // differences 6rho-w1, 6rho-w2, 6rho-2w3, and always fails linkage
        Weight g2{2, 0, 0};
        if (is_weyl_simple(g2, ctx)) {
            note += " 2w1 unexpectedly simple";
            return false;
        }
        PairSet wp = weight_pairs_for_gamma(ctx, g2);
        std::set<Weight> diffs;
        for (const auto& [lam, mu1] : wp) {
            diffs.insert(lam - mu1);
            if (!witnesses(lam, g2, ctx).empty()) {
                note += " 2w1 witness survived linkage";
                ok = false;
            }
        }
        std::set<Weight> expect_diffs{Weight{5, 6, 6}, Weight{6, 5, 6}, Weight{6, 6, 4}};
        if (diffs != expect_diffs) {
            note += " 2w1 differences differ";
            ok = false;
        }
        return ok;
    });

    criterion("C1 C3 p=3: 4 pairs for w2 and the (2,7,2) maximality", [](std::string& note) {
        PrimeContext ctx(root_system('C', 3), 3);
        ScreeningReport r = screen(ctx);
        PairSet want{{{2, 1, 2}, {0, 0, 0}}, {{2, 1, 2}, {0, 1, 0}}, {{2, 2, 1}, {1, 0, 0}}, {{2, 0, 2}, {0, 0, 0}}};
        bool ok = expect_eq_pairs(all_pairs(r), want, note, "pairs");
        ok = ok && gammas_of(r) == std::set<Weight>{{0, 1, 0}};
        Character st = weyl_character(ctx.sys, Weight{2, 2, 2});
        Character square = tensor_character(st, st);
        if (st.multiplicity(Weight{0, 5, 0}) != 1) {
            note += " St multiplicity of 5w2 is not 1";
            ok = false;
        }
        MaximalityReport mr = maximality_report(square, Weight{2, 7, 2}, ctx);
        std::vector<Weight> above{{2, 5, 4}, {4, 4, 4}, {4, 6, 2}};
        if (mr.weights_above != above) {
            note += " weights above (2,7,2) differ";
            ok = false;
        }
        if (!mr.certified_maximal()) {
            note += " strong-linkage flags nonzero";
            ok = false;
        }
        return ok;
    }, 60.0);

    criterion("C1 C3 p=7: 2w2 all linkage-fail; 5 pairs for w1+w2", [](std::string& note) {
        PrimeContext ctx(root_system('C', 3), 7);
        ScreeningReport r = screen(ctx);
        Weight g2{0, 2, 0};
        bool ok = !is_weyl_simple(g2, ctx);
        PairSet wp = weight_pairs_for_gamma(ctx, g2);
        PairSet expect_wp{{{6, 5, 6}, {0, 0, 0}}, {{4, 6, 6}, {0, 0, 0}}, {{5, 6, 6}, {1, 0, 0}}};
        ok = ok && expect_eq_pairs(wp, expect_wp, note, "2w2 weight pairs");
        for (const auto& [lam, mu1] : wp)
            if (!witnesses(lam, g2, ctx).empty()) {
                note += " 2w2 witness survived linkage";
                ok = false;
            }
        // table pairs; (6,5,5)|(0,0,0) in print is (2,0,0) by the verified
        // linkage computation (see ledger note)
        PairSet want{{{6, 5, 5}, {2, 0, 0}}, {{6, 4, 5}, {0, 1, 0}}, {{6, 5, 4}, {0, 0, 1}}, {{5, 5, 5}, {1, 0, 0}},
                     {{4, 5, 5}, {0, 0, 0}}};
        ok = ok && expect_eq_pairs(pairs_for_gamma(r, Weight{1, 1, 0}), want, note, "w1+w2");
        ok = ok && gammas_of(r) == std::set<Weight>{{1, 1, 0}};
        if (ok) note = "published table prints (6,5,5)|(0,0,0); verified value is (2,0,0)";
        return ok;
    }, 60.0);

    criterion("C1 A4 p=5: the 21 pairs, all with gamma = w1+w4", [](std::string& note) {
        PrimeContext ctx(root_system('A', 4), 5);
        ScreeningReport r = screen(ctx);
        PairSet want{
            {{4, 3, 3, 4}, {2, 0, 0, 2}}, {{4, 3, 2, 4}, {1, 1, 0, 1}}, {{4, 2, 3, 4}, {1, 0, 1, 1}},
            {{3, 3, 2, 4}, {0, 1, 0, 1}}, {{3, 2, 3, 4}, {0, 0, 1, 1}}, {{4, 3, 2, 3}, {1, 1, 0, 0}},
            {{4, 2, 3, 3}, {1, 0, 1, 0}}, {{4, 3, 3, 3}, {2, 0, 0, 1}}, {{3, 3, 3, 4}, {1, 0, 0, 2}},
            {{2, 3, 3, 4}, {0, 0, 0, 2}}, {{4, 3, 3, 2}, {2, 0, 0, 0}}, {{4, 3, 1, 4}, {0, 2, 0, 0}},
            {{4, 1, 3, 4}, {0, 0, 2, 0}}, {{4, 2, 2, 4}, {0, 1, 1, 0}}, {{3, 3, 3, 3}, {1, 0, 0, 1}},
            {{3, 3, 3, 3}, {0, 0, 0, 0}}, {{2, 3, 3, 3}, {0, 0, 0, 1}}, {{3, 2, 3, 3}, {0, 0, 1, 0}},
            {{3, 3, 2, 3}, {0, 1, 0, 0}}, {{3, 3, 3, 2}, {1, 0, 0, 0}}, {{2, 3, 3, 2}, {0, 0, 0, 0}}};
        bool ok = expect_eq_pairs(all_pairs(r), want, note, "pairs");
        return ok && gammas_of(r) == std::set<Weight>{{1, 0, 0, 1}};
    }, 60.0);

    criterion("C1 D4 p=7: 2w2 all linkage-fail; w1+w2 contains the 4 pairs", [](std::string& note) {
        PrimeContext ctx(root_system('D', 4), 7);
        ScreeningReport r = screen(ctx);
        Weight g2{0, 2, 0, 0};
        bool ok = !is_weyl_simple(g2, ctx);
        PairSet wp = weight_pairs_for_gamma(ctx, g2);
        PairSet expect_wp{{{6, 5, 6, 6}, {0, 0, 0, 0}}, {{4, 6, 6, 6}, {0, 0, 0, 0}}, {{6, 6, 4, 6}, {0, 0, 0, 0}},
                          {{6, 6, 6, 4}, {0, 0, 0, 0}}, {{5, 6, 6, 6}, {1, 0, 0, 0}}, {{6, 6, 5, 6}, {0, 0, 1, 0}},
                          {{6, 6, 6, 5}, {0, 0, 0, 1}}};
        ok = ok && expect_eq_pairs(wp, expect_wp, note, "2w2 weight pairs (7 candidates)");
        for (const auto& [lam, mu1] : wp)
            if (!witnesses(lam, g2, ctx).empty()) {
                note += " 2w2 witness survived linkage";
                ok = false;
            }
        if (!pairs_for_gamma(r, g2).empty()) {
            note += " 2w2 has survivors";
            ok = false;
        }
        PairSet listed{{{6, 4, 5, 5}, {0, 1, 0, 0}}, {{4, 5, 5, 5}, {0, 0, 0, 0}}, {{5, 5, 5, 5}, {1, 0, 0, 0}},
                       {{6, 5, 5, 5}, {2, 0, 0, 0}}};
        PairSet got = pairs_for_gamma(r, Weight{1, 1, 0, 0});
        for (const auto& p : listed)
            if (!got.count(p)) {
                note += " missing " + p.first.str() + "|" + p.second.str();
                ok = false;
            }
        // superset check only: the source notes the list is not complete
        return ok;
    }, 60.0);

    criterion("C1 F4 p=2: verified table (superset of the printed one)", [](std::string& note) {
        PrimeContext ctx(root_system('F', 4), 2);
        ScreeningReport r = screen(ctx);
        // printed rows, with (0,0,0,2) corrected to the verified (1,0,0,0)
        PairSet printed{{{1, 1, 0, 1}, {0, 0, 0, 0}}, {{1, 1, 0, 1}, {0, 0, 1, 0}}, {{1, 1, 0, 1}, {0, 0, 0, 1}},
                        {{1, 1, 0, 1}, {1, 0, 0, 0}}, {{1, 1, 1, 0}, {0, 0, 0, 0}}, {{1, 1, 1, 0}, {1, 0, 0, 0}},
                        {{1, 1, 1, 0}, {0, 0, 1, 0}}, {{1, 1, 1, 0}, {0, 0, 0, 1}}, {{1, 1, 1, 0}, {1, 0, 0, 1}},
                        {{0, 1, 1, 0}, {0, 0, 0, 1}}, {{1, 1, 0, 0}, {0, 0, 0, 1}}};
        // five further pairs pass every stated filter; pinned after verification
        PairSet extras{{{0, 1, 0, 1}, {0, 0, 0, 0}}, {{0, 1, 1, 0}, {0, 0, 0, 0}}, {{1, 0, 1, 0}, {0, 0, 0, 0}},
                       {{1, 1, 0, 0}, {0, 0, 0, 0}}, {{1, 1, 1, 0}, {0, 1, 0, 0}}};
        PairSet want = printed;
        want.insert(extras.begin(), extras.end());
        bool ok = expect_eq_pairs(all_pairs(r), want, note, "pairs");
        std::set<Weight> g = gammas_of(r);
        if (!g.count(Weight{0, 0, 0, 2}) || !g.count(Weight{1, 0, 0, 1})) {
            note += " 2w4 or w1+w4 missing from the gamma set";
            ok = false;
        }
        if (g.count(Weight{0, 0, 0, 1})) {
            note += " w4 not eliminated by simplicity";
            ok = false;
        }
        if (g.count(Weight{0, 0, 1, 1})) {
            note += " w3+w4 not eliminated";
            ok = false;
        }
        if (ok)
            note = "printed (0,0,0,2) is not 2-restricted (verified (1,0,0,0)); 5 verified extra pairs beyond the "
                   "printed list";
        return ok;
    }, 60.0);

    criterion("C1 A5 p=2: the single surviving triple", [](std::string& note) {
        PrimeContext ctx(root_system('A', 5), 2);
        ScreeningReport r = screen(ctx);
        if (r.unresolved.size() != 1 || r.unresolved[0].second.size() != 1) {
            note = "expected exactly one triple";
            return false;
        }
        const CandidateTriple& t = r.unresolved[0].second[0];
        return t.lambda == Weight{1, 1, 0, 1, 1} && t.gamma == Weight{1, 0, 0, 0, 1} &&
               t.mu1 == Weight{0, 0, 0, 0, 0};
    }, 60.0);

    // Empty screens.  B3 p=2 is expected to fail: the single triple
    // ((1,1,0), w1, 0) survives and the character-level surrogate cannot
    // remove it because the chi coefficient of (3,1,1) in St (x) H^0((1,1,0))
    // equals 1.  The source settles the case with the weight structure of the
    // simple module L((1,1,0)), which is outside character-level scope.
    struct EmptyCase {
        char s;
        int n;
        int p;
    };
    std::vector<EmptyCase> empties = {{'A', 2, 2}, {'A', 2, 3}, {'A', 3, 2}, {'A', 3, 3}, {'A', 3, 5}, {'A', 3, 7},
                                      {'A', 4, 2}, {'A', 4, 3}, {'B', 2, 2}, {'B', 2, 3}, {'B', 3, 2}, {'B', 3, 3},
                                      {'B', 3, 5}, {'C', 3, 2}, {'C', 3, 5}, {'D', 4, 2}, {'D', 4, 3}, {'D', 4, 5},
                                      {'G', 2, 2}, {'G', 2, 3}, {'G', 2, 5}, {'G', 2, 7}};
    for (const auto& e : empties) {
        std::string name = std::string("C1 empty screen ") + e.s + std::to_string(e.n) + " p=" + std::to_string(e.p);
        criterion(name, [&](std::string& note) {
            PrimeContext ctx(root_system(e.s, e.n), e.p);
            ScreeningReport r = screen(ctx);
            if (r.unresolved.empty()) return true;
            note = std::to_string(r.counts.survivors - r.counts.surrogate_eliminated) + " surviving triple(s)";
            if (e.s == 'B' && e.n == 3 && e.p == 2) {
                Weight target = ctx.steinberg_weight() + 2 * Weight{1, 0, 0};
                note += "; chi coefficient at " + target.str() + " is " +
                        detail::steinberg_tensor_chi_coefficient(Weight{1, 1, 0}, Weight{1, 0, 0}, ctx).str() +
                        ", so the char_surrogate filter cannot fire (see decisions ledger)";
            }
            return false;
        }, 60.0);
    }
}

static void criterion2_simplicity() {
    criterion("C2 simplicity oracle reproduces every quoted fact", [](std::string& note) {
        auto simple = [](char s, int n, int p, Weight w) {
            return is_weyl_simple(w, PrimeContext(root_system(s, n), p));
        };
        bool ok = true;
        auto expect = [&](bool got, bool want, const char* what) {
            if (got != want) {
                ok = false;
                note += std::string(" ") + what;
            }
        };
        // B3
        expect(simple('B', 3, 3, {1, 0, 1}), true, "B3 w1+w3 p3");
        expect(simple('B', 3, 5, {1, 0, 1}), true, "B3 w1+w3 p5");
        expect(simple('B', 3, 7, {1, 0, 1}), false, "B3 w1+w3 p7");
        for (int p : {3, 5, 7}) expect(simple('B', 3, p, {0, 0, 2}), true, "B3 2w3");
        // C3
        for (int p : {2, 5, 7}) expect(simple('C', 3, p, {0, 1, 0}), true, "C3 w2");
        expect(simple('C', 3, 3, {0, 1, 0}), false, "C3 w2 p3");
        for (int p : {3, 5, 7}) expect(simple('C', 3, p, {0, 0, 1}), true, "C3 w3");
        expect(simple('C', 3, 2, {0, 0, 1}), false, "C3 w3 p2");
        for (int p : {3, 5, 7}) expect(simple('C', 3, p, {2, 0, 0}), true, "C3 2w1");
        for (int p : {2, 5}) expect(simple('C', 3, p, {1, 1, 0}), true, "C3 w1+w2");
        for (int p : {3, 7}) expect(simple('C', 3, p, {1, 1, 0}), false, "C3 w1+w2");
        for (int p : {5, 7}) expect(simple('C', 3, p, {1, 0, 1}), true, "C3 w1+w3");
        for (int p : {2, 3}) expect(simple('C', 3, p, {1, 0, 1}), false, "C3 w1+w3");
        // D4 p=3 list is exhaustive under the inner bound
        {
            auto sys = root_system('D', 4);
            PrimeContext ctx(sys, 3);
            std::set<Weight> nonsimple{{3, 0, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {1, 1, 0, 0},
                                       {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}};
            std::set<Weight> found;
            std::function<void(Weight&, int)> rec = [&](Weight& g, int k) {
                if (sys->pairing(g, sys->alpha0()) > 3) return;
                if (k == 4) {
                    if (!g.is_zero() && !is_weyl_simple(g, ctx)) found.insert(g);
                    return;
                }
                for (int v = 0;; ++v) {
                    g[k] = v;
                    if (sys->pairing(g, sys->alpha0()) > 3) break;
                    rec(g, k + 1);
                }
                g[k] = 0;
            };
            Weight g{0, 0, 0, 0};
            rec(g, 0);
            expect(found == nonsimple, true, "D4 p3 list");
        }
        expect(simple('F', 4, 2, {0, 0, 0, 1}), true, "F4 w4 p2");
        // Steinberg modules across ranks <= 3
        for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}})
            for (int p : {2, 3, 5, 7}) {
                PrimeContext ctx(root_system(s, n), p);
                expect(is_weyl_simple(ctx.steinberg_weight(), ctx), true, "Steinberg");
            }
        return ok;
    });
}

static void criterion3_fundweights() {
    criterion("C3 fundamental-weight flags: E7, E8, F4 and nothing else", [](std::string& note) {
        bool ok = true;
        for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 5}, {'A', 8}, {'B', 4}, {'B', 8}, {'C', 4},
                                                             {'C', 8}, {'D', 5}, {'D', 8}, {'E', 6}, {'G', 2}})
            for (int p : {2, 3, 5, 7})
                for (int r : {1, 2})
                    for (const auto& e : fundamental_weight_check(PrimeContext(root_system(s, n), p), r))
                        if (e.flagged) {
                            ok = false;
                            note += std::string(" unexpected flag ") + s + std::to_string(n);
                        }
        for (int p : {2, 3, 5})
            for (int r : {1, 2})
                for (const auto& e : fundamental_weight_check(PrimeContext(root_system('E', 7), p), r))
                    if (e.flagged != (e.j == 4 && p == 2 && r == 1)) {
                        ok = false;
                        note += " E7 j=" + std::to_string(e.j);
                    }
        std::set<std::pair<int, int>> e8{{3, 2}, {6, 2}, {5, 2}, {4, 2}, {4, 3}};
        for (int p : {2, 3, 5})
            for (int r : {1, 2})
                for (const auto& e : fundamental_weight_check(PrimeContext(root_system('E', 8), p), r))
                    if (e.flagged != (r == 1 && e8.count({e.j, p}) == 1)) {
                        ok = false;
                        note += " E8 j=" + std::to_string(e.j);
                    }
        for (int p : {2, 3, 5})
            for (int r : {1, 2})
                for (const auto& e : fundamental_weight_check(PrimeContext(root_system('F', 4), p), r))
                    if (e.flagged != (e.j == 2 && p == 2 && r == 1)) {
                        ok = false;
                        note += " F4 j=" + std::to_string(e.j);
                    }
        return ok;
    });
}

static void criterion4_bounds() {
    criterion("C4 p >= 2h-4 theorem at the smallest admissible prime", [](std::string& note) {
        auto smallest_prime_at_least = [](int v) {
            int p = std::max(2, v);
            while (!is_prime(p)) ++p;
            return p;
        };
        bool ok = true;
        for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                                                             {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4},
                                                             {'F', 4}, {'G', 2}}) {
            auto sys = root_system(s, n);
            int p = smallest_prime_at_least(2 * sys->coxeter_number - 4);
            if (!check_bound_theorem(PrimeContext(sys, p))) {
                ok = false;
                note += std::string(" ") + s + std::to_string(n) + " p=" + std::to_string(p);
            }
        }
        return ok;
    });
    criterion("C4 weight bound <lambda,a0> <= 2p-1 forces minuscule survivors", [](std::string& note) {
        bool ok = true;
        for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}})
            for (int p : {2, 3, 5, 7}) {
                PrimeContext ctx(root_system(s, n), p);
                for (const auto& lam : restricted_weights(ctx)) {
                    if (ctx.sys->pairing(lam, ctx.sys->alpha0()) > 2 * p - 1) continue;
                    if (!check_weight_bound(lam, ctx)) {
                        ok = false;
                        note += std::string(" ") + s + std::to_string(n) + " p=" + std::to_string(p) + " " + lam.str();
                    }
                }
            }
        return ok;
    });
}

static void criterion5_hyperalg() {
    criterion("C5 hyperalgebra suite (maximal vectors, quotient, truncation)", [](std::string& note) {
        auto mv = hyperalg::verify_maximal_vectors();
        auto qr = hyperalg::verify_quotient_images();
        auto tr = hyperalg::verify_adjoint_truncation();
        bool ok = mv.all_ok() && qr.all_ok() && tr.all_ok();
        for (const auto& f : mv.failures) note += " " + f;
        for (const auto& f : qr.failures) note += " " + f;
        for (const auto& f : tr.failures) note += " " + f;
        // exhaustive e-action vs normal-ordering oracle
        long cases = 0;
        std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cur) {
            for (int alpha = 1; alpha <= 5; ++alpha) {
                ++cases;
                auto fast = hyperalg::e_action(alpha, hyperalg::FWord(std::vector<int>(cur)));
                auto slow = oracle::e_action_oracle(alpha, cur);
                bool match = fast.has_value() ? (slow.size() == 1 && *slow.begin() == *fast) : slow.empty();
                if (!match) {
                    ok = false;
                    note += " mismatch at " + hyperalg::FWord(std::vector<int>(cur)).str();
                }
            }
            if (cur.size() == 5) return;
            for (int i = 1; i <= 5; ++i) {
                if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
                cur.push_back(i);
                rec(cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        rec(cur);
        if (cases != 1630) {
            ok = false;
            note += " case count " + std::to_string(cases);
        }
        return ok;
    }, 5.0);
}

static void criterion6_properties() {
    criterion("C6 Freudenthal matches the Kostant oracle on the rank <= 3 grid", [](std::string& note) {
        for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
            auto sys = root_system(s, n);
            oracle::BruteWeylGroup W(*sys);
            oracle::KostantPartition P(*sys);
            std::vector<Weight> lams;
            std::function<void(Weight&, int)> rec = [&](Weight& w, int k) {
                if (sys->pairing(w, sys->alpha0()) > 6) return;
                if (k == n) {
                    lams.push_back(w);
                    return;
                }
                for (int v = 0;; ++v) {
                    w[k] = v;
                    if (sys->pairing(w, sys->alpha0()) > 6) break;
                    rec(w, k + 1);
                }
                w[k] = 0;
            };
            Weight work(std::vector<int>(static_cast<size_t>(n), 0));
            rec(work, 0);
            for (const auto& lam : lams) {
                Character c = weyl_character(sys, lam);
                for (const auto& [mu, m] : c.mults())
                    if (m != oracle::kostant_multiplicity(*sys, W, P, lam, mu)) {
                        note = std::string(1, s) + std::to_string(n) + " " + lam.str() + " at " + mu.str();
                        return false;
                    }
                if (c.dimension() != weyl_dim(*sys, lam)) {
                    note = "dimension mismatch at " + lam.str();
                    return false;
                }
            }
        }
        return true;
    });

    criterion("C6 chi decompositions of 100 random induced tensors are >= 0", [](std::string& note) {
        std::mt19937 rng(101);
        int done = 0;
        while (done < 100) {
            char s = "ABC"[done % 3];
            int n = (s == 'A') ? 2 + done % 2 : (s == 'B' ? 2 : 3);
            auto sys = root_system(s, n);
            std::uniform_int_distribution<int> d(0, 2);
            std::vector<int> c1(static_cast<size_t>(n)), c2(static_cast<size_t>(n));
            for (auto& v : c1) v = d(rng);
            for (auto& v : c2) v = d(rng);
            SignedChiExpansion e = decompose_into_chi(
                tensor_character(weyl_character(sys, Weight(c1)), weyl_character(sys, Weight(c2))));
            for (const auto& [mu, coeff] : e.terms)
                if (coeff <= 0) {
                    note = "negative coefficient at " + mu.str();
                    return false;
                }
            ++done;
        }
        return true;
    });

    criterion("C6 linkage laws on the full X_1 of (B3, p=7)", [](std::string& note) {
        auto sys = root_system('B', 3);
        PrimeContext ctx(sys, 7);
        oracle::BruteWeylGroup W(*sys);
        auto X1 = restricted_weights(ctx);
        std::map<Weight, Weight> rep;
        for (const auto& w : X1) {
            Weight r = linkage_rep(w, ctx).canonical;
            if (linkage_rep(r, ctx).canonical != r) {
                note = "rep not idempotent at " + w.str();
                return false;
            }
            rep.emplace(w, r);
        }
        std::mt19937 rng(103);
        std::uniform_int_distribution<size_t> d(0, X1.size() - 1);
        for (int t = 0; t < 400; ++t) {
            const Weight &a = X1[d(rng)], &b = X1[d(rng)], &c = X1[d(rng)];
            bool ab = g1_linked(a, b, ctx), ba = g1_linked(b, a, ctx), bc = g1_linked(b, c, ctx),
                 ac = g1_linked(a, c, ctx);
            if (ab != ba || !g1_linked(a, a, ctx) || (ab && bc && !ac)) {
                note = "equivalence law failed";
                return false;
            }
            if (ab != oracle::g1_linked_oracle(*sys, W, a, b, 7)) {
                note = "oracle mismatch at " + a.str() + " vs " + b.str();
                return false;
            }
            if (ab != (rep.at(a) == rep.at(b))) {
                note = "rep equality mismatch";
                return false;
            }
        }
        return true;
    });

    criterion("C6 complement involution and duality laws", [](std::string& note) {
        std::mt19937 rng(107);
        for (auto [s, n, p] : std::vector<std::tuple<char, int, int>>{{'B', 3, 7}, {'C', 3, 5}, {'A', 4, 3}, {'D', 4, 3}}) {
            PrimeContext ctx(root_system(s, n), p);
            for (const auto& mu : restricted_weights(ctx))
                if (mu_complement(mu_complement(mu, ctx), ctx) != mu) {
                    note = "complement not involutive";
                    return false;
                }
            std::uniform_int_distribution<int> d(0, 6);
            for (int t = 0; t < 200; ++t) {
                std::vector<int> c(static_cast<size_t>(n));
                for (auto& v : c) v = d(rng);
                Weight w(std::move(c));
                if (ctx.sys->dual_weight(ctx.sys->dual_weight(w)) != w) {
                    note = "duality not involutive";
                    return false;
                }
            }
        }
        return true;
    });
}

int main() {
    std::cout << "acceptance suite\n================\n";
    criterion1_golden_tables();
    criterion2_simplicity();
    criterion3_fundweights();
    criterion4_bounds();
    criterion5_hyperalg();
    criterion6_properties();
    std::cout << "================\n";
    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << " criterion(s) failed (see notes above and the project README)\n";
    }
    return failures;
}
