#pragma once

#include "hyperalg.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace stscreen::cli {

namespace detail {

inline long long default_cap() {
    if (const char* env = std::getenv("STSCREEN_CAP")) {
        long long v = std::atoll(env);
        if (v >= 1) return v;
    }
    return 100000;
}

struct Common {
    std::string type = "A";
    int rank = 1;
    int p = 2;
    int r = 1;

    std::shared_ptr<const RootSystem> system() const {
        if (type.size() != 1) throw std::invalid_argument("series must be a single letter A..G");
        return root_system(type[0], rank);
    }
    PrimeContext context() const { return PrimeContext(system(), p, r); }
};

inline void add_type_rank(CLI::App* cmd, Common& c) {
    cmd->add_option("--type", c.type, "series letter A..G")->required();
    cmd->add_option("--rank", c.rank, "rank (1..8)")->required();
}

inline void add_prime(CLI::App* cmd, Common& c, bool with_r = false) {
    cmd->add_option("--p", c.p, "prime characteristic")->required();
    if (with_r) cmd->add_option("--r", c.r, "Frobenius depth (default 1)");
}

inline void write_out(const std::string& payload, const std::string& out_path, std::ostream& os) {
    if (out_path.empty()) {
        os << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
}

} // namespace detail

// Routes argv to the subcommands.  Exit codes: 0 success, 1 usage or internal
// error, 2 screening finished with a nonempty unresolved set.
inline int parse_and_dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact weight combinatorics for Steinberg tensor screening"};
    app.require_subcommand(1);

    detail::Common c;
    std::string lambda_s, mu_s, l1_s, l2_s, format_s = "text", out_path;
    long long cap = detail::default_cap();
    int jobs = 1;
    bool as_json = false, do_decompose = false;

    auto* info = app.add_subcommand("info", "root system diagnostics as JSON");
    detail::add_type_rank(info, c);

    auto* mult = app.add_subcommand("mult", "weight multiplicity in ch H^0(lambda)");
    detail::add_type_rank(mult, c);
    mult->add_option("--lambda", lambda_s, "highest weight m1,...,mn")->required();
    mult->add_option("--mu", mu_s, "weight to look up");
    mult->add_flag("--json", as_json, "print the full character as JSON");

    auto* dim = app.add_subcommand("dim", "dimension of H^0(lambda)");
    detail::add_type_rank(dim, c);
    dim->add_option("--lambda", lambda_s)->required();

    auto* tensor = app.add_subcommand("tensor", "character of H^0(l1) (x) H^0(l2)");
    detail::add_type_rank(tensor, c);
    tensor->add_option("--l1", l1_s)->required();
    tensor->add_option("--l2", l2_s)->required();
    tensor->add_flag("--decompose", do_decompose, "print the chi expansion instead of the character");

    auto* restr = app.add_subcommand("restricted", "list the p^r-restricted dominant weights");
    detail::add_type_rank(restr, c);
    detail::add_prime(restr, c, true);

    auto* linked = app.add_subcommand("linked", "G_1-linkage of two weights");
    detail::add_type_rank(linked, c);
    detail::add_prime(linked, c);
    linked->add_option("--lambda", lambda_s)->required();
    linked->add_option("--mu", mu_s)->required();

    auto* simple = app.add_subcommand("simple", "simplicity of the Weyl module by the Jantzen criterion");
    detail::add_type_rank(simple, c);
    detail::add_prime(simple, c);
    simple->add_option("--lambda", lambda_s)->required();

    auto* jsum = app.add_subcommand("jsum", "Jantzen sum formula as a chi expansion");
    detail::add_type_rank(jsum, c);
    detail::add_prime(jsum, c);
    jsum->add_option("--lambda", lambda_s)->required();

    auto* screen_cmd = app.add_subcommand("screen", "screen X_1 for good-filtration obstructions");
    detail::add_type_rank(screen_cmd, c);
    detail::add_prime(screen_cmd, c);
    screen_cmd->add_option("--lambda", lambda_s, "restrict to one lambda");
    screen_cmd->add_option("--format", format_s, "text|csv|json (default text)");
    screen_cmd->add_option("--cap", cap, "enumeration cap on |X_1| (env STSCREEN_CAP)");
    screen_cmd->add_option("--jobs", jobs, "parallelism degree (default 1)");
    screen_cmd->add_option("--out", out_path, "write output to a file");

    auto* fundw = app.add_subcommand("fundweights", "fundamental-weight classification via h(j,r,p)");
    detail::add_type_rank(fundw, c);
    detail::add_prime(fundw, c, true);

    auto* hyper = app.add_subcommand("hyperalg", "symbolic SL6 characteristic-2 verification");
    auto* verify_a5 = hyper->add_subcommand("verify-a5", "run all maximal-vector and quotient checks");
    hyper->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("stscreen");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (info->parsed()) {
            out << root_system_json(*c.system()).dump(2) << "\n";
            return 0;
        }
        if (mult->parsed()) {
            Character ch = weyl_character(c.system(), parse_weight(lambda_s));
            if (as_json) {
                out << character_json(ch).dump(2) << "\n";
            } else {
                if (mu_s.empty()) throw CLI::ValidationError("--mu", "required unless --json is given");
                out << ch.multiplicity(parse_weight(mu_s)) << "\n";
            }
            return 0;
        }
        if (dim->parsed()) {
            out << weyl_dim(*c.system(), parse_weight(lambda_s)) << "\n";
            return 0;
        }
        if (tensor->parsed()) {
            auto sys = c.system();
            Character t = tensor_character(weyl_character(sys, parse_weight(l1_s)), weyl_character(sys, parse_weight(l2_s)));
            if (do_decompose)
                out << chi_expansion_json(decompose_into_chi(t)).dump(2) << "\n";
            else
                out << character_json(t).dump(2) << "\n";
            return 0;
        }
        if (restr->parsed()) {
            for (const auto& w : restricted_weights(c.context())) out << w.str() << "\n";
            return 0;
        }
        if (linked->parsed()) {
            PrimeContext ctx = c.context();
            Weight lam = parse_weight(lambda_s), mu = parse_weight(mu_s);
            bool yes = g1_linked(lam, mu, ctx);
            out << (yes ? "linked" : "not linked") << " rep(lambda)=" << linkage_rep(lam, ctx).canonical.str()
                << " rep(mu)=" << linkage_rep(mu, ctx).canonical.str() << "\n";
            return 0;
        }
        if (simple->parsed()) {
            bool s = is_weyl_simple(parse_weight(lambda_s), c.context());
            out << (s ? "simple" : "not simple") << "\n";
            return 0;
        }
        if (jsum->parsed()) {
            out << chi_expansion_json(jantzen_sum(parse_weight(lambda_s), c.context())).dump(2) << "\n";
            return 0;
        }
        if (screen_cmd->parsed()) {
            ScreenOptions opts;
            opts.cap = cap;
            opts.jobs = jobs;
            if (!lambda_s.empty()) opts.lambda_filter = parse_weight(lambda_s);
            auto t0 = std::chrono::steady_clock::now();
            ScreeningReport rep = screen(c.context(), opts);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            detail::write_out(emit_table(rep, parse_format(format_s)), out_path, out);
            err << "elapsed: " << dt << "s\n";
            return rep.all_resolved() ? 0 : 2;
        }
        if (fundw->parsed()) {
            auto entries = fundamental_weight_check(c.context(), c.r);
            for (const auto& e : entries) {
                out << "j=" << e.j << " pairing=" << e.pairing << " h=" << e.pairing << "/" << c.context().q()
                    << (e.flagged ? " FLAGGED" : " ok");
                if (e.delta) out << " delta=" << e.delta->str();
                out << "\n";
            }
            return 0;
        }
        if (verify_a5->parsed()) {
            auto mv = hyperalg::verify_maximal_vectors();
            auto qr = hyperalg::verify_quotient_images();
            auto tr = hyperalg::verify_adjoint_truncation();
            auto line = [&](const char* name, bool ok) { out << name << ": " << (ok ? "pass" : "FAIL") << "\n"; };
            line("maximal vectors annihilated by e_2,e_3,e_4", mv.v1_ok && mv.v2_ok && mv.v3_ok);
            line("maximal vectors independent over F_2", mv.independent);
            line("quotient kills v3", qr.v3_killed);
            line("quotient images of v1, v2 independent", qr.v1_v2_independent);
            line("adjoint truncation basis", tr.basis_ok && tr.alternate_basis_ok);
            line("U+-fixed vector in weight 2*alpha0", tr.fixed_vector_ok);
            line("lambda - 2*alpha0 = alpha2+alpha3+alpha4", tr.weight_identity_ok);
            bool all = mv.all_ok() && qr.all_ok() && tr.all_ok();
            for (const auto& f : mv.failures) err << "failure: " << f << "\n";
            for (const auto& f : qr.failures) err << "failure: " << f << "\n";
            for (const auto& f : tr.failures) err << "failure: " << f << "\n";
            return all ? 0 : 1;
        }
        err << "no subcommand dispatched\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace stscreen::cli
