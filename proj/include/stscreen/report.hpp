#pragma once

#include "screening.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace stscreen {

enum class ReportFormat { Text, Csv, Json };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected text|csv|json)");
}

namespace detail {

inline std::string filter_names(const CandidateTriple& t) {
    std::string s;
    auto app = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += '|';
        s += name;
    };
    app(t.inner_ineq, "inner_ineq");
    app(t.weight_ineq, "weight_ineq");
    app(t.linkage, "linkage");
    app(t.gamma_not_simple, "gamma_not_simple");
    return s;
}

inline nlohmann::json weight_json(const Weight& w) { return nlohmann::json(w.coords); }

inline Weight weight_from_json(const nlohmann::json& j) {
    return Weight(j.get<std::vector<int>>());
}

inline nlohmann::json triple_json(const CandidateTriple& t) {
    return nlohmann::json{{"lambda", weight_json(t.lambda)},
                          {"gamma", weight_json(t.gamma)},
                          {"mu1", weight_json(t.mu1)},
                          {"filters",
                           {{"inner_ineq", t.inner_ineq},
                            {"weight_ineq", t.weight_ineq},
                            {"linkage", t.linkage},
                            {"gamma_not_simple", t.gamma_not_simple}}}};
}

inline CandidateTriple triple_from_json(const nlohmann::json& j) {
    CandidateTriple t;
    t.lambda = weight_from_json(j.at("lambda"));
    t.gamma = weight_from_json(j.at("gamma"));
    t.mu1 = weight_from_json(j.at("mu1"));
    const auto& f = j.at("filters");
    t.inner_ineq = f.at("inner_ineq").get<bool>();
    t.weight_ineq = f.at("weight_ineq").get<bool>();
    t.linkage = f.at("linkage").get<bool>();
    t.gamma_not_simple = f.at("gamma_not_simple").get<bool>();
    return t;
}

} // namespace detail

inline void emit_text(const ScreeningReport& r, std::ostream& os) {
    os << "screen " << r.series << r.rank << " p=" << r.p << "\n";
    os << "lambdas=" << r.counts.lambdas_scanned << " candidate_pairs=" << r.counts.candidate_gamma_pairs
       << " weight_pairs=" << r.counts.weight_pairs << " linked_pairs=" << r.counts.linked_pairs
       << " survivors=" << r.counts.survivors << "\n";
    if (r.unresolved.empty()) {
        os << "unresolved: none\n";
    } else {
        for (const auto& [lambda, triples] : r.unresolved)
            for (const auto& t : triples)
                os << "lambda=" << t.lambda.str() << " gamma=" << t.gamma.str() << " mu1=" << t.mu1.str() << "\n";
    }
    if (r.counts.surrogate_checked > 0)
        os << "char_surrogate checked " << r.counts.surrogate_checked << " triple(s), eliminated "
           << r.counts.surrogate_eliminated << "\n";
    for (const auto& t : r.surrogate_eliminated)
        os << "char_surrogate eliminated: lambda=" << t.lambda.str() << " gamma=" << t.gamma.str()
           << " mu1=" << t.mu1.str() << "\n";
}

inline void emit_csv(const ScreeningReport& r, std::ostream& os) {
    os << "lambda,gamma,mu1,filters\n";
    for (const auto& [lambda, triples] : r.unresolved) {
        (void)lambda;
        for (const auto& t : triples)
            os << '"' << t.lambda.str() << "\",\"" << t.gamma.str() << "\",\"" << t.mu1.str() << "\","
               << detail::filter_names(t) << "\n";
    }
}

inline nlohmann::json report_json(const ScreeningReport& r) {
    nlohmann::json j;
    j["schema"] = ScreeningReport::schema;
    j["series"] = std::string(1, r.series);
    j["rank"] = r.rank;
    j["p"] = r.p;
    j["resolved"] = nlohmann::json::array();
    for (const auto& w : r.resolved) j["resolved"].push_back(detail::weight_json(w));
    j["unresolved"] = nlohmann::json::array();
    for (const auto& [lambda, triples] : r.unresolved) {
        nlohmann::json e;
        e["lambda"] = detail::weight_json(lambda);
        e["triples"] = nlohmann::json::array();
        for (const auto& t : triples) e["triples"].push_back(detail::triple_json(t));
        j["unresolved"].push_back(std::move(e));
    }
    j["surrogate_eliminated"] = nlohmann::json::array();
    for (const auto& t : r.surrogate_eliminated) j["surrogate_eliminated"].push_back(detail::triple_json(t));
    j["counts"] = {{"lambdas_scanned", r.counts.lambdas_scanned},
                   {"candidate_gamma_pairs", r.counts.candidate_gamma_pairs},
                   {"weight_pairs", r.counts.weight_pairs},
                   {"linked_pairs", r.counts.linked_pairs},
                   {"survivors", r.counts.survivors},
                   {"surrogate_checked", r.counts.surrogate_checked},
                   {"surrogate_eliminated", r.counts.surrogate_eliminated}};
    return j;
}

inline ScreeningReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != ScreeningReport::schema)
        throw std::invalid_argument("unsupported report schema");
    ScreeningReport r;
    r.series = j.at("series").get<std::string>().at(0);
    r.rank = j.at("rank").get<int>();
    r.p = j.at("p").get<int>();
    for (const auto& e : j.at("resolved")) r.resolved.push_back(detail::weight_from_json(e));
    for (const auto& e : j.at("unresolved")) {
        std::vector<CandidateTriple> ts;
        for (const auto& t : e.at("triples")) ts.push_back(detail::triple_from_json(t));
        r.unresolved.emplace_back(detail::weight_from_json(e.at("lambda")), std::move(ts));
    }
    for (const auto& t : j.at("surrogate_eliminated")) r.surrogate_eliminated.push_back(detail::triple_from_json(t));
    const auto& c = j.at("counts");
    r.counts.lambdas_scanned = c.at("lambdas_scanned").get<long long>();
    r.counts.candidate_gamma_pairs = c.at("candidate_gamma_pairs").get<long long>();
    r.counts.weight_pairs = c.at("weight_pairs").get<long long>();
    r.counts.linked_pairs = c.at("linked_pairs").get<long long>();
    r.counts.survivors = c.at("survivors").get<long long>();
    r.counts.surrogate_checked = c.at("surrogate_checked").get<long long>();
    r.counts.surrogate_eliminated = c.at("surrogate_eliminated").get<long long>();
    return r;
}

inline std::string emit_table(const ScreeningReport& r, ReportFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::Text: emit_text(r, os); break;
        case ReportFormat::Csv: emit_csv(r, os); break;
        case ReportFormat::Json: os << report_json(r).dump(2) << "\n"; break;
    }
    return os.str();
}

// Character as a JSON map {"[m1,...,mn]": multiplicity}.
inline nlohmann::json character_json(const Character& c) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, m] : c.mults()) {
        std::string key = "[";
        for (size_t i = 0; i < w.coords.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(w.coords[i]);
        }
        key += ']';
        j[key] = m.str();
    }
    return j;
}

inline nlohmann::json chi_expansion_json(const SignedChiExpansion& e) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, c] : e.terms) {
        std::string key = "[";
        for (size_t i = 0; i < w.coords.size(); ++i) {
            if (i) key += ',';
            key += std::to_string(w.coords[i]);
        }
        key += ']';
        j[key] = c.str();
    }
    return j;
}

// Diagnostic blob for the `info` subcommand.
inline nlohmann::json root_system_json(const RootSystem& sys) {
    nlohmann::json j;
    j["series"] = std::string(1, series_char(sys.series));
    j["rank"] = sys.rank;
    j["cartan"] = sys.cartan;
    j["symmetrizer"] = sys.symmetrizer;
    j["coxeter_number"] = sys.coxeter_number;
    j["positive_root_count"] = sys.positive_roots.size();
    j["positive_roots"] = nlohmann::json::array();
    for (const auto& r : sys.positive_roots) j["positive_roots"].push_back(r.root_coords);
    j["alpha0"] = sys.alpha0().root_coords;
    j["alpha0_coroot"] = sys.alpha0().coroot_coords;
    j["alpha_tilde"] = sys.alpha_tilde().root_coords;
    j["alpha_tilde_coroot"] = sys.alpha_tilde().coroot_coords;
    j["dual_permutation"] = sys.dual_permutation;
    return j;
}

} // namespace stscreen
