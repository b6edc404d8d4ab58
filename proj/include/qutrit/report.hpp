#pragma once

// Everything the analyzer says about one state, as a value, as text and as JSON.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "qutrit/io.hpp"

namespace qutrit {

struct Report {
    StateParams params;
    ValidityReport validity;
    std::array<double, 3> t_eigenvalues{};  // lambda_u >= lambda_v >= lambda_w
    Vec3 semi_axes;
    MetricTensor metric;
    std::optional<double> gamma_norm;      // nullopt: degenerate metric
    std::optional<RankReport> rank;        // present iff the state is valid
    std::optional<SceneCase> scene_case;   // present iff the state is valid

    friend bool operator==(const Report&, const Report&) = default;
};

inline Report analyze(const QutritDensity& rho) {
    Report r;
    r.params = decompose(rho);
    r.validity = validate(r.params);
    r.t_eigenvalues = correlation_spectrum(r.params.T).values;
    r.semi_axes = semi_axes_from_spectrum(r.t_eigenvalues);
    r.metric = metric_tensor(r.params.T);
    if (r.metric.defined) r.gamma_norm = dot(r.params.a, r.metric.gamma.dense() * r.params.a);
    if (r.validity.overall) {
        r.rank = classify_rank(rho);
        r.scene_case = build_scene(rho).scene_case;
    }
    return r;
}

namespace detail {

// 12 significant digits; round-off below 5e-13 prints as 0.
inline std::string fmt(double x) {
    if (std::abs(x) < 5e-13) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

template <class Seq>
std::string fmt_list(const Seq& xs) {
    std::string out = "[";
    bool first = true;
    for (double x : xs) {
        if (!first) out += ", ";
        out += fmt(x);
        first = false;
    }
    return out + "]";
}

}  // namespace detail

inline std::string render_text(const Report& r) {
    using detail::fmt;
    using detail::fmt_list;
    std::ostringstream out;
    out << "Bloch vector a         " << fmt_list(r.params.a) << '\n'
        << "correlations q         " << fmt_list(r.params.q) << '\n'
        << "weights omega          " << fmt_list(r.params.omega) << '\n'
        << "T eigenvalues (u,v,w)  " << fmt_list(r.t_eigenvalues) << '\n'
        << "semi-axes eps (u,v,w)  " << fmt_list(r.semi_axes) << '\n'
        << "a.Gamma.a              " << (r.gamma_norm ? fmt(*r.gamma_norm) : std::string("degenerate")) << '\n';
    auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
    out << "positivity             c1 " << ok(r.validity.c1_ok) << ", c2 " << ok(r.validity.c2_ok) << ", c3 "
        << ok(r.validity.c3_ok) << " -> " << (r.validity.overall ? "valid" : "invalid") << '\n';
    if (!r.validity.overall) {
        out << "violation              " << r.validity.violation << '\n';
        return out.str();
    }
    out << "rho eigenvalues        " << fmt_list(r.rank->eigenvalues) << '\n'
        << "rank                   " << r.rank->rank << " (" << to_string(r.rank->rank_case) << ")\n"
        << "scene                  " << to_string(*r.scene_case) << '\n';
    return out.str();
}

namespace io {

inline RankCase rank_case_from(const std::string& s, const std::string& where) {
    for (auto c : {RankCase::full_3d, RankCase::surface_3d, RankCase::segment_interior, RankCase::segment_endpoint,
                   RankCase::point})
        if (to_string(c) == s) return c;
    parse_fail(where, "unknown rank case \"" + s + "\"");
}

inline json report_to_json(const Report& r) {
    json j;
    j["params"] = {{"a", to_json(r.params.a)},
                   {"q", to_json(r.params.q)},
                   {"omega", to_json(r.params.omega)},
                   {"T", to_json(r.params.T.dense())}};
    j["validity"] = {{"c1_ok", r.validity.c1_ok},         {"c2_ok", r.validity.c2_ok},
                     {"c3_ok", r.validity.c3_ok},         {"overall", r.validity.overall},
                     {"c1_margin", r.validity.c1_margin}, {"c2_margin", r.validity.c2_margin},
                     {"c3_margin", r.validity.c3_margin}, {"violation", r.validity.violation}};
    j["t_eigenvalues"] = to_json(Vec3{r.t_eigenvalues[0], r.t_eigenvalues[1], r.t_eigenvalues[2]});
    j["semi_axes"] = to_json(r.semi_axes);
    j["metric"] = r.metric.defined ? to_json(r.metric.gamma.dense()) : json("degenerate");
    j["gamma_norm"] = r.gamma_norm ? json(*r.gamma_norm) : json("degenerate");
    if (r.rank) {
        const auto& ev = r.rank->eigenvalues;
        j["rank"] = {{"rank", r.rank->rank},
                     {"case", std::string(to_string(r.rank->rank_case))},
                     {"eigenvalues", to_json(Vec3{ev[0], ev[1], ev[2]})}};
    } else {
        j["rank"] = nullptr;
    }
    j["scene_case"] = r.scene_case ? json(std::string(to_string(*r.scene_case))) : json(nullptr);
    return j;
}

inline Report report_from_json(const json& j) {
    Report r;
    const auto& p = member(j, "params", "report");
    r.params.a = vector_from<3>(member(p, "a", "params"), "params.a");
    r.params.q = vector_from<3>(member(p, "q", "params"), "params.q");
    r.params.omega = vector_from<3>(member(p, "omega", "params"), "params.omega");
    r.params.T = RealSymMat3::from_upper(real_matrix_from<3>(member(p, "T", "params"), "params.T"));

    const auto& v = member(j, "validity", "report");
    auto flag = [&](const char* key) {
        const auto& f = member(v, key, "validity");
        if (!f.is_boolean()) parse_fail(std::string("validity.") + key, "expected a boolean");
        return f.get<bool>();
    };
    r.validity.c1_ok = flag("c1_ok");
    r.validity.c2_ok = flag("c2_ok");
    r.validity.c3_ok = flag("c3_ok");
    r.validity.overall = flag("overall");
    r.validity.c1_margin = number_at(member(v, "c1_margin", "validity"), "validity.c1_margin");
    r.validity.c2_margin = number_at(member(v, "c2_margin", "validity"), "validity.c2_margin");
    r.validity.c3_margin = number_at(member(v, "c3_margin", "validity"), "validity.c3_margin");
    r.validity.violation = string_at(member(v, "violation", "validity"), "validity.violation");

    const auto ev = vector_from<3>(member(j, "t_eigenvalues", "report"), "t_eigenvalues");
    r.t_eigenvalues = {ev[0], ev[1], ev[2]};
    r.semi_axes = vector_from<3>(member(j, "semi_axes", "report"), "semi_axes");
    const auto& metric = member(j, "metric", "report");
    if (!metric.is_string()) {
        r.metric.gamma = RealSymMat3::from_upper(real_matrix_from<3>(metric, "metric"));
        r.metric.defined = true;
    }
    const auto& gn = member(j, "gamma_norm", "report");
    if (!gn.is_string()) r.gamma_norm = number_at(gn, "gamma_norm");
    const auto& rank = member(j, "rank", "report");
    if (!rank.is_null()) {
        RankReport rr;
        rr.rank = member(rank, "rank", "rank").get<int>();
        rr.rank_case = rank_case_from(string_at(member(rank, "case", "rank"), "rank.case"), "rank.case");
        const auto e = vector_from<3>(member(rank, "eigenvalues", "rank"), "rank.eigenvalues");
        rr.eigenvalues = {e[0], e[1], e[2]};
        r.rank = rr;
    }
    const auto& sc = member(j, "scene_case", "report");
    if (!sc.is_null()) r.scene_case = scene_case_from(string_at(sc, "scene_case"), "scene_case");
    return r;
}

}  // namespace io
}  // namespace qutrit
