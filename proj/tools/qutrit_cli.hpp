#pragma once

// Command-line front end. run() takes the arguments after the program name and writes to the
// given streams, so tests drive exactly what the executable does.
//
// Exit codes: 0 ok, 1 I/O / parse / usage error, 2 invalid state, 3 internal inconsistency.

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qutrit/qutrit.hpp"

namespace qutrit::cli {

enum ExitCode : int { kOk = 0, kIoOrParse = 1, kInvalidState = 2, kInconsistent = 3 };

inline int exit_code_for(Errc code) {
    switch (code) {
        case Errc::parse_error:
        case Errc::io:
        case Errc::invalid_argument: return kIoOrParse;
        case Errc::internal: return kInconsistent;
        default: return kInvalidState;
    }
}

namespace detail {

inline double parse_term(std::string s, const std::string& whole) {
    auto fail = [&] { throw Error(Errc::invalid_argument, "not a number: \"" + whole + "\""); };
    if (s.empty()) fail();
    double factor = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        factor = std::numbers::pi;
        s.erase(s.size() - 2);
        if (!s.empty() && s.back() == '*') s.pop_back();
        if (s.empty() || s == "+") return factor;
        if (s == "-") return -factor;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        fail();
    }
    if (used != s.size()) fail();
    return v * factor;
}

}  // namespace detail

/// Accepts decimals, fractions and multiples of pi: "0.5", "2/3", "-1/3", "pi", "2pi", "2*pi", "pi/2".
inline double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return detail::parse_term(text, text);
    const double num = detail::parse_term(text.substr(0, slash), text);
    const double den = detail::parse_term(text.substr(slash + 1), text);
    if (den == 0.0) throw Error(Errc::invalid_argument, "division by zero in \"" + text + "\"");
    return num / den;
}

inline Axis parse_axis(const std::string& s, const std::string& whole) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    throw Error(Errc::invalid_argument, "generator axis must be x, y or z: \"" + whole + "\"");
}

/// rot:x|y|z, twist:x|y|z, counter:x|y|z, custom:<path to {"re","im"} Hermitian 3x3>
inline Generator parse_generator(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(Errc::invalid_argument, "generator needs kind:arg, got \"" + text + "\"");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    if (kind == "rot") return Rotation{parse_axis(arg, text)};
    if (kind == "twist") return OneAxisTwist{parse_axis(arg, text)};
    if (kind == "counter") return TwoAxisCounter{parse_axis(arg, text)};
    if (kind == "custom") {
        const auto j = io::parse_text(io::read_file(arg), arg);
        const auto h = io::complex_matrix_from<3>(j, arg);
        require_hermitian(h, "custom generator");
        return CustomGenerator{h};
    }
    throw Error(Errc::invalid_argument, "unknown generator kind \"" + kind + "\"");
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        io::write_file(path, text);
}

// ---------------------------------------------------------------------------------------------
// Commands

inline int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
    const auto state = io::load_state_file(path);
    const auto report = analyze(state.rho);
    out << (as_json ? io::dump(io::report_to_json(report)) : render_text(report));
    return report.validity.overall ? kOk : kInvalidState;
}

struct SceneArgs {
    std::string path;
    std::string format = "json";
    int lat = 16;
    int lon = 32;
    bool surface_only = false;
    std::string out_path;
};

inline int cmd_scene(const SceneArgs& args, std::ostream& out) {
    const auto state = io::load_state_file(args.path);
    const auto scene = build_scene(state.rho);
    if (args.format == "json")
        emit(args.out_path, io::export_scene_json(scene), out);
    else if (args.format == "obj")
        emit(args.out_path, export_scene_obj(scene, {args.lat, args.lon, args.surface_only}), out);
    else
        throw Error(Errc::invalid_argument, "unknown format \"" + args.format + "\"");
    return kOk;
}

inline int cmd_mub(int basis, int vector, bool as_json, std::ostream& out) {
    if (basis < 1 || basis > 4 || vector < 1 || vector > 3)
        throw Error(Errc::invalid_argument, "mub: need --basis 1..4 and --vector 1..3");
    const auto family = mub_bases();
    const auto& v = family.bases[basis - 1][vector - 1];
    double lo = 1.0, hi = 0.0;
    for (int b = 0; b < 4; ++b) {
        if (b == basis - 1) continue;
        for (const auto& w : family.bases[b]) {
            const double m = std::abs(inner(v.amp, w.amp));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
    }
    const auto report = analyze(v.density());
    if (as_json) {
        io::json j = {{"basis", basis},
                      {"vector", vector},
                      {"state", io::pure_to_json(v.amp)},
                      {"report", io::report_to_json(report)},
                      {"cross_overlap_min", lo},
                      {"cross_overlap_max", hi}};
        out << io::dump(j);
    } else {
        out << "MUB basis " << basis << ", vector " << vector << '\n'
            << "state                  " << io::pure_to_json(v.amp).dump() << '\n'
            << render_text(report) << "cross-basis |<v|w>|    min " << qutrit::detail::fmt(lo) << ", max "
            << qutrit::detail::fmt(hi) << " (1/sqrt(3) = " << qutrit::detail::fmt(1.0 / std::numbers::sqrt3) << ")\n";
    }
    return kOk;
}

inline int cmd_pseudo(const Vec3& a, bool as_json, std::ostream& out) {
    const auto rho = pseudo_qubit(a);
    const auto report = analyze(rho);
    const bool separable = ppt_separable(to_two_qubit(rho));
    if (as_json) {
        out << io::dump({{"state", io::density_to_json(rho)},
                         {"report", io::report_to_json(report)},
                         {"ppt_separable", separable}});
    } else {
        out << "pseudo-qubit a         " << qutrit::detail::fmt_list(a) << "  (a.a = " << qutrit::detail::fmt(dot(a, a))
            << ")\n"
            << "state                  " << io::density_to_json(rho).dump() << '\n'
            << render_text(report) << "two-qubit PPT          " << (separable ? "separable" : "entangled") << '\n';
    }
    return kOk;
}

struct EvolveArgs {
    std::string path;
    std::string generator;
    std::string theta = "2pi";
    int steps = 2;
    bool scenes = false;
    std::string out_path;
};

inline int cmd_evolve(const EvolveArgs& args, std::ostream& out) {
    const auto g = parse_generator(args.generator);
    const double theta = parse_real(args.theta);
    const auto state = io::load_state_file(args.path);
    const auto traj = trajectory(state.rho, g, theta, args.steps, args.scenes);
    emit(args.out_path, io::dump(io::trajectory_to_json(traj)), out);
    return kOk;
}

inline int cmd_bridge(const std::string& path, const std::string& direction, const std::string& out_path,
                      std::ostream& out) {
    const auto j = io::parse_text(io::read_file(path), path);
    if (direction == "to2q") {
        const auto state = io::state_from_json(j, path);
        emit(out_path, io::dump(io::two_qubit_to_json(to_two_qubit(state.rho))), out);
    } else if (direction == "from2q") {
        const auto rho4 = io::two_qubit_from_json(j, path);
        emit(out_path, io::dump(io::density_to_json(from_two_qubit(rho4))), out);
    } else {
        throw Error(Errc::invalid_argument, "bridge: --direction must be to2q or from2q");
    }
    return kOk;
}

inline int cmd_ortho(const std::string& path_a, const std::string& path_b, std::ostream& out) {
    const auto a = io::load_state_file(path_a);
    const auto b = io::load_state_file(path_b);
    if (!a.pure || !b.pure) throw Error(Errc::parse_error, "ortho: both inputs must be {\"amplitudes\": ...} files");
    const double overlap = std::abs(inner(a.pure->amp, b.pure->amp));
    const bool by_inner = overlap < 1e-10;
    const bool by_rk = orthogonal(*a.pure, *b.pure);
    const auto res = orthogonality_residuals(*a.pure, *b.pure);
    auto verdict = [](bool o) { return o ? "orthogonal" : "not orthogonal"; };
    using qutrit::detail::fmt;
    out << "|<a|b>|                " << fmt(overlap) << '\n'
        << "inner-product verdict  " << verdict(by_inner) << '\n'
        << "r/k verdict            " << verdict(by_rk) << '\n'
        << "r.r' + k.k'            " << fmt(res[0]) << '\n'
        << "r.k' - r'.k            " << fmt(res[1]) << '\n'
        << "bloch a . a'           " << fmt(dot(bloch_from_pure(*a.pure), bloch_from_pure(*b.pure))) << '\n';
    if (by_inner != by_rk) {
        out << "verdicts disagree\n";
        return kInconsistent;
    }
    return kOk;
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("QUTRIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(Errc::invalid_argument, "QUTRIT_SEED is not an unsigned integer");
        }
    }
    return 42;
}

inline int cmd_random(int rank, std::uint64_t seed, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
    Rng rng(seed);
    const auto rho = random_state(rng, rank);
    const auto achieved = classify_rank(rho).rank;
    emit(out_path, io::dump(io::density_to_json(rho)), out);
    (out_path.empty() ? err : out) << "achieved rank " << achieved << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------------------------

inline const char* kFooter =
    "Exit codes: 0 ok, 1 I/O or parse error, 2 invalid state, 3 internal inconsistency.\n"
    "Evolution uses U = exp(-i theta G). Numbers accept fractions and pi multiples (2/3, pi/2, 2pi).\n"
    "State files: {\"re\": 3x3, \"im\": 3x3} or {\"amplitudes\": [[re, im] x 3]}.";

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qutrit states as a Bloch vector inside an ellipsoid", "qutrit"};
    app.footer(kFooter);
    app.require_subcommand(1);

    std::function<int()> action;

    std::string path;
    bool as_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Parameters, positivity, rank and scene case of a state");
    analyze_cmd->add_option("path", path, "state file")->required();
    analyze_cmd->add_flag("--json", as_json, "print the report as JSON");
    analyze_cmd->callback([&] { action = [&] { return cmd_analyze(path, as_json, out); }; });

    SceneArgs scene;
    auto* scene_cmd = app.add_subcommand("scene", "Export the ellipsoid scene of a state");
    scene_cmd->add_option("path", scene.path, "state file")->required();
    scene_cmd->add_option("--format", scene.format, "json or obj")->check(CLI::IsMember({"json", "obj"}));
    scene_cmd->add_option("--lat", scene.lat, "OBJ latitude rings (>= 4)");
    scene_cmd->add_option("--lon", scene.lon, "OBJ vertices per ring (>= 8)");
    scene_cmd->add_flag("--surface-only", scene.surface_only, "OBJ: ellipsoid surface only");
    scene_cmd->add_option("--out", scene.out_path, "output file (default stdout)");
    scene_cmd->callback([&] { action = [&] { return cmd_scene(scene, out); }; });

    int basis = 1, vector = 1;
    auto* mub_cmd = app.add_subcommand("mub", "One of the twelve mutually unbiased basis states");
    mub_cmd->add_option("--basis", basis, "1..4")->required();
    mub_cmd->add_option("--vector", vector, "1..3")->required();
    mub_cmd->add_flag("--json", as_json, "print JSON");
    mub_cmd->callback([&] { action = [&] { return cmd_mub(basis, vector, as_json, out); }; });

    std::vector<std::string> components;
    std::string ax = "0", ay = "0", az = "0";
    auto* pseudo_cmd = app.add_subcommand("pseudo", "Pseudo-qubit state with T = 1/3 and Bloch vector a");
    pseudo_cmd->add_option("components", components, "ax ay az (alternative to the flags)")->expected(3);
    pseudo_cmd->add_option("--ax", ax);
    pseudo_cmd->add_option("--ay", ay);
    pseudo_cmd->add_option("--az", az);
    pseudo_cmd->add_flag("--json", as_json, "print JSON");
    pseudo_cmd->callback([&] {
        action = [&] {
            if (!components.empty()) {
                ax = components[0];
                ay = components[1];
                az = components[2];
            }
            return cmd_pseudo({parse_real(ax), parse_real(ay), parse_real(az)}, as_json, out);
        };
    });

    EvolveArgs evolve;
    auto* evolve_cmd = app.add_subcommand("evolve", "Unitary trajectory under a spin-1 generator");
    evolve_cmd->add_option("path", evolve.path, "state file")->required();
    evolve_cmd->add_option("--generator", evolve.generator, "rot:x|y|z, twist:x|y|z, counter:x|y|z, custom:<file>")
        ->required();
    evolve_cmd->add_option("--theta", evolve.theta, "final angle (radians)");
    evolve_cmd->add_option("--steps", evolve.steps, "number of grid points (>= 2)");
    evolve_cmd->add_flag("--scenes", evolve.scenes, "attach a scene to every point");
    evolve_cmd->add_option("--out", evolve.out_path, "output file (default stdout)");
    evolve_cmd->callback([&] { action = [&] { return cmd_evolve(evolve, out); }; });

    std::string direction, bridge_out;
    auto* bridge_cmd = app.add_subcommand("bridge", "Convert between a qutrit and a symmetric two-qubit state");
    bridge_cmd->add_option("path", path, "input file")->required();
    bridge_cmd->add_option("--direction", direction, "to2q or from2q")
        ->required()
        ->check(CLI::IsMember({"to2q", "from2q"}));
    bridge_cmd->add_option("--out", bridge_out, "output file (default stdout)");
    bridge_cmd->callback([&] { action = [&] { return cmd_bridge(path, direction, bridge_out, out); }; });

    std::string path_b;
    auto* ortho_cmd = app.add_subcommand("ortho", "Orthogonality of two pure states, two ways");
    ortho_cmd->add_option("a", path, "first pure state file")->required();
    ortho_cmd->add_option("b", path_b, "second pure state file")->required();
    ortho_cmd->callback([&] { action = [&] { return cmd_ortho(path, path_b, out); }; });

    int rank = 3;
    std::optional<std::uint64_t> seed;
    std::string random_out;
    auto* random_cmd = app.add_subcommand("random", "Seeded random state of a given rank");
    random_cmd->add_option("--rank", rank, "1, 2 or 3")->check(CLI::Range(1, 3));
    random_cmd->add_option("--seed", seed, "RNG seed (default: $QUTRIT_SEED or 42)");
    random_cmd->add_option("--out", random_out, "output file (default stdout)");
    random_cmd->callback([&] {
        action = [&] { return cmd_random(rank, seed ? *seed : default_seed(), random_out, out, err); };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kIoOrParse;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInconsistent;
    }
}

}  // namespace qutrit::cli
