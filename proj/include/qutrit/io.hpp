#pragma once

// JSON formats. Objects use nlohmann's default (sorted) key order and doubles are written as
// shortest round-trip decimals, so dump() output is canonical and parses back bit-exactly.
//
//   density     {"re": [[3 x 3]], "im": [[3 x 3]]}
//   pure state  {"amplitudes": [[re, im], [re, im], [re, im]]}
//   two qubits  {"re": [[4 x 4]], "im": [[4 x 4]]}
//   scene       {"version": 1, "case": ..., "semi_axes": [3], "frame": [[3 x 3]], "bloch": [3],
//                "rays": [{"dir": [3], "style": "solid|dashed", "label": "u|v|w"}]}
//   trajectory  [{"theta": f, "state": density, "scene": scene?}, ...]

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "qutrit/dynamics.hpp"
#include "qutrit/geometry.hpp"
#include "qutrit/purestates.hpp"
#include "qutrit/spin1.hpp"

namespace qutrit::io {

using nlohmann::json;

inline constexpr int kSceneVersion = 1;

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
    throw Error(Errc::parse_error, where + ": " + what);
}

inline double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) parse_fail(where, "expected a number");
    return j.get<double>();
}

inline std::string string_at(const json& j, const std::string& where) {
    if (!j.is_string()) parse_fail(where, "expected a string");
    return j.get<std::string>();
}

inline const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) parse_fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

template <std::size_t N>
Vector<double, N> vector_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != N) parse_fail(where, "expected an array of " + std::to_string(N) + " numbers");
    Vector<double, N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = number_at(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

template <std::size_t N>
Matrix<double, N> real_matrix_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != N) parse_fail(where, "expected " + std::to_string(N) + " rows");
    Matrix<double, N> m;
    for (std::size_t r = 0; r < N; ++r) {
        const std::string row = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != N) parse_fail(row, "expected " + std::to_string(N) + " columns");
        for (std::size_t c = 0; c < N; ++c) m(r, c) = number_at(j[r][c], row + "[" + std::to_string(c) + "]");
    }
    return m;
}

template <std::size_t N>
json to_json(const Vector<double, N>& v) {
    json out = json::array();
    for (double x : v) out.push_back(x);
    return out;
}

template <std::size_t N>
json to_json(const Matrix<double, N>& m) {
    json out = json::array();
    for (std::size_t r = 0; r < N; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < N; ++c) row.push_back(m(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

template <std::size_t N>
json complex_matrix_to_json(const Matrix<Complex, N>& m) {
    Matrix<double, N> re, im;
    for (std::size_t i = 0; i < N * N; ++i) {
        re.data[i] = m.data[i].real();
        im.data[i] = m.data[i].imag();
    }
    return {{"re", to_json(re)}, {"im", to_json(im)}};
}

template <std::size_t N>
Matrix<Complex, N> complex_matrix_from(const json& j, const std::string& where) {
    const auto re = real_matrix_from<N>(member(j, "re", where), where + ".re");
    const auto im = real_matrix_from<N>(member(j, "im", where), where + ".im");
    Matrix<Complex, N> m;
    for (std::size_t i = 0; i < N * N; ++i) m.data[i] = Complex(re.data[i], im.data[i]);
    return m;
}

inline json parse_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(where, e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io, path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(Errc::io, path + ": cannot write");
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------------------------
// State files

inline json density_to_json(const QutritDensity& rho) { return complex_matrix_to_json(rho.matrix()); }

inline json pure_to_json(const CVec3& amp) {
    json arr = json::array();
    for (const auto& x : amp) arr.push_back({x.real(), x.imag()});
    return {{"amplitudes", arr}};
}

inline CVec3 amplitudes_from(const json& j, const std::string& where) {
    const auto& arr = member(j, "amplitudes", where);
    if (!arr.is_array() || arr.size() != 3) parse_fail(where + ".amplitudes", "expected 3 [re, im] pairs");
    CVec3 amp;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto w = where + ".amplitudes[" + std::to_string(i) + "]";
        const auto pair = vector_from<2>(arr[i], w);
        amp[i] = Complex(pair[0], pair[1]);
    }
    return amp;
}

/// A parsed state file: always a density; the pure form is kept when that is what the file held.
struct StateFile {
    QutritDensity rho;
    std::optional<PureState> pure;
};

inline StateFile state_from_json(const json& j, const std::string& where = "state") {
    if (!j.is_object()) parse_fail(where, "expected an object");
    if (j.contains("amplitudes")) {
        const auto p = rik_decompose(amplitudes_from(j, where));
        return {p.density(), p};
    }
    return {QutritDensity(complex_matrix_from<3>(j, where)), std::nullopt};
}

inline StateFile load_state_file(const std::string& path) {
    return state_from_json(parse_text(read_file(path), path), path);
}

inline json two_qubit_to_json(const TwoQubitDensity& rho) { return complex_matrix_to_json(rho.mat); }

inline TwoQubitDensity two_qubit_from_json(const json& j, const std::string& where = "two_qubit") {
    return {complex_matrix_from<4>(j, where)};
}

// ---------------------------------------------------------------------------------------------
// Scenes

inline SceneCase scene_case_from(const std::string& s, const std::string& where) {
    if (s == "three_d") return SceneCase::three_d;
    if (s == "segment") return SceneCase::segment;
    if (s == "point") return SceneCase::point;
    parse_fail(where, "unknown case \"" + s + "\"");
}

inline json scene_to_json(const EllipsoidScene& s) {
    json rays = json::array();
    for (const auto& r : s.rays)
        rays.push_back({{"dir", to_json(r.direction)},
                        {"style", std::string(to_string(r.style))},
                        {"label", std::string(to_string(r.label))}});
    return {{"version", kSceneVersion},
            {"case", std::string(to_string(s.scene_case))},
            {"semi_axes", to_json(s.semi_axes)},
            {"frame", to_json(s.frame)},
            {"bloch", to_json(s.bloch)},
            {"rays", rays}};
}

inline EllipsoidScene scene_from_json(const json& j, const std::string& where = "scene") {
    const auto& version = member(j, "version", where);
    if (!version.is_number_integer() || version.get<int>() != kSceneVersion)
        parse_fail(where + ".version", "unsupported scene version");
    EllipsoidScene s;
    s.scene_case = scene_case_from(string_at(member(j, "case", where), where + ".case"), where + ".case");
    s.semi_axes = vector_from<3>(member(j, "semi_axes", where), where + ".semi_axes");
    s.frame = real_matrix_from<3>(member(j, "frame", where), where + ".frame");
    s.bloch = vector_from<3>(member(j, "bloch", where), where + ".bloch");
    const auto& rays = member(j, "rays", where);
    if (!rays.is_array()) parse_fail(where + ".rays", "expected an array");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto w = where + ".rays[" + std::to_string(i) + "]";
        Ray r;
        r.direction = vector_from<3>(member(rays[i], "dir", w), w + ".dir");
        const auto style = string_at(member(rays[i], "style", w), w + ".style");
        if (style != "solid" && style != "dashed") parse_fail(w + ".style", "expected solid or dashed");
        r.style = style == "solid" ? RayStyle::solid : RayStyle::dashed;
        const auto label = string_at(member(rays[i], "label", w), w + ".label");
        if (label == "u") r.label = AxisLabel::u;
        else if (label == "v") r.label = AxisLabel::v;
        else if (label == "w") r.label = AxisLabel::w;
        else parse_fail(w + ".label", "expected u, v or w");
        s.rays.push_back(r);
    }
    return s;
}

inline std::string export_scene_json(const EllipsoidScene& s) { return dump(scene_to_json(s)); }

inline EllipsoidScene parse_scene_json(const std::string& text) { return scene_from_json(parse_text(text, "scene")); }

// ---------------------------------------------------------------------------------------------
// Trajectories

inline json trajectory_to_json(const Trajectory& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        json rec = {{"theta", t.thetas[i]}, {"state", density_to_json(t.states[i])}};
        if (i < t.scenes.size()) rec["scene"] = scene_to_json(t.scenes[i]);
        out.push_back(std::move(rec));
    }
    return out;
}

inline Trajectory trajectory_from_json(const json& j) {
    if (!j.is_array()) parse_fail("trajectory", "expected an array");
    Trajectory t;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto w = "trajectory[" + std::to_string(i) + "]";
        t.thetas.push_back(number_at(member(j[i], "theta", w), w + ".theta"));
        t.states.push_back(QutritDensity(complex_matrix_from<3>(member(j[i], "state", w), w + ".state")));
        if (j[i].contains("scene")) t.scenes.push_back(scene_from_json(j[i]["scene"], w + ".scene"));
    }
    return t;
}

}  // namespace qutrit::io
