#pragma once

// The three-dimensional picture of a qutrit: an ellipsoid with semi-axes eps_j along the
// eigenvectors of T, the Bloch vector inside it, and marker rays for the directions a
// collapsed ellipsoid no longer shows.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qutrit/state.hpp"

namespace qutrit {

enum class SceneCase { three_d, segment, point };
enum class RayStyle { solid, dashed };
enum class AxisLabel { u, v, w };

inline std::string_view to_string(SceneCase c) {
    switch (c) {
        case SceneCase::three_d: return "three_d";
        case SceneCase::segment: return "segment";
        case SceneCase::point: return "point";
    }
    return "unknown";
}
inline std::string_view to_string(RayStyle s) { return s == RayStyle::solid ? "solid" : "dashed"; }
inline std::string_view to_string(AxisLabel l) { return l == AxisLabel::u ? "u" : (l == AxisLabel::v ? "v" : "w"); }

struct Ray {
    Vec3 direction;  // unit length
    RayStyle style = RayStyle::solid;
    AxisLabel label = AxisLabel::u;

    friend bool operator==(const Ray&, const Ray&) = default;
};

struct EllipsoidScene {
    Vec3 semi_axes;  // eps_u >= eps_v >= eps_w
    RealMat3 frame;  // columns: eigenvectors of T for lambda_u, lambda_v, lambda_w
    Vec3 bloch;      // lab frame
    std::vector<Ray> rays;
    SceneCase scene_case = SceneCase::three_d;

    friend bool operator==(const EllipsoidScene&, const EllipsoidScene&) = default;
};

inline SceneCase scene_case_for(RankCase c) {
    switch (c) {
        case RankCase::full_3d:
        case RankCase::surface_3d: return SceneCase::three_d;
        case RankCase::segment_interior:
        case RankCase::segment_endpoint: return SceneCase::segment;
        case RankCase::point: return SceneCase::point;
    }
    return SceneCase::three_d;
}

inline EllipsoidScene build_scene(const QutritDensity& rho) {
    const auto params = decompose(rho);
    if (const auto v = validate(params); !v.overall) throw Error(Errc::invalid_state, "build_scene: " + v.violation);

    const auto spec = correlation_spectrum(params.T);
    EllipsoidScene s;
    s.semi_axes = semi_axes_from_spectrum(spec.values);
    for (double& e : s.semi_axes) e = std::min(e, 1.0);
    s.frame = spec.vectors;
    s.bloch = params.a;

    int axes = 0;
    for (double e : s.semi_axes) axes += e > Tolerances::axis ? 1 : 0;
    const SceneCase by_axes = axes == 3 ? SceneCase::three_d : (axes == 1 ? SceneCase::segment : SceneCase::point);
    // the rank verdict wins when the two disagree near a tolerance edge
    const SceneCase by_rank = scene_case_for(classify_rank(rho).rank_case);
    s.scene_case = by_axes == by_rank ? by_axes : by_rank;

    const Vec3 u = s.frame.column(0);
    switch (s.scene_case) {
        case SceneCase::three_d: break;
        case SceneCase::segment: {
            const Vec3 off_axis = s.bloch - u * dot(u, s.bloch);
            if (norm(off_axis) > 1e-8)
                throw Error(Errc::internal, "build_scene: Bloch vector leaves the segment by " + std::to_string(norm(off_axis)));
            s.rays.push_back({s.frame.column(1), RayStyle::solid, AxisLabel::v});
            s.rays.push_back({s.frame.column(2), RayStyle::dashed, AxisLabel::w});
            break;
        }
        case SceneCase::point: {
            if (norm(s.bloch) > 1e-8)
                throw Error(Errc::internal, "build_scene: nonzero Bloch vector on a point ellipsoid");
            s.rays.push_back({u, RayStyle::solid, AxisLabel::u});
            s.rays.push_back({s.frame.column(1), RayStyle::solid, AxisLabel::v});
            s.rays.push_back({s.frame.column(2), RayStyle::dashed, AxisLabel::w});
            break;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------------------------
// Wavefront OBJ

struct ObjOptions {
    int lat = 16;  // interior latitude rings
    int lon = 32;  // vertices per ring
    bool surface_only = false;
};

namespace detail {

inline void obj_vertex(std::ostringstream& out, const Vec3& p) {
    out << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
}

}  // namespace detail

/// Vertices are lab-frame coordinates (right-handed; viewers treat y as up).
/// Objects: "ellipsoid" (three_d only), "segment", "bloch", "ray_<label>_<style>".
inline std::string export_scene_obj(const EllipsoidScene& s, const ObjOptions& opt = {}) {
    if (opt.lat < 4 || opt.lon < 8)
        throw Error(Errc::invalid_argument, "export_scene_obj: need lat >= 4 and lon >= 8");
    if (opt.surface_only && s.scene_case != SceneCase::three_d)
        throw Error(Errc::degenerate_mesh, std::string("export_scene_obj: no surface for case ") +
                                               std::string(to_string(s.scene_case)));

    std::ostringstream out;
    out << "# qutrit ellipsoid scene\n"
        << "# case " << to_string(s.scene_case) << '\n'
        << "# axis_tol " << Tolerances::axis << " rank_tol " << Tolerances::rank << '\n'
        << "# lab frame, right-handed, y up\n";
    out.precision(17);

    // unit-sphere (x, y, z) goes to (v, w, u): the poles sit on the longest axis
    auto local_to_lab = [&](double x, double y, double z) {
        return s.frame.column(1) * (s.semi_axes[1] * x) + s.frame.column(2) * (s.semi_axes[2] * y) +
               s.frame.column(0) * (s.semi_axes[0] * z);
    };

    int next = 1;  // OBJ indices are 1-based
    if (s.scene_case == SceneCase::three_d) {
        out << "o ellipsoid\n";
        const int lat = opt.lat;
        const int lon = opt.lon;
        const int north = next;
        detail::obj_vertex(out, local_to_lab(0.0, 0.0, 1.0));
        for (int i = 1; i <= lat; ++i) {
            const double polar = std::numbers::pi * i / (lat + 1);
            for (int j = 0; j < lon; ++j) {
                const double az = 2.0 * std::numbers::pi * j / lon;
                detail::obj_vertex(out, local_to_lab(std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az),
                                                     std::cos(polar)));
            }
        }
        const int south = north + 1 + lat * lon;
        detail::obj_vertex(out, local_to_lab(0.0, 0.0, -1.0));
        auto ring = [&](int i, int j) { return north + 1 + (i - 1) * lon + (j % lon); };
        // counter-clockwise seen from outside; a reflected frame reverses the order
        const bool reflected = det3(s.frame) < 0.0;
        auto face = [&](std::initializer_list<int> idx) {
            std::vector<int> v(idx);
            if (reflected) std::reverse(v.begin(), v.end());
            out << 'f';
            for (int k : v) out << ' ' << k;
            out << '\n';
        };
        for (int j = 0; j < lon; ++j) face({north, ring(1, j), ring(1, j + 1)});
        for (int i = 1; i < lat; ++i)
            for (int j = 0; j < lon; ++j) face({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1), ring(i, j + 1)});
        for (int j = 0; j < lon; ++j) face({ring(lat, j), south, ring(lat, j + 1)});
        next = south + 1;
    }
    if (opt.surface_only) return out.str();

    auto line = [&](const char* name, const Vec3& from, const Vec3& to) {
        out << "o " << name << '\n';
        detail::obj_vertex(out, from);
        detail::obj_vertex(out, to);
        out << "l " << next << ' ' << next + 1 << '\n';
        next += 2;
    };

    if (s.scene_case == SceneCase::segment) {
        const Vec3 half = s.frame.column(0) * s.semi_axes[0];
        line("segment", -half, half);
    }
    out << "# bloch vector\n";
    line("bloch", Vec3{}, s.bloch);
    for (const auto& r : s.rays) {
        const std::string name = "ray_" + std::string(to_string(r.label)) + "_" + std::string(to_string(r.style));
        line(name.c_str(), Vec3{}, r.direction);
    }
    return out.str();
}

}  // namespace qutrit
