#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace qutrit;

namespace {

struct ObjMesh {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;
    std::vector<std::pair<int, int>> lines;
    std::vector<std::string> objects;
    std::vector<int> object_vertex_counts;
};

ObjMesh parse_obj(const std::string& text) {
    ObjMesh m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            Vec3 v;
            ls >> v[0] >> v[1] >> v[2];
            m.vertices.push_back(v);
            if (!m.object_vertex_counts.empty()) ++m.object_vertex_counts.back();
        } else if (tag == "f") {
            std::vector<int> f;
            int i;
            while (ls >> i) f.push_back(i);
            m.faces.push_back(f);
        } else if (tag == "l") {
            int a, b;
            ls >> a >> b;
            m.lines.emplace_back(a, b);
        } else if (tag == "o") {
            std::string name;
            ls >> name;
            m.objects.push_back(name);
            m.object_vertex_counts.push_back(0);
        }
    }
    return m;
}

EllipsoidScene sphere_scene(double r) {
    EllipsoidScene s;
    s.semi_axes = {r, r, r};
    s.frame = RealMat3::identity();
    return s;
}

QutritDensity complex_pure(double th) { return QutritDensity::projector({std::cos(th), Complex(0.0, std::sin(th)), 0.0}); }

}  // namespace

TEST(BuildScene, MaximallyMixedIsSphere) {
    const auto s = build_scene(QutritDensity::maximally_mixed());
    EXPECT_EQ(s.scene_case, SceneCase::three_d);
    for (double e : s.semi_axes) EXPECT_NEAR(e, 2.0 / 3.0, 1e-15);
    EXPECT_EQ(s.bloch, (Vec3{0, 0, 0}));
    EXPECT_TRUE(s.rays.empty());
}

TEST(BuildScene, RealPureStateIsPointWithDashedRayAlongR) {
    const Vec3 r{1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
    const auto rho = QutritDensity::projector({r[0], r[1], r[2]});
    const auto s = build_scene(rho);
    EXPECT_EQ(s.scene_case, SceneCase::point);
    ASSERT_EQ(s.rays.size(), 3u);
    EXPECT_EQ(s.rays[0].style, RayStyle::solid);
    EXPECT_EQ(s.rays[1].style, RayStyle::solid);
    EXPECT_EQ(s.rays[2].style, RayStyle::dashed);
    EXPECT_EQ(s.rays[2].label, AxisLabel::w);
    // oracle: r is the eigenvector of T = 1 - 2 r r^T with eigenvalue -1
    const RealMat3 t = oracle::correlation_matrix(rho.matrix());
    EXPECT_LT(norm(t * r + r), 1e-15);
    EXPECT_NEAR(std::abs(dot(s.rays[2].direction, r)), 1.0, 1e-12);
}

TEST(BuildScene, ComplexPureStateIsSegmentAlongZ) {
    const auto s = build_scene(complex_pure(std::numbers::pi / 6));
    EXPECT_EQ(s.scene_case, SceneCase::segment);
    EXPECT_NEAR(s.semi_axes[0], std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_EQ(s.semi_axes[1], 0.0);
    EXPECT_EQ(s.semi_axes[2], 0.0);
    EXPECT_NEAR(std::abs(s.frame(2, 0)), 1.0, 1e-15);
    EXPECT_NEAR(s.bloch[2], std::sqrt(3.0) / 2.0, 1e-15);
    ASSERT_EQ(s.rays.size(), 2u);
    EXPECT_EQ(s.rays[0].label, AxisLabel::v);
    EXPECT_EQ(s.rays[0].style, RayStyle::solid);
    EXPECT_EQ(s.rays[1].label, AxisLabel::w);
    EXPECT_EQ(s.rays[1].style, RayStyle::dashed);
}

TEST(BuildScene, RejectsInvalidState) {
    ComplexMat3 m;
    m(0, 0) = 1.2;
    m(1, 1) = -0.1;
    m(2, 2) = -0.1;
    try {
        build_scene(QutritDensity(m));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_state);
    }
}

TEST(BuildScene, Invariants) {
    Rng rng(41);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto rho = random_valid_state(rng);
        const auto s = build_scene(rho);
        const auto lambda = correlation_spectrum(decompose(rho).T).values;
        for (std::size_t j = 0; j < 3; ++j) {
            ASSERT_LE(s.semi_axes[j], 1.0);
            ASSERT_LE(s.semi_axes[j], std::sqrt(std::max(0.0, 1.0 - lambda[2] * lambda[2])) + 1e-9);
            ASSERT_GE(s.semi_axes[j], std::abs(dot(s.bloch, s.frame.column(j))) - 1e-9);
        }
        ASSERT_LT(max_abs(transpose(s.frame) * s.frame - RealMat3::identity()), 1e-12);
        const std::size_t rays = s.scene_case == SceneCase::three_d ? 0 : (s.scene_case == SceneCase::segment ? 2 : 3);
        ASSERT_EQ(s.rays.size(), rays);
        ASSERT_EQ(s.scene_case, scene_case_for(classify_rank(rho).rank_case));
    }
}

TEST(SceneJson, SphereCase) {
    const auto text = io::export_scene_json(build_scene(QutritDensity::maximally_mixed()));
    EXPECT_NE(text.find("\"case\": \"three_d\""), std::string::npos);
    const auto j = io::json::parse(text);
    EXPECT_EQ(j["version"], 1);
    EXPECT_NEAR(j["semi_axes"][0].get<double>(), 2.0 / 3.0, 1e-15);
    EXPECT_TRUE(j["rays"].empty());
}

TEST(SceneJson, PointCaseRays) {
    const auto j = io::json::parse(io::export_scene_json(build_scene(QutritDensity::projector({1.0, 0.0, 0.0}))));
    ASSERT_EQ(j["rays"].size(), 3u);
    EXPECT_EQ(j["rays"][0]["style"], "solid");
    EXPECT_EQ(j["rays"][1]["style"], "solid");
    EXPECT_EQ(j["rays"][2]["style"], "dashed");
}

TEST(SceneJson, SegmentCaseRays) {
    const auto j = io::json::parse(io::export_scene_json(build_scene(complex_pure(0.3))));
    EXPECT_EQ(j["case"], "segment");
    EXPECT_EQ(j["rays"].size(), 2u);
}

TEST(SceneJson, RoundTrip) {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = build_scene(random_valid_state(rng));
        const auto text = io::export_scene_json(s);
        ASSERT_EQ(io::parse_scene_json(text), s);
        ASSERT_EQ(io::export_scene_json(io::parse_scene_json(text)), text);
    }
}

TEST(SceneJson, RejectsWrongVersion) {
    auto j = io::scene_to_json(build_scene(QutritDensity::maximally_mixed()));
    j["version"] = 2;
    EXPECT_THROW(io::scene_from_json(j), Error);
}

TEST(Obj, VertexCountForUnitSphere) {
    const auto m = parse_obj(export_scene_obj(sphere_scene(1.0), {4, 8, true}));
    EXPECT_EQ(m.vertices.size(), 34u);
    EXPECT_EQ(m.faces.size(), 8u + 3u * 8u + 8u);
    const auto full = parse_obj(export_scene_obj(sphere_scene(1.0), {4, 8, false}));
    ASSERT_EQ(full.objects.front(), "ellipsoid");
    EXPECT_EQ(full.object_vertex_counts.front(), 34);
}

TEST(Obj, SphereVerticesHaveRadiusTwoThirds) {
    const auto m = parse_obj(export_scene_obj(build_scene(QutritDensity::maximally_mixed()), {16, 32, true}));
    ASSERT_EQ(m.vertices.size(), 16u * 32u + 2u);
    for (const auto& v : m.vertices) EXPECT_NEAR(norm(v), 2.0 / 3.0, 1e-12);
}

TEST(Obj, EllipsoidExtent) {
    EllipsoidScene s;
    s.semi_axes = {1.0, 0.5, 0.5};
    s.frame = RealMat3::identity();
    const auto m = parse_obj(export_scene_obj(s, {16, 32, true}));
    double lo = 10.0, hi = 0.0;
    for (const auto& v : m.vertices) {
        lo = std::min(lo, norm(v));
        hi = std::max(hi, norm(v));
    }
    EXPECT_NEAR(hi, 1.0, 1e-12);
    EXPECT_NEAR(lo, 0.5, 0.01);
}

TEST(Obj, FacesPointOutwardForAnyFrame) {
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = build_scene(random_state(rng, 3));
        const auto m = parse_obj(export_scene_obj(s, {6, 12, true}));
        for (const auto& f : m.faces) {
            const Vec3 a = m.vertices[f[0] - 1], b = m.vertices[f[1] - 1], c = m.vertices[f[2] - 1];
            const Vec3 n = cross(b - a, c - b);
            ASSERT_GT(dot(n, a + b + c), 0.0);
        }
    }
}

TEST(Obj, LinesForDegenerateCases) {
    const auto seg = parse_obj(export_scene_obj(build_scene(complex_pure(0.3))));
    EXPECT_TRUE(seg.faces.empty());
    EXPECT_EQ(seg.objects, (std::vector<std::string>{"segment", "bloch", "ray_v_solid", "ray_w_dashed"}));
    EXPECT_EQ(seg.lines.size(), 4u);
    const auto pt = parse_obj(export_scene_obj(build_scene(QutritDensity::projector({1.0, 0.0, 0.0}))));
    EXPECT_EQ(pt.objects, (std::vector<std::string>{"bloch", "ray_u_solid", "ray_v_solid", "ray_w_dashed"}));
}

TEST(Obj, Errors) {
    const auto seg = build_scene(complex_pure(0.3));
    try {
        export_scene_obj(seg, {16, 32, true});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degenerate_mesh);
    }
    try {
        export_scene_obj(sphere_scene(1.0), {3, 8, false});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_argument);
    }
}

TEST(Obj, Deterministic) {
    const auto s = build_scene(QutritDensity::maximally_mixed());
    EXPECT_EQ(export_scene_obj(s), export_scene_obj(s));
}
