#include "kitlab/cell_complex.hpp"
#include "kitlab/dual.hpp"
#include "kitlab/io.hpp"
#include "kitlab/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace kitlab;

TEST_CASE("torus builder counts and validation", "[cell_complex]") {
    CellComplex t2 = build_torus(2);
    CHECK(t2.num_vertices == 4);
    CHECK(t2.num_edges() == 8);
    CHECK(t2.num_faces() == 4);
    CHECK(t2.euler_characteristic() == 0);
    CHECK(t2.genus() == 1);
    CHECK(validate(t2).empty());

    CellComplex t3 = build_torus(3);
    CHECK(t3.num_vertices == 9);
    CHECK(t3.num_edges() == 18);
    CHECK(t3.num_faces() == 9);
    CHECK(t3.euler_characteristic() == 0);
    CHECK(validate(t3).empty());

    CHECK(validate(build_torus(5, 3)).empty());
}

TEST_CASE("torus builder rejects degenerate sizes", "[cell_complex]") {
    CHECK_THROWS_AS(build_torus(1), std::invalid_argument);
    CHECK_THROWS_AS(build_torus(0), std::invalid_argument);
    CHECK_THROWS_AS(build_torus(3, 1), std::invalid_argument);
}

TEST_CASE("cube builder is a genus-0 decomposition", "[cell_complex]") {
    CellComplex cube = build_sphere_cube();
    CHECK(cube.num_vertices == 8);
    CHECK(cube.num_edges() == 12);
    CHECK(cube.num_faces() == 6);
    CHECK(cube.euler_characteristic() == 2);
    CHECK(cube.genus() == 0);
    CHECK(validate(cube).empty());
}

TEST_CASE("genus-2 builder glues two tori", "[cell_complex]") {
    CellComplex g2 = build_genus2(3);
    CHECK(g2.num_vertices == 14);
    CHECK(g2.num_edges() == 32);
    CHECK(g2.num_faces() == 16);
    CHECK(g2.euler_characteristic() == -2);
    CHECK(g2.genus() == 2);
    CHECK(validate(g2).empty());
}

TEST_CASE("validation reports specific violations", "[cell_complex]") {
    SECTION("self-loop edge") {
        CellComplex c;
        c.num_vertices = 2;
        c.edges = {{0, 0}, {0, 1}};
        c.faces.resize(1);
        c.faces[0].edges = {{1, 1}, {1, -1}};
        c.finalize();
        auto issues = validate(c);
        REQUIRE_FALSE(issues.empty());
        bool found = false;
        for (auto& s : issues)
            if (s.find("self-loop") != std::string::npos) found = true;
        CHECK(found);
    }
    SECTION("edge contained in a single face") {
        CellComplex c = build_torus(2);
        c.faces.pop_back();
        c.finalize();
        auto issues = validate(c);
        bool found = false;
        for (auto& s : issues)
            if (s.find("face-count") != std::string::npos) found = true;
        CHECK(found);
    }
    SECTION("sign mismatch") {
        CellComplex c = build_torus(2);
        c.faces[0].edges[0].second *= -1;
        c.finalize();
        auto issues = validate(c);
        CHECK_FALSE(issues.empty());
    }
}

TEST_CASE("dual of the torus", "[dual]") {
    CellComplex t2 = build_torus(2);
    DualComplex dual = dualize(t2);
    CHECK(dual.complex.num_vertices == 4);
    CHECK(dual.complex.num_edges() == 8);
    CHECK(dual.complex.num_faces() == 4);
    CHECK(validate(dual.complex).empty());

    // crossing convention: dual of h(i,j) runs from the face below to the face
    // above, dual of u(i,j) from the face to its right to the face to its left
    CellComplex t3 = build_torus(3);
    TorusGeometry g(3);
    DualComplex d3 = dualize(t3);
    CHECK(d3.complex.edges[g.hedge(1, 1)].tail == g.face(0, 1));
    CHECK(d3.complex.edges[g.hedge(1, 1)].head == g.face(1, 1));
    CHECK(d3.complex.edges[g.uedge(1, 1)].tail == g.face(1, 1));
    CHECK(d3.complex.edges[g.uedge(1, 1)].head == g.face(1, 0));
}

TEST_CASE("dual of the cube is the octahedron", "[dual]") {
    DualComplex dual = dualize(build_sphere_cube());
    CHECK(dual.complex.num_vertices == 6);
    CHECK(dual.complex.num_edges() == 12);
    CHECK(dual.complex.num_faces() == 8);
    CHECK(validate(dual.complex).empty());
    // every octahedron face is a triangle
    for (const auto& f : dual.complex.faces) CHECK(f.edges.size() == 3);
}

TEST_CASE("dualizing twice reproduces the complex", "[dual]") {
    for (const CellComplex& c :
         {build_torus(2), build_torus(3), build_sphere_cube(), build_genus2()}) {
        CellComplex dd = dualize(dualize(c).complex).complex;
        // identical ids, edges with orientation, and face traversals up to the
        // starting point of the cycle
        CHECK(same_incidence(dd, c));
    }
}

TEST_CASE("complex file round trip", "[io]") {
    for (const CellComplex& c : {build_torus(2, 3), build_sphere_cube(5), build_genus2(2),
                                 dualize(build_torus(3)).complex}) {
        std::string text = save_complex(c);
        CellComplex back = load_complex(text);
        CHECK(back == c);
        CHECK(back.default_modulus == c.default_modulus);
        CHECK(back.declared_genus.value() == c.genus());
    }
}

TEST_CASE("loader diagnoses malformed input", "[io]") {
    CHECK_THROWS_AS(load_complex("v 0\n"), ParseError);

    try {
        load_complex("complex d=2\nv 0\nv 1\ne 0 0 1\nf 0 +0 bogus\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        CHECK(e.column > 1);
    }

    // structurally fine, topologically wrong: validation error, not parse error
    CHECK_THROWS_AS(load_complex("complex d=2\nv 0\nv 1\ne 0 0 1\nf 0 +0\n"),
                    ValidationError);
}

TEST_CASE("hand-written torus file loads and validates", "[io]") {
    std::string text = save_complex(build_torus(2));
    CellComplex c = load_complex(text);
    CHECK(validate(c).empty());
    CHECK(c.genus() == 1);
}

TEST_CASE("region interior and boundary", "[region]") {
    CellComplex t3 = build_torus(3);
    TorusGeometry g(3);

    SECTION("star of a vertex has it interior") {
        Region star;
        for (int e : t3.vertex_edges[g.vertex(1, 1)]) star.edges.insert(e);
        auto interior = interior_vertices(t3, star);
        auto bdry = boundary_vertices(t3, star);
        CHECK(interior == std::set<int>{g.vertex(1, 1)});
        CHECK(bdry.size() == 4);
    }

    SECTION("interior, complement interior and boundary partition the vertices") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            Region r;
            for (int e = 0; e < t3.num_edges(); ++e)
                if (rng() % 2) r.edges.insert(e);
            Region rc = region_complement(t3, r);
            auto a = interior_vertices(t3, r);
            auto b = interior_vertices(t3, rc);
            auto s = boundary_vertices(t3, r);
            CHECK(a.size() + b.size() + s.size() ==
                  static_cast<size_t>(t3.num_vertices));
            for (int v : a) {
                CHECK_FALSE(b.count(v));
                CHECK_FALSE(s.count(v));
            }
            for (int v : b) CHECK_FALSE(s.count(v));
            CHECK(boundary_vertices(t3, rc) == s);
        }
    }

    SECTION("empty and full regions") {
        Region empty;
        CHECK(interior_vertices(t3, empty).empty());
        CHECK(boundary_vertices(t3, empty).empty());
        Region full;
        for (int e = 0; e < t3.num_edges(); ++e) full.edges.insert(e);
        CHECK(interior_vertices(t3, full).size() == static_cast<size_t>(t3.num_vertices));
        CHECK(boundary_vertices(t3, full).empty());
    }
}

TEST_CASE("region file round trip", "[io][region]") {
    CellComplex t2 = build_torus(2);
    Region r;
    r.edges = {0, 3, 5};
    Region back = load_region(save_region(r), t2);
    CHECK(back.edges == r.edges);
    CHECK_THROWS_AS(load_region("region 99\n", t2), ParseError);
    CHECK_THROWS_AS(load_region("wibble\n", t2), ParseError);
}
