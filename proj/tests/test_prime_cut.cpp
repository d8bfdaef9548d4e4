#include "doctest.h"
#include "support.hpp"

#include "toric_ic/error.hpp"
#include "toric_ic/ic_stalks.hpp"
#include "toric_ic/prime_cut.hpp"

using namespace toric;
using namespace fixtures;

namespace {

void check_face_map(const CutResult& r, const FaceLattice& original) {
    const auto& L = r.lattice;
    REQUIRE(r.face_map.size() == L.size());
    for (const auto& t : L.faces()) CHECK(original.face(r.face_map[t.id]).dim <= t.dim);
    // Closure: τ1 ≤ τ2 ⇒ π(τ1) ≤ π(τ2).
    for (const auto& a : L.faces())
        for (const auto& b : L.faces())
            if (L.leq(a.id, b.id)) CHECK(original.leq(r.face_map[a.id], r.face_map[b.id]));
    // Faces with simplicial dual cones keep exactly one same-dim preimage.
    for (const auto& s : original.faces()) {
        if (static_cast<int>(s.active_set.size()) != s.codim) continue;
        int same = 0;
        for (const auto& t : L.faces()) same += r.face_map[t.id] == s.id && t.dim == s.dim;
        CHECK(same == 1);
    }
}

}  // namespace

TEST_CASE("cut functionals") {
    Polytope c = cube(3);
    CHECK(choose_cut_functionals(c, FaceLattice(c)).cuts.empty());

    Polytope pyr = square_pyramid();
    FaceLattice P(pyr);
    auto spec = choose_cut_functionals(pyr, P);
    REQUIRE(spec.cuts.size() == 1);
    const auto& cut = spec.cuts.front();
    CHECK(P.face(cut.face).dim == 0);
    LatticeVector sum(3, Integer(0));
    for (int k : P.face(cut.face).active_set)
        for (int i = 0; i < 3; ++i) sum[i] += pyr.facets()[k].normal[i];
    CHECK(cut.normal == sum);
    CHECK(cut.base_value == pairing(rv({1, 1, 2}), cut.normal));
    CHECK(cut.order == 1);

    Polytope oct = octahedron();
    auto os = choose_cut_functionals(oct, FaceLattice(oct));
    CHECK(os.cuts.size() == 6);
}

TEST_CASE("square pyramid truncation") {
    Polytope pyr = square_pyramid();
    FaceLattice P(pyr);
    // Apex height is 2; ε a tenth of it along the cut normal scale.
    auto r = prime_cut(pyr, P, choose_cut_functionals(pyr, P), Rat(1, 5));
    CHECK(r.cut.vertices().size() == 8);
    CHECK(r.cut.facets().size() == 6);
    CHECK(is_prime(r.cut, r.lattice));
    CHECK(fan_refines(r.cut, r.lattice, pyr, P));
    const int apex = r.spec.cuts.front().face;
    int to_apex[3] = {0, 0, 0};
    for (const auto& t : r.lattice.faces())
        if (r.face_map[t.id] == apex) ++to_apex[t.dim];
    CHECK(to_apex[0] == 4);
    CHECK(to_apex[1] == 4);
    CHECK(to_apex[2] == 1);
    check_face_map(r, P);
    for (const auto& m : local_ic_polynomials(r.lattice)) CHECK(m == TatePoly(1));
}

TEST_CASE("octahedron truncation is simple") {
    Polytope oct = octahedron();
    FaceLattice O(oct);
    auto r = prime_cut(oct, O, choose_cut_functionals(oct, O), Rat(1, 2));
    CHECK(r.cut.vertices().size() == 24);
    CHECK(r.cut.facets().size() == 14);
    for (int v : r.lattice.faces_of_dim(0)) CHECK(r.lattice.face(v).active_set.size() == 3);
    CHECK(fan_refines(r.cut, r.lattice, oct, O));
    check_face_map(r, O);
}

TEST_CASE("already prime polytopes are returned unchanged") {
    Polytope c = cube(3);
    FaceLattice C(c);
    auto r = prime_cut(c, C, choose_cut_functionals(c, C), Rat(1, 3));
    CHECK(r.rounds == 0);
    CHECK(r.cut.vertices() == c.vertices());
    for (std::size_t i = 0; i < r.face_map.size(); ++i) CHECK(r.face_map[i] == static_cast<int>(i));
}

TEST_CASE("a coarse epsilon is halved until stable") {
    Polytope pyr = square_pyramid();
    FaceLattice P(pyr);
    auto r = prime_cut(pyr, P, choose_cut_functionals(pyr, P), Rat(40));
    CHECK(r.rounds > 1);
    CHECK(r.epsilon < 40);
    CHECK(is_prime(r.cut, r.lattice));
    CHECK_THROWS_AS(prime_cut(pyr, P, choose_cut_functionals(pyr, P), Rat(40), 1), Error);
    CHECK_THROWS_AS(prime_cut(pyr, P, choose_cut_functionals(pyr, P), Rat(0)), Error);
}

TEST_CASE("random polytopes cut to prime polytopes") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        Polytope p = random_lattice_polytope(rng, 2 + trial % 2, 10);
        FaceLattice L(p);
        auto r = prime_cut(p, L, choose_cut_functionals(p, L), Rat(1, 4));
        CHECK(is_prime(r.cut, r.lattice));
        CHECK(fan_refines(r.cut, r.lattice, p, L));
        check_face_map(r, L);
    }
}

TEST_CASE("vertex blow-ups") {
    SUBCASE("plane quadrant") {
        Polytope q = Polytope::from_vrep({2, {rv({0, 0})}, {lv({1, 0}), lv({0, 1})}});
        auto b = vertex_blowup(q, FaceLattice(q), lv({1, 1}), Rat(1));
        CHECK(b.section.ambient_dim() == 1);
        CHECK(b.section.vertices().size() == 2);
        CHECK(b.cut.vertices().size() == 2);
        CHECK(global_ih_class(b.section_lattice) == TatePoly(std::vector<Integer>{1, 1}));
    }
    SUBCASE("cone over a square") {
        Polytope c = kgon_cone(4);
        FaceLattice L(c);
        auto b = vertex_blowup(c, L, lv({0, 0, 1}), Rat(1));
        CHECK(b.section_lattice.f_vector() == std::vector<Integer>{4, 4, 1});
        CHECK(global_ih_class(b.section_lattice) == exceptional_divisor_class(L));
        const auto via_section = decomposition_summands(global_ih_class(b.section_lattice), 3);
        const auto via_cone = decomposition_summands(L);
        REQUIRE(via_section.size() == via_cone.size());
        for (std::size_t i = 0; i < via_cone.size(); ++i) {
            CHECK(via_section[i].degree == via_cone[i].degree);
            CHECK(via_section[i].rank == via_cone[i].rank);
        }
        for (const auto& t : b.section_lattice.faces())
            CHECK(L.face(b.section_to_cone[t.id]).dim == t.dim + 1);
    }
    SUBCASE("orthant in R3") {
        Polytope o = Polytope::from_vrep({3, {rv({0, 0, 0})}, {lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1})}});
        auto b = vertex_blowup(o, FaceLattice(o), lv({1, 1, 1}), Rat(1));
        CHECK(b.section_lattice.f_vector() == std::vector<Integer>{3, 3, 1});
        CHECK(global_ih_class(b.section_lattice) == TatePoly(std::vector<Integer>{1, 1, 1}));
    }
    SUBCASE("cones over random polygons agree on both paths") {
        for (int k = 3; k <= 8; ++k) {
            Polytope c = kgon_cone(k);
            FaceLattice L(c);
            auto b = vertex_blowup(c, L, lv({0, 0, 1}), Rat(3, 2));
            CHECK(global_ih_class(b.section_lattice) == exceptional_divisor_class(L));
        }
    }
    SUBCASE("bad functional") {
        Polytope q = Polytope::from_vrep({2, {rv({0, 0})}, {lv({1, 0}), lv({0, 1})}});
        try {
            (void)vertex_blowup(q, FaceLattice(q), lv({1, 0}), Rat(1));
            FAIL("expected rejection");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("not interior to dual cone") != std::string::npos);
        }
        CHECK_THROWS_AS(vertex_blowup(q, FaceLattice(q), lv({1, 1}), Rat(0)), Error);
    }
}
