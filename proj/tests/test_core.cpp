#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tk/canonical.hpp"
#include "tk/catalog.hpp"
#include "tk/enumerate.hpp"
#include "tk/search.hpp"
#include "tk/tournament.hpp"

using namespace tk;

namespace {

Tournament random_tournament(int n, std::mt19937_64& rng) {
    std::string bits;
    for (int k = 0; k < n * (n - 1) / 2; ++k) bits += (rng() & 1) ? '1' : '0';
    return make_tournament(n, bits);
}

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("bit layout") {
    const Tournament tt = make_tournament(3, "111");
    CHECK(tt.arc(0, 1));
    CHECK(tt.arc(1, 2));
    CHECK(tt.arc(0, 2));

    const Tournament c3 = make_tournament(3, "101");
    CHECK(c3.arc(0, 1));
    CHECK(c3.arc(1, 2));
    CHECK(c3.arc(2, 0));
    CHECK(is_isomorphic(c3, exception_tournament("3A")));

    CHECK_THROWS_AS(make_tournament(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_tournament(3, "10"), std::invalid_argument);
    CHECK_THROWS_AS(make_tournament(3, "1x1"), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    const Tournament t = parse_tournament("t 4 010011");
    CHECK(t.order() == 4);
    CHECK(format_tournament(t) == "t 4 010011");
    CHECK(parse_tournament(format_tournament(t)) == t);
    CHECK_THROWS_AS(parse_tournament("q 3 101"), ParseError);
    CHECK_THROWS_AS(parse_tournament("t 3"), ParseError);
    CHECK(format_labels(0b101) == "{1,3}");
    CHECK(format_labels(0) == "{}");
}

TEST_CASE("builder matches bits") {
    TournamentBuilder b(3);
    b.set_arc(0, 1).set_arc(1, 2).set_arc(2, 0);
    CHECK(b.build() == make_tournament(3, "101"));
}

TEST_CASE("dual") {
    const Tournament c3 = make_tournament(3, "101");
    CHECK(is_isomorphic(dual(c3), c3));
    const Tournament tt = transitive_tournament(3);
    const Tournament d = dual(tt);
    CHECK(d.outdegree(0) == 0);
    CHECK(d.indegree(2) == 0);
    for (const auto& t : tournaments_of_order(5)) CHECK(dual(dual(t)) == t);
}

TEST_CASE("induced and remove_vertex") {
    const Tournament c3 = make_tournament(3, "101");
    const Tournament e = induced(c3, VertexSet(3, 0b011));
    CHECK(e.order() == 2);
    CHECK(e.arc(0, 1));
    CHECK(induced(c3, c3.vertices()) == c3);

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Tournament t = random_tournament(7, rng);
        const Tournament r = remove_vertex(t, 3);
        const auto a = oracle::adjacency(t);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i != j) CHECK(r.arc(i, j) == a[i < 3 ? i : i + 1][j < 3 ? j : j + 1]);
    }
}

TEST_CASE("6N upper triangle is 3A") {
    const Tournament t = exception_tournament("6N");
    bool found = false;
    for (Mask m = 0; m < 64; ++m) {
        if (popcount(m) != 3) continue;
        const Mask rest = t.vertices() & ~m;
        // the three vertices dominated by the other three, all of them
        bool dominated = true;
        for_each_bit(m, [&](int v) { dominated &= (t.in(v) & rest) == rest; });
        if (dominated) {
            found = true;
            CHECK(is_isomorphic(induced(t, m), make_tournament(3, "101")));
            CHECK(is_isomorphic(induced(t, rest), make_tournament(3, "101")));
        }
    }
    CHECK(found);
}

TEST_CASE("sections") {
    const Tournament c3 = make_tournament(3, "101");
    for (int v = 0; v < 3; ++v) CHECK(popcount(out_section(c3, bit(v))) == 3);
    const Tournament tt = transitive_tournament(3);
    CHECK(out_section(tt, bit(2)) == bit(2));
    CHECK(in_section(tt, bit(0)) == bit(0));
    CHECK(popcount(out_section(tt, bit(0))) == 3);
    const VertexSet s = out_section(tt, VertexSet(3, bit(1)));
    CHECK(s.vertices() == std::vector<int>{1, 2});
}

TEST_CASE("Exc 1 section bound") {
    const Tournament a4 = exception_tournament("4A");
    const PathType p = parse_path_type("+(1,1,1)");
    const Mask non = a4.vertices() & ~origins(a4, p);
    CHECK(popcount(non) >= 2);
    const auto v = bits_to_vector(non);
    CHECK(popcount(out_section(a4, bit(v[0]) | bit(v[1]))) >= p.blocks[0] + 1);
}

TEST_CASE("strong iff directed Hamiltonian cycle") {
    CHECK(is_strong(make_tournament(3, "101")));
    CHECK_FALSE(is_strong(transitive_tournament(3)));
    for (int n = 3; n <= 6; ++n)
        for (const auto& t : tournaments_of_order(n))
            CHECK(is_strong(t) == find_cycle_embedding(t, directed_cycle(n)).has_value());
    const Tournament b4 = exception_tournament("4B");
    CHECK(is_strong(b4) == find_cycle_embedding(b4, directed_cycle(4)).has_value());
}

TEST_CASE("canonical form equals brute force minimum") {
    CHECK(canonical_form(make_tournament(2, "1")) == canonical_form(make_tournament(2, "0")));
    CHECK(canonical_form(make_tournament(3, "101")) != canonical_form(transitive_tournament(3)));
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 7; ++n)
        for (int rep = 0; rep < (n <= 5 ? 60 : 15); ++rep) {
            const Tournament t = random_tournament(n, rng);
            CHECK(canonical_form(t) == oracle::canonical(t));
        }
}

TEST_CASE("canonical labeling is consistent") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const Tournament t = random_tournament(n, rng);
        const auto lab = canonical_labeling(t);
        CHECK(relabel(t, lab.order).bits() == lab.bits);
        const Tournament u = relabel(t, shuffled(n, rng));
        CHECK(canonical_form(u) == lab.bits);
        CHECK(is_isomorphic(t, u));
    }
}

TEST_CASE("rooted canonical form") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        const Tournament t = random_tournament(6, rng);
        const auto p = shuffled(6, rng);
        const Tournament u = relabel(t, p);
        // vertex i of u is vertex p[i] of t
        for (int i = 0; i < 6; ++i) CHECK(rooted_canonical_form(u, i) == rooted_canonical_form(t, p[i]));
    }
    const Tournament tt = transitive_tournament(3);
    CHECK(rooted_canonical_form(tt, 0) != rooted_canonical_form(tt, 2));
}

TEST_CASE("order 5 has 12 classes") {
    CHECK(oracle::classes(5).size() == 12);
}
