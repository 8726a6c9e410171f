#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "tk/canonical.hpp"
#include "tk/catalog.hpp"
#include "tk/search.hpp"

using namespace tk;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Mask labels(std::initializer_list<int> one_based) {
    Mask m = 0;
    for (int v : one_based) m |= bit(v - 1);
    return m;
}

const ExceptionRecord& exc(int id) {
    for (const auto& e : finite_path_exceptions())
        if (e.id == id) return e;
    throw std::out_of_range("no record");
}

}  // namespace

TEST_CASE("named tournaments") {
    CHECK(is_isomorphic(exception_tournament("3A"), make_tournament(3, "101")));
    const Tournament a5 = exception_tournament("5A");
    for (int v = 0; v < 5; ++v) CHECK(a5.outdegree(v) == 2);
    const Tournament a7 = exception_tournament("7A");
    for (int u = 0; u < 7; ++u) {
        CHECK(a7.outdegree(u) == 3);
        for (int v = u + 1; v < 7; ++v) CHECK(popcount(a7.out(u) & a7.out(v)) == 1);
    }
    CHECK_THROWS_AS(exception_tournament("9Z"), std::invalid_argument);
    for (const auto& name : tournament_names()) CHECK(exception_tournament(name).label() == name);
}

TEST_CASE("finite records") {
    CHECK(finite_path_exceptions().size() == 52);
    const auto& e0 = exc(0);
    CHECK(e0.tournament == "3A");
    CHECK(e0.path.str() == "+(1,1)");
    CHECK(e0.S == labels({1, 2, 3}));
    CHECK(e0.witnesses.empty());

    const auto& e2 = exc(2);
    CHECK(e2.tournament == "4A");
    CHECK(e2.path.str() == "+(1,2)");
    CHECK(e2.S == labels({3, 4}));
    CHECK(e2.witnesses == std::vector<Embedding>{{0, 2, 1, 3}, {1, 2, 0, 3}});

    const auto& e33 = exc(33);
    CHECK(e33.tournament == "7A");
    CHECK(e33.path.str() == "+(1,1,1,1,1,1)");
    CHECK(e33.S == full_mask(7));
}

TEST_CASE("every finite record is an exception with the stated non-origins") {
    for (const auto& e : finite_path_exceptions()) {
        const Tournament t = exception_tournament(e.tournament);
        CAPTURE(e.id);
        CHECK((t.vertices() & ~origins(t, e.path)) == e.S);
        CHECK(is_exception_pair(t, e.path));
        for (const auto& w : e.witnesses) {
            CHECK(validate_embedding(t, e.path, w));
            CHECK(((e.S >> w[0]) & 1) == 0);
        }
    }
}

TEST_CASE("families") {
    CHECK(family_ids().size() == 17);
    FamilyParams k1;
    k1.x = transitive_tournament(1);
    const auto e1 = instantiate_family("E1", k1);
    CHECK(e1.t.order() == 4);
    CHECK(e1.path.str() == "+(1,2)");
    CHECK(e1.S == labels({1, 2, 3}));
    CHECK((e1.t.vertices() & ~origins(e1.t, e1.path)) == e1.S);

    FamilyParams arc;
    arc.x = transitive_tournament(2);
    const auto e8 = instantiate_family("E8", arc);
    CHECK(e8.t.order() == 5);
    CHECK(e8.path.str() == "+(1,1,1,1)");

    FamilyParams c3;
    c3.x = make_tournament(3, "101");
    const auto e16 = instantiate_family("E1", c3);
    CHECK(e16.t.order() == 6);
    CHECK(is_strong(induced(e16.t, e16.x_set)));

    CHECK_THROWS_AS(instantiate_family("E1", {}), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family("E99", k1), std::invalid_argument);
}

TEST_CASE("family instances are exceptions") {
    for (const auto& fi : family_instances(7)) {
        CAPTURE(fi.key);
        CHECK((fi.t.vertices() & ~origins(fi.t, fi.path)) == fi.S);
        CHECK(is_exception_pair(fi.t, fi.path));
    }
}

TEST_CASE("cycle records") {
    const auto& cs = cycle_exceptions();
    CHECK(cs.size() == 18);
    CHECK(cs[0].tournament == "3A");
    CHECK(cs[0].cycle.str() == "(2,1)");
    CHECK(cs[7].tournament == "4B");
    CHECK(cs[7].cycle.str() == "(2,2)");
    CHECK(cs[17].tournament == "7A");
    CHECK(cs[17].cycle.str() == "(2,1,2,1)");
    for (const auto& r : cs)
        for (const auto& t : completions(r.tournament)) {
            CAPTURE(r.id);
            CHECK_FALSE(find_cycle_embedding(t, r.cycle));
        }
}

TEST_CASE("biexception records") {
    const auto& bs = biexception_records(8);
    const BiexceptionRecord* e20 = nullptr;
    for (const auto& b : bs)
        if (b.id == "(2,0)") e20 = &b;
    REQUIRE(e20);
    CHECK(e20->path.str() == "+(2,2)");
    CHECK(e20->out_neighbourhood);
    CHECK(e20->neighbourhood == labels({3, 4}));
    CHECK(e20->S == labels({3}));
    CHECK(e20->x == e20->t.order() - 1);
    CHECK(match_biexception(e20->t, e20->path, e20->x) == std::optional<std::string>("(2,0)"));
}

TEST_CASE("matching is invariant under relabelling") {
    std::mt19937_64 rng(8);
    for (const auto& e : finite_path_exceptions()) {
        const Tournament t = exception_tournament(e.tournament);
        if (t.order() > 8) continue;
        const Tournament u = relabel(t, shuffled(t.order(), rng));
        const auto m = match_exception(u, e.path);
        REQUIRE(m);
        CHECK(*m == match_exception(t, e.path));
    }
    const Tournament c3 = make_tournament(3, "101");
    CHECK(match_exception(relabel(c3, {2, 0, 1}), parse_cycle_type("(2,1)")) == std::optional<std::string>("A1"));
    CHECK_FALSE(match_exception(transitive_tournament(3), parse_cycle_type("(2,1)")));
    CHECK_FALSE(match_exception(transitive_tournament(4), parse_path_type("+(3)")));
}

TEST_CASE("family match") {
    FamilyParams p;
    p.x = transitive_tournament(2);
    const auto e15 = instantiate_family("E1", p);
    CHECK(e15.path.str() == "+(1,3)");
    const auto m = match_exception(e15.t, e15.path);
    REQUIRE(m);
    CHECK(m->rfind("E1", 0) == 0);
}

TEST_CASE("exported catalog is stable") {
    const std::string a = catalog_json();
    CHECK(a == catalog_json());
    std::ifstream in(TK_SOURCE_DIR "/catalog.json", std::ios::binary);
    REQUIRE(in);
    std::stringstream s;
    s << in.rdbuf();
    CHECK(s.str() == a);
}
