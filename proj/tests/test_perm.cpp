#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "positroid/perm.hpp"

using namespace positroid;

TEST_CASE("window validation") {
    Baff f = Baff::from_window({2, 4, 6, 5, 7, 9});
    CHECK(f.k() == 2);
    CHECK(Baff::from_window({3, 4, 5, 6}) == Baff::identity(2, 4));
    CHECK_THROWS_AS(Baff::from_window({1, 1, 2, 3}), NotBijective);
    CHECK_THROWS_AS(Baff::from_window({0, 2, 3, 9}), NotBounded);
    CHECK_THROWS_AS(Baff::from_window({2, 4, 6, 5, 7, 9}, 3), WrongK);
}

TEST_CASE("necklace of the section-5.3 example") {
    Baff f = Baff::from_window({2, 4, 6, 5, 7, 9});
    GrassmannNecklace nec = necklace_of(f);
    CHECK(nec.str() == "(13,23,34,46,56,16)");
    CHECK(perm_of(nec) == f);
}

TEST_CASE("necklace of id(2,4)") {
    GrassmannNecklace nec = necklace_of(Baff::identity(2, 4));
    CHECK(nec.str() == "(12,23,34,14)");
    // the cyclic convention lists I_4 = {4,1} as the sorted set {1,4}
    CHECK(nec.subsets[3] == Subset{1, 4});
}

TEST_CASE("necklace round trip is the identity on Bound(2,6)") {
    auto all = enumerate_bound(2, 6);
    for (const Baff& f : all) CHECK(perm_of(necklace_of(f)) == f);
}

TEST_CASE("length and covers") {
    CHECK(length(Baff::identity(2, 4)) == 0);
    CHECK(length(Baff::from_window({3, 5, 4, 6})) == 1);
    auto cs = covers(Baff::identity(2, 4));
    std::set<std::string> got;
    for (const Baff& g : cs) got.insert(g.str());
    std::set<std::string> want{"[4,3,5,6]", "[3,5,4,6]", "[3,4,6,5]", "[2,4,5,7]"};
    CHECK(got == want);
    for (const Baff& g : cs) CHECK(length(g) == 1);
}

TEST_CASE("positroid via Oh's theorem") {
    Positroid m = positroid_of(Baff::from_window({2, 5, 4, 7}));
    std::vector<Subset> want{{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK(m.bases == want);

    Positroid tI = positroid_of(Baff::t_of({3, 4}, 4));
    CHECK(tI.bases == std::vector<Subset>{{3, 4}});

    Positroid uniform = positroid_of(Baff::identity(1, 3));
    CHECK(uniform.bases == std::vector<Subset>{{1}, {2}, {3}});
}

TEST_CASE("rank matrix examples") {
    Baff f = Baff::from_window({4, 7, 5, 8, 6, 9});
    CyclicRankMatrix rm = rank_matrix_of(f);
    CHECK(rm.rank(1, 2) == 2);
    CHECK(rm.rank(5, 6) == 1);

    CyclicRankMatrix rid = rank_matrix_of(Baff::identity(2, 4));
    for (int i = 1; i <= 4; ++i) CHECK(rid.rank(i, i) == 1);

    CyclicRankMatrix rt = rank_matrix_of(Baff::t_of({1}, 2));
    CHECK(rt.rank(2, 2) == 0);
}

TEST_CASE("Prop three: the triple of objects determine each other") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {3, 5}}) {
        for (const Baff& f : enumerate_bound(k, n)) {
            CyclicRankMatrix rm = rank_matrix_of(f);
            CHECK(perm_of_rank_matrix(rm) == f);
            CHECK(necklace_of_rank_matrix(rm) == necklace_of(f));
        }
    }
}

TEST_CASE("covers raise length by one exactly") {
    for (const Baff& f : enumerate_bound(2, 4))
        for (const Baff& g : covers(f)) {
            CHECK(length(g) == length(f) + 1);
            CHECK(bruhat_leq(g, f));
        }
}

TEST_CASE("Cor Morder: order iff positroid containment on Bound(2,4)") {
    auto all = enumerate_bound(2, 4);
    CHECK(all.size() == 33);
    std::vector<Positroid> pos;
    for (const Baff& f : all) pos.push_back(positroid_of(f));
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            bool leq = bruhat_leq(all[i], all[j]);
            bool cont = pos[j].contains(pos[i]);
            CHECK(leq == cont);
        }
}

TEST_CASE("positroids are matroids and sort-closed") {
    for (const Baff& f : enumerate_bound(2, 4)) {
        Positroid m = positroid_of(f);
        CHECK(!m.bases.empty());
        CHECK(m.satisfies_exchange_axiom());
        CHECK(m.is_sort_closed());
        CHECK(perm_of_positroid(m) == f);
    }
}

TEST_CASE("rotation conjugation and t_I necklaces") {
    Baff f = Baff::from_window({2, 4, 6, 5, 7, 9});
    Baff g = f;
    for (int r = 0; r < 6; ++r) g = g.rotate();
    CHECK(g == f);

    GrassmannNecklace nt = necklace_of(Baff::t_of({2, 4}, 5));
    for (const Subset& s : nt.subsets) CHECK(s == Subset{2, 4});
}

TEST_CASE("Bound(1,n) counts agree with necklace enumeration") {
    for (int n = 2; n <= 6; ++n) {
        auto all = enumerate_bound(1, n);
        std::set<std::string> necks;
        for (const Baff& f : all) necks.insert(necklace_of(f).str());
        CHECK(necks.size() == all.size());
    }
}
