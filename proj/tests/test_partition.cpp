#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "clp/partition.hpp"

using clp::Partition;
using clp::SupportConstraint;

TEST_CASE("validation and parsing") {
    CHECK_NOTHROW(Partition({3, 1, 1}));
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("-").parts().empty());
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("3,1,1").str() == "3,1,1");
    CHECK(Partition().str() == "-");
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(clp::conjugate(Partition({3, 1, 1})) == Partition({3, 1, 1}));
    CHECK(clp::conjugate(Partition({4, 2})) == Partition({2, 2, 1, 1}));
    CHECK(clp::conjugate(Partition()) == Partition());
    CHECK(clp::conjugate(clp::conjugate(Partition({5, 3, 3, 1}))) == Partition({5, 3, 3, 1}));
}

TEST_CASE("stats") {
    auto st = clp::partition_stats(Partition({3, 1, 1}));
    CHECK(st.size == 5);
    CHECK(st.length == 3);
    CHECK(st.odd_parts == 3);
    // n(3,1,1) = 0*3 + 1*1 + 2*1 = 3
    CHECK(st.n_stat == 3);
    // conjugate is (3,1,1) again, so sum of squared dual parts = 9+1+1
    CHECK(st.dual_square_sum == 11);
    CHECK(st.mult.at(1) == 2);
    CHECK(st.mult.at(3) == 1);

    auto two = clp::partition_stats(Partition({2}));
    CHECK(two.n_stat == 0);
    CHECK(two.dual_square_sum == 2);
    CHECK(two.odd_parts == 0);

    auto empty = clp::partition_stats(Partition());
    CHECK(empty.size == 0);
    CHECK(empty.n_stat == 0);
    CHECK(empty.dual_square_sum == 0);
}

TEST_CASE("support constraints") {
    CHECK(clp::satisfies(Partition({3, 1, 1}), SupportConstraint::ALL));
    // odd parts must come in pairs
    CHECK(clp::satisfies(Partition({1, 1}), SupportConstraint::ODD_PARTS_EVEN_MULT));
    CHECK(clp::satisfies(Partition({2}), SupportConstraint::ODD_PARTS_EVEN_MULT));
    CHECK_FALSE(clp::satisfies(Partition({2, 1}), SupportConstraint::ODD_PARTS_EVEN_MULT));
    CHECK(clp::satisfies(Partition({3, 3, 2}), SupportConstraint::ODD_PARTS_EVEN_MULT));
    // even parts must come in pairs
    CHECK(clp::satisfies(Partition({2, 2}), SupportConstraint::EVEN_PARTS_EVEN_MULT));
    CHECK(clp::satisfies(Partition({1}), SupportConstraint::EVEN_PARTS_EVEN_MULT));
    CHECK_FALSE(clp::satisfies(Partition({2}), SupportConstraint::EVEN_PARTS_EVEN_MULT));
    CHECK(clp::satisfies(Partition(), SupportConstraint::EVEN_PARTS_EVEN_MULT));
}

TEST_CASE("enumeration counts match the partition function") {
    // p(0..6) = 1,1,2,3,5,7,11; cumulative through 6 is 30
    std::vector<int> pf = {1, 1, 2, 3, 5, 7, 11};
    int total = 0;
    for (int m = 0; m <= 6; ++m) {
        auto exact = clp::enumerate_partitions_exact(SupportConstraint::ALL, m);
        CHECK(static_cast<int>(exact.size()) == pf[m]);
        total += pf[m];
    }
    auto upto = clp::enumerate_partitions(SupportConstraint::ALL, 6);
    CHECK(static_cast<int>(upto.size()) == total);

    // odd parts with even multiplicity: m=2 gives (2),(1,1); m=3 none; m=4 gives four
    CHECK(clp::enumerate_partitions_exact(SupportConstraint::ODD_PARTS_EVEN_MULT, 2).size() == 2);
    CHECK(clp::enumerate_partitions_exact(SupportConstraint::ODD_PARTS_EVEN_MULT, 3).empty());
    CHECK(clp::enumerate_partitions_exact(SupportConstraint::ODD_PARTS_EVEN_MULT, 4).size() == 4);
    // even parts with even multiplicity: m=2 gives (1,1); m=3 gives (3),(1,1,1)
    CHECK(clp::enumerate_partitions_exact(SupportConstraint::EVEN_PARTS_EVEN_MULT, 2).size() == 1);
    CHECK(clp::enumerate_partitions_exact(SupportConstraint::EVEN_PARTS_EVEN_MULT, 3).size() == 2);
}

TEST_CASE("canonical order sorts by size then reverse-lex on parts") {
    auto all = clp::enumerate_partitions(SupportConstraint::ALL, 2);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == Partition());
    CHECK(all[1] == Partition({1}));
    CHECK(all[2] == Partition({2}));
    CHECK(all[3] == Partition({1, 1}));

    clp::PartitionOrder lt;
    CHECK(lt(Partition({2}), Partition({1, 1})));
    CHECK_FALSE(lt(Partition({1, 1}), Partition({2})));
    CHECK(lt(Partition({3}), Partition({2, 1})));
    CHECK(lt(Partition({2, 1}), Partition({1, 1, 1})));
}
