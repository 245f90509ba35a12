#include <doctest.h>

#include <random>

#include "pcw/covers.hpp"
#include "pcw/errors.hpp"
#include "pcw/io.hpp"
#include "pcw/rational.hpp"

#include "fixtures.hpp"

using namespace pcw;

namespace {

// Double cover of the dumbbell with fiber swaps on edges (check 2, bit 2)
// and (check 4, bit 7), identity elsewhere.  Carries a cover codeword that
// lifts no base codeword.
CoverSpec swapped_double_cover() {
    CoverSpec cov;
    cov.base = from_parity_matrix(fixtures::dumbbell());
    cov.m = 2;
    cov.perms.assign(cov.base.edges.size(), {0, 1});
    cov.perms[cov.base.edge_index(1, 1)] = {1, 0};
    cov.perms[cov.base.edge_index(6, 3)] = {1, 0};
    return cov;
}

const CoverWord kTwistedWord = bitvector_from_string("10101011101010");

} // namespace

TEST_SUITE_BEGIN("covers");

TEST_CASE("trivial cover reproduces the base matrix") {
    auto t = from_parity_matrix(fixtures::dumbbell());
    CHECK(lifted_parity_matrix(trivial_cover(t, 1)) == fixtures::dumbbell());

    auto cov = trivial_cover(t, 3);
    auto lifted = lifted_parity_matrix(cov);
    CHECK(lifted.rows() == 18);
    CHECK(lifted.cols() == 21);
    // Each 1 becomes an identity block.
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 7; ++i)
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    CHECK(lifted.at(3 * j + a, 3 * i + b) ==
                          (a == b ? fixtures::dumbbell().at(j, i) : 0));
}

TEST_CASE("lifted matrix of the swapped double cover") {
    auto lifted = lifted_parity_matrix(swapped_double_cover());
    BinaryMatrix expect{
        {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
    };
    CHECK(lifted == expect);
}

TEST_CASE("the twisted word is a cover codeword but lifts nothing") {
    auto cov = swapped_double_cover();
    CHECK(is_cover_codeword(cov, kTwistedWord));
    CHECK(weight(syndrome(lifted_parity_matrix(cov), kTwistedWord)) == 0);

    // Not constant on the fiber of bit 1, so it is no lift.
    for (const auto& c : fixtures::dumbbell_codewords())
        CHECK(lift_codeword(c, 2) != kTwistedWord);

    auto p = pseudo_codeword(kTwistedWord, 7, 2);
    CHECK(p.unscaled == std::vector<long long>{1, 1, 1, 2, 1, 1, 1});
    CHECK(p.normalized == RationalVector{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                         1, Rational(1, 2), Rational(1, 2),
                                         Rational(1, 2)});
}

TEST_CASE("the twisted word sits closer than any codeword") {
    auto received = bitvector_from_string("1011010");
    auto lifted_rx = lift_codeword(received, 2);
    CHECK(scaled_cover_distance(lifted_rx, kTwistedWord, 2) == 3);
    // Base decoding also reaches 3 at best, so the pseudo-codeword ties the
    // nearest codeword on the cover.
    for (const auto& c : fixtures::dumbbell_codewords())
        CHECK(scaled_cover_distance(lifted_rx, lift_codeword(c, 2), 2) >=
              Rational(3));
    CHECK(scaled_cover_distance(kTwistedWord, kTwistedWord, 2) == 0);
}

TEST_CASE("lifting a codeword gives a cover codeword of every cover") {
    std::mt19937_64 rng(41);
    auto t = from_parity_matrix(fixtures::dumbbell());
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + static_cast<int>(fixtures::pick(rng, 4));
        auto cov = random_cover(t, m, rng());
        for (const auto& c : fixtures::dumbbell_codewords()) {
            auto w = lift_codeword(c, m);
            CHECK(is_cover_codeword(cov, w));
            auto p = pseudo_codeword(w, t.n_bits, m);
            for (int i = 0; i < t.n_bits; ++i) {
                CHECK(p.unscaled[i] == static_cast<long long>(c[i]) * m);
                CHECK(p.normalized[i] == Rational(c[i]));
            }
        }
    }
}

TEST_CASE("cover codeword test agrees with the lifted matrix syndrome") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        auto h = fixtures::random_ldpc(rng, 2 + static_cast<int>(fixtures::pick(rng, 4)),
                                       3 + static_cast<int>(fixtures::pick(rng, 5)));
        auto t = from_parity_matrix(h);
        int m = 1 + static_cast<int>(fixtures::pick(rng, 3));
        auto cov = random_cover(t, m, rng());
        auto lifted = lifted_parity_matrix(cov);
        for (int k = 0; k < 20; ++k) {
            CoverWord w(static_cast<std::size_t>(t.n_bits) * m);
            for (auto& b : w) b = fixtures::pick(rng, 2) ? 1 : 0;
            CHECK(is_cover_codeword(cov, w) == (weight(syndrome(lifted, w)) == 0));
        }
    }
}

TEST_CASE("random covers are deterministic in the seed") {
    auto t = from_parity_matrix(fixtures::dumbbell());
    auto a = random_cover(t, 3, 7);
    auto b = random_cover(t, 3, 7);
    CHECK(a.perms == b.perms);
    CHECK_NOTHROW(validate_cover(a));

    // Pinned stream: mt19937_64 is specified by the standard and the shuffle
    // is spelled out in this library, so these values hold on any platform.
    CHECK(a.perms == std::vector<std::vector<int>>{
                         {1, 2, 0}, {1, 2, 0}, {2, 0, 1}, {1, 2, 0}, {1, 2, 0},
                         {0, 2, 1}, {1, 2, 0}, {2, 1, 0}, {0, 1, 2}, {1, 2, 0},
                         {2, 0, 1}, {0, 2, 1}, {1, 2, 0}, {1, 2, 0}});
    CHECK(random_cover(t, 2, 99).perms ==
          std::vector<std::vector<int>>{{0, 1}, {0, 1}, {0, 1}, {1, 0}, {0, 1},
                                        {1, 0}, {0, 1}, {1, 0}, {1, 0}, {0, 1},
                                        {0, 1}, {1, 0}, {1, 0}, {1, 0}});
}

TEST_CASE("cover validation catches malformed specs") {
    auto t = from_parity_matrix(fixtures::dumbbell());
    auto cov = trivial_cover(t, 2);
    cov.perms[3] = {0, 0};
    CHECK_THROWS_AS(validate_cover(cov), DomainError);
    cov.perms[3] = {0, 1, 2};
    CHECK_THROWS_AS(validate_cover(cov), DimensionError);
    cov.perms.pop_back();
    CHECK_THROWS_AS(validate_cover(cov), DimensionError);
    CHECK_THROWS_AS(trivial_cover(t, 0), DomainError);
    CHECK_THROWS_AS(random_cover(t, 0, 1), DomainError);
}

TEST_CASE("cover json round trip") {
    auto t = from_parity_matrix(fixtures::dumbbell());
    auto cov = random_cover(t, 4, 2024);
    auto text = cover_to_json(cov);
    auto back = cover_from_json(t, text);
    CHECK(back.m == cov.m);
    CHECK(back.perms == cov.perms);
    // Serialization is stable.
    CHECK(cover_to_json(back) == text);
}

TEST_CASE("cover json validation") {
    auto t = from_parity_matrix(BinaryMatrix{{1, 1}});
    auto ok = cover_from_json(t, R"({"M": 2, "edges": [
        {"check": 1, "bit": 1, "perm": [1, 2]},
        {"check": 1, "bit": 2, "perm": [2, 1]}]})");
    CHECK(ok.m == 2);
    CHECK(ok.perms == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    CHECK_THROWS_AS(cover_from_json(t, "{"), ParseError);
    CHECK_THROWS_AS(cover_from_json(t, R"({"edges": []})"), DomainError);
    CHECK_THROWS_WITH_AS(cover_from_json(t, R"({"M": 1, "edges": []})"),
                         doctest::Contains("missing"), DomainError);
    CHECK_THROWS_WITH_AS(
        cover_from_json(t, R"({"M": 1, "edges": [
            {"check": 1, "bit": 3, "perm": [1]},
            {"check": 1, "bit": 2, "perm": [1]}]})"),
        doctest::Contains("absent"), DomainError);
    CHECK_THROWS_WITH_AS(
        cover_from_json(t, R"({"M": 1, "edges": [
            {"check": 1, "bit": 1, "perm": [1]},
            {"check": 1, "bit": 1, "perm": [1]}]})"),
        doctest::Contains("repeats"), DomainError);
    CHECK_THROWS_AS(cover_from_json(t, R"({"M": 2, "edges": [
        {"check": 1, "bit": 1, "perm": [1, 1]},
        {"check": 1, "bit": 2, "perm": [1, 2]}]})"),
                    DomainError);
}

TEST_CASE("word length checks") {
    auto cov = swapped_double_cover();
    CHECK_THROWS_AS(is_cover_codeword(cov, BitVector(7, 0)), DimensionError);
    CHECK_THROWS_AS(pseudo_codeword(BitVector(13, 0), 7, 2), DimensionError);
}

TEST_SUITE_END();
