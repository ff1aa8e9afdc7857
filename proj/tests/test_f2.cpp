#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bit>
#include <random>
#include <sstream>

#include "cosetq/errors.hpp"
#include "cosetq/f2.hpp"
#include "doctest.h"

using namespace cosetq;

namespace {

LinearCode simplex7() {
    return LinearCode::span(7, {BitVector::from_string("1010101"), BitVector::from_string("0110011"),
                                BitVector::from_string("0001111")});
}

}  // namespace

TEST_CASE("bit vector basics") {
    BitVector v = BitVector::from_string("0110");
    CHECK(v.length() == 4);
    CHECK(v.weight() == 2);
    CHECK(v.bit(1) == 0);
    CHECK(v.bit(2) == 1);
    CHECK(v.support() == std::vector<int>{2, 3});
    CHECK(v.to_string() == "0110");

    BitVector s = BitVector::from_support(4, {1, 4});
    CHECK(s.to_string() == "1001");
    CHECK((v ^ s).to_string() == "1111");

    CHECK_THROWS_AS(BitVector::from_string("01x0"), domain_error);
    CHECK_THROWS_AS(BitVector(0, 0), domain_error);
    CHECK_THROWS_AS(BitVector(65, 0), domain_error);
    CHECK_THROWS_AS(BitVector(3, 0b1000), domain_error);
    CHECK_THROWS_AS(BitVector::from_support(3, {4}), domain_error);
    CHECK_THROWS_AS(v ^ BitVector::from_string("01101"), dimension_mismatch);
}

TEST_CASE("rref insertion keeps a canonical basis") {
    LinearCode code(6);
    CHECK(code.dimension() == 0);
    CHECK(code.insert_word(0b110));
    CHECK(code.insert_word(0b011));
    CHECK_FALSE(code.insert_word(0b101));  // dependent
    CHECK(code.dimension() == 2);

    // pivots strictly increase and each pivot column is cleared elsewhere
    const auto& rows = code.rows();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        CHECK(std::countr_zero(rows[i]) < std::countr_zero(rows[i + 1]));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (i != j) CHECK((rows[j] >> std::countr_zero(rows[i]) & 1) == 0);

    // same span from permuted generators gives identical rows
    LinearCode other(6);
    other.insert_word(0b101);
    other.insert_word(0b110);
    CHECK(code == other);
}

TEST_CASE("reduce is a coset invariant") {
    LinearCode code = simplex7();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t v = rng() & full_mask(7);
        std::uint64_t c = code.rows()[rng() % 3];
        CHECK(code.reduce(v) == code.reduce(v ^ c));               // same coset
        CHECK((code.reduce(v) == 0) == code.contains(BitVector(7, v)));
    }
}

TEST_CASE("dual of the simplex code is the hamming code") {
    LinearCode simplex = simplex7();
    LinearCode hamming = simplex.dual();
    CHECK(simplex.dimension() == 3);
    CHECK(hamming.dimension() == 4);
    CHECK(simplex.min_distance() == 4);
    CHECK(hamming.min_distance() == 3);

    // every pair of rows is orthogonal
    for (std::uint64_t a : simplex.rows())
        for (std::uint64_t b : hamming.rows()) CHECK(std::popcount(a & b) % 2 == 0);

    CHECK(hamming.dual() == simplex);
}

TEST_CASE("dual dimensions and involution on random codes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng() % 16);
        LinearCode code(n);
        for (int i = 0; i < 1 + int(rng() % n); ++i) code.insert_word(rng() & full_mask(n));
        LinearCode dual = code.dual();
        CHECK(code.dimension() + dual.dimension() == n);
        CHECK(dual.dual() == code);
        for (std::uint64_t a : code.rows())
            for (std::uint64_t b : dual.rows()) CHECK(std::popcount(a & b) % 2 == 0);
    }
}

TEST_CASE("minimum distance") {
    LinearCode rep(9);
    rep.insert_word(full_mask(9));
    CHECK(rep.min_distance() == 9);

    LinearCode zero(5);
    CHECK_THROWS_AS(zero.min_distance(), precondition_error);

    LinearCode big(40);
    for (int i = 0; i < 30; ++i) big.insert_word(1ull << i);
    CHECK_THROWS_AS(big.min_distance(), resource_limit_error);
}

TEST_CASE("generator sets") {
    GeneratorSet gens(6, 3,
                      {BitVector::from_string("111000"), BitVector::from_string("000111")});
    CHECK(gens.covers_all());
    CHECK(gens.support_mask() == full_mask(6));
    CHECK(support_union(gens) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(gens.span().dimension() == 2);

    CHECK_THROWS_AS(GeneratorSet(6, 2, {BitVector::from_string("111000")}), precondition_error);

    GeneratorSet partial(6, 3, {BitVector::from_string("111000")});
    CHECK_FALSE(partial.covers_all());
}

TEST_CASE("code file round trip") {
    std::stringstream ss;
    write_code_file(ss, 7, simplex7().basis(), "comment survives");
    CodeFile file = read_code_file(ss);
    CHECK(file.n == 7);
    CHECK(file.rows.size() == 3);
    CHECK(file.span() == simplex7());
    REQUIRE(file.comments.size() == 1);
    CHECK(file.comments[0] == "comment survives");
}

TEST_CASE("code file parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::stringstream ss(text);
        try {
            read_code_file(ss);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("", 1);
    expect_line("x 3\n", 1);
    expect_line("4 2\n1010\n10\n", 3);
    expect_line("4 1\n10a0\n", 2);
    expect_line("4 2\n1010\n", 3);  // missing row
}
