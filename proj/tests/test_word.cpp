#include <doctest.h>

#include "rank2/word.hpp"

using namespace rank2;

TEST_CASE("alphabet") {
    Alphabet a({"x", "y", "z"});
    CHECK(a.size() == 3);
    CHECK(a.index_of("y") == 1);
    CHECK(!a.index_of("w"));
    CHECK_THROWS_AS(a.require_index("w"), UnknownGenerator);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), UnknownGenerator);
}

TEST_CASE("deglex order") {
    WordDeglexLess less;
    Word e, x({0}), y({1}), xx({0, 0}), xy({0, 1}), yx({1, 0}), yy({1, 1});
    // degree first
    CHECK(less(e, x));
    CHECK(less(y, xx));
    // within a degree, words on earlier letters are larger
    CHECK(less(y, x));
    CHECK(less(yy, yx));
    CHECK(less(yx, xy));
    CHECK(less(xy, xx));
    CHECK(!less(x, x));
}

TEST_CASE("basis enumeration round trip") {
    // two letters: 1, x, y, xx, xy, yx, yy, ...
    CHECK(word_basis_size(2, 0) == 1);
    CHECK(word_basis_size(2, 1) == 3);
    CHECK(word_basis_size(2, 3) == 15);
    CHECK(word_basis_size(1, 4) == 5);
    CHECK(word_basis_index(Word(), 2) == 0);
    CHECK(word_basis_index(Word({0}), 2) == 1);
    CHECK(word_basis_index(Word({1}), 2) == 2);
    CHECK(word_basis_index(Word({0, 1}), 2) == 4);
    for (std::size_t n : {1, 2, 3}) {
        const std::size_t total = word_basis_size(n, 4);
        for (std::size_t i = 0; i < total; ++i)
            CHECK(word_basis_index(word_at_basis_index(i, n), n) == i);
    }
    CHECK_THROWS_AS(word_basis_size(2, 60), DegreeTooLarge);
}

TEST_CASE("word concatenation") {
    Word xy({0, 1}), z({2});
    CHECK(xy.concat(z) == Word({0, 1, 2}));
    CHECK(Word().concat(xy) == xy);
    CHECK(xy.degree() == 2);
    CHECK(xy.contains(1));
    CHECK(!xy.contains(2));
}
