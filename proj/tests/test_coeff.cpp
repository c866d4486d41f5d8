#include "wordalg/coeff.hpp"

#include <doctest.h>

#include <random>

using namespace wordalg;

TEST_CASE("integer arithmetic") {
    Ring z = Ring::integers();
    CHECK(Coefficient(z, 2) + Coefficient(z, 3) == Coefficient(z, 5));
    CHECK(Coefficient(z, -2) * Coefficient(z, 3) == Coefficient(z, -6));
    CHECK(Coefficient(z, 7).str() == "7");
    CHECK((-Coefficient(z, 7)).str() == "-7");
}

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Coefficient::rational(1, 2) + Coefficient::rational(1, 3) ==
          Coefficient::rational(5, 6));
    CHECK(Coefficient::rational(2, 3) * Coefficient::rational(3, 4) ==
          Coefficient::rational(1, 2));
    // unique representation: lowest terms, positive denominator
    CHECK(Coefficient::rational(2, 4).str() == "1/2");
    CHECK(Coefficient::rational(1, -2).str() == "-1/2");
    CHECK(Coefficient::rational(-4, -8) == Coefficient::rational(1, 2));
    CHECK(Coefficient::rational(3, 1).str() == "3");
    CHECK(Coefficient::rational(1, 3).divided_by(Coefficient::rational(1, 6)) ==
          Coefficient::rational(2, 1));
}

TEST_CASE("modular arithmetic stays canonical") {
    Ring m5 = Ring::mod(5);
    CHECK(Coefficient(m5, 3) + Coefficient(m5, 4) == Coefficient(m5, 2));
    CHECK(Coefficient(m5, 2) * Coefficient(m5, 3) == Coefficient(m5, 1));
    CHECK((-Coefficient(m5, 2)) == Coefficient(m5, 3));
    CHECK(Coefficient(m5, -7) == Coefficient(m5, 3));
    CHECK_THROWS_AS(Ring::mod(1), ring_error);
}

TEST_CASE("mixed ring modes are rejected") {
    CHECK_THROWS_AS(Coefficient(Ring::integers(), 1) + Coefficient::rational(1, 2),
                    ring_error);
    CHECK_THROWS_AS(Coefficient(Ring::mod(5), 1) * Coefficient(Ring::mod(7), 1), ring_error);
    CHECK_THROWS_AS(Coefficient(Ring::integers(), 4).divided_by(Coefficient(Ring::integers(), 2)),
                    ring_error);
    // equality across rings is just inequality
    CHECK(!(Coefficient(Ring::integers(), 1) == Coefficient::rational(1, 1)));
}

TEST_CASE("ring laws on randomized triples") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> pick(-50, 50);
    auto make = [&](const Ring& r) {
        if (r.mode == RingMode::rationals) {
            long long d = 0;
            while (d == 0) d = pick(rng);
            return Coefficient::rational(pick(rng), d);
        }
        return Coefficient(r, pick(rng));
    };
    for (const Ring& r : {Ring::integers(), Ring::rationals(), Ring::mod(11)}) {
        for (int k = 0; k < 200; ++k) {
            Coefficient a = make(r), b = make(r), c = make(r);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("parsing coefficients") {
    CHECK(Coefficient::parse("-12", Ring::integers()) == Coefficient(Ring::integers(), -12));
    CHECK(Coefficient::parse("3/6", Ring::rationals()) == Coefficient::rational(1, 2));
    CHECK(Coefficient::parse("7", Ring::mod(5)) == Coefficient(Ring::mod(5), 2));
    CHECK_THROWS_AS(Coefficient::parse("1/2", Ring::integers()), ring_error);
    CHECK_THROWS_AS(Coefficient::parse("abc", Ring::integers()), ring_error);
}
