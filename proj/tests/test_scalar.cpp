#include <doctest.h>

#include "sbdo/scalar.hpp"

using sbdo::Scalar;

TEST_CASE("gaussian rational arithmetic") {
    Scalar a = Scalar::ratio(1, 2);
    Scalar b = Scalar::ratio(1, 3);
    CHECK(a + b == Scalar::ratio(5, 6));
    CHECK(a * b == Scalar::ratio(1, 6));
    CHECK(a - a == Scalar(0));
    CHECK((a / b) == Scalar::ratio(3, 2));

    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK(i.pow(4) == Scalar(1));
    CHECK(i.pow(-1) == -i);
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK((Scalar(1) + i).conj() == Scalar(1) - i);
}

TEST_CASE("division and inverse") {
    Scalar z(mpq_class(3), mpq_class(-4));  // 3 - 4i
    Scalar w = z.inverse();
    CHECK(z * w == Scalar(1));
    CHECK(z.pow(-2) * z.pow(2) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), sbdo::Error);
}

TEST_CASE("serialization round trip") {
    CHECK(Scalar(1).to_string() == "1");
    CHECK(Scalar::ratio(-4, 3).to_string() == "-4/3");
    CHECK((Scalar::ratio(1, 2) + Scalar::i()).to_string() == "1/2+1*i");
    CHECK((Scalar(2) - Scalar::ratio(3, 4) * Scalar::i()).to_string() == "2-3/4*i");

    for (const char* s : {"1", "-4/3", "0", "1/2+1*i", "2-3/4*i", "-5/7-2/9*i", "3*i", "-1*i"}) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.to_string()) == v);
    }
    CHECK(Scalar::parse("-4/3") == Scalar::ratio(-4, 3));
    CHECK(Scalar::parse("1/2+1*i") == Scalar::ratio(1, 2) + Scalar::i());
    CHECK_THROWS_AS(Scalar::parse("zz"), sbdo::Error);
}
