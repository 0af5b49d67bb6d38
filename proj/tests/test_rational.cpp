#include "doctest.h"

#include <gmpxx.h>

#include "exactdual/rational.hpp"
#include "support/oracles.hpp"

using namespace exactdual;
using testing_support::RandomRats;

namespace {

// GMP's own rational type normalizes independently of Rat.
mpq_class as_mpq(const Rat& r) { return mpq_class(r.num(), r.den()); }

bool canonical(const Rat& r) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return r.den() > 0 && g == 1;
}

bool same(const Rat& r, const mpq_class& q) { return r.num() == q.get_num() && r.den() == q.get_den(); }

}  // namespace

TEST_CASE("mk_rat normalizes") {
  CHECK(mk_rat(2, 4) == Rat::make(1, 2));
  CHECK(mk_rat(2, 4).str() == "1/2");
  CHECK(mk_rat(5, 0) == Rat(0));
  CHECK(mk_rat(5, 0).den() == 1);
  CHECK(mk_rat(0, 7).str() == "0");
  CHECK(mk_rat(3, -6).str() == "-1/2");
  CHECK(mk_rat(-4, -8).str() == "1/2");
}

TEST_CASE("field operation examples") {
  const Rat half = Rat::make(1, 2);
  const Rat third = Rat::make(1, 3);
  CHECK(half + third == Rat::make(5, 6));
  CHECK(Rat::make(3, 4) + Rat::make(-3, 4) == Rat(0));
  CHECK(Rat::make(2, 3) * Rat::make(3, 4) == half);
  CHECK(half * Rat(0) == Rat(0));
  CHECK(Rat::make(2, 3).inverse() == Rat::make(3, 2));
  CHECK(Rat(0).inverse() == Rat(0));
  CHECK(Rat::make(-1, 5).inverse() == Rat(-5));
  CHECK(half / Rat(0) == Rat(0));
  CHECK(Rat::make(-2, 3).pow(3) == Rat::make(-8, 27));
  CHECK(Rat::make(7, 9).pow(0) == Rat(1));
}

TEST_CASE("parsing and printing") {
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat::parse(" -3/4 ").str() == "-3/4");
  CHECK(Rat::parse("2/4").str() == "1/2");
  CHECK_THROWS_AS(Rat::parse("6/-4"), std::invalid_argument);
  CHECK(Rat::parse("123456789012345678901234567890/10").str() == "12345678901234567890123456789");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("bot"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rat::make(1, 3).to_decimal() == "0.333333");
  CHECK(Rat::make(2, 3).to_decimal() == "0.666667");
  CHECK(Rat::make(-2, 3).to_decimal() == "-0.666667");
  CHECK(Rat::make(1, 8).to_decimal(2) == "0.13");
  CHECK(Rat::make(-1, 8).to_decimal(2) == "-0.13");
  CHECK(Rat(7).to_decimal(0) == "7");
  CHECK(Rat::make(-1, 1000).to_decimal(2) == "0.00");
  CHECK(Rat::make(46, 45).to_decimal() == "1.022222");
}

TEST_CASE("arithmetic matches GMP rationals on random pairs") {
  RandomRats gen(17, 1000);
  for (int k = 0; k < 10000; ++k) {
    const Rat a = gen.rat() / Rat(gen.integer(1, 97));
    const Rat b = gen.rat() / Rat(gen.integer(1, 89));
    const mpq_class qa = as_mpq(a);
    const mpq_class qb = as_mpq(b);
    // The defining formula for addition.
    CHECK(a + b == mk_rat(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()));
    CHECK(same(a + b, mpq_class(qa + qb)));
    CHECK(same(a - b, mpq_class(qa - qb)));
    CHECK(same(a * b, mpq_class(qa * qb)));
    if (!b.is_zero()) {
      CHECK(same(a / b, mpq_class(qa / qb)));
      CHECK(b * b.inverse() == Rat(1));
    }
    CHECK(((a < b) == (qa < qb)));
    CHECK(canonical(a + b));
    CHECK(canonical(a * b));
    CHECK(canonical(a - b));
  }
}

TEST_CASE("field laws on sampled triples") {
  RandomRats gen(99);
  for (int k = 0; k < 2000; ++k) {
    const Rat a = gen.rat();
    const Rat b = gen.rat();
    const Rat c = gen.rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rat(0) == a);
    CHECK(a * Rat(1) == a);
    CHECK(a + (-a) == Rat(0));
  }
}

TEST_CASE("nonnegative rationals") {
  CHECK(NNRat(Rat::make(1, 2)).value() == Rat::make(1, 2));
  CHECK(NNRat(0).is_zero());
  CHECK_THROWS_AS(NNRat(Rat(-1)), std::domain_error);
}
