#include <random>

#include "bhc/exactnum.hpp"
#include "doctest.h"

using namespace bhc;

namespace {

Scalar random_scalar(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  Scalar s(f);
  Scalar z = f.is_rational() ? Scalar(f, 1L) : Scalar::root_of_unity(f, f.order(), 1);
  Scalar power(f, 1L);
  for (unsigned k = 0; k < f.degree(); ++k) {
    s += Scalar(f, mpq_class(num(rng), den(rng))) * power;
    power *= z;
  }
  return s;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Field q = Field::rational();
  CHECK(Scalar::parse(q, "1/2") + Scalar::parse(q, "1/3") == Scalar::parse(q, "5/6"));
  CHECK((Scalar::parse(q, "4/6")).to_string() == "2/3");
  CHECK(Scalar::parse(q, "-3").to_string() == "-3");
  CHECK_THROWS_AS(Scalar(q).inv(), Error);
  try {
    (void)Scalar(q).inv();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
}

TEST_CASE("gaussian rationals") {
  Field f = Field::cyclotomic(4);
  Scalar z = Scalar::root_of_unity(f, 4, 1);
  CHECK(z * z == Scalar(f, -1L));
  Scalar one(f, 1L);
  CHECK((one + z).inv() == (one - z) * Scalar(f, mpq_class(1, 2)));
  CHECK(Scalar::parse(f, "1 - z") == one - z);
  CHECK(Scalar::parse(f, "1/2*z^3") == Scalar(f, mpq_class(1, 2)) * z * z * z);
  CHECK((one - z).to_string() == "1 - z");
}

TEST_CASE("field mismatch is rejected") {
  Scalar a(Field::cyclotomic(4), 1L);
  Scalar b(Field::rational(), 1L);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::field_mismatch);
  }
}

TEST_CASE("embedding rationals") {
  CHECK(embed_rational(0, Field::cyclotomic(4)).is_zero());
  CHECK(embed_rational(mpq_class(1, 2), Field::cyclotomic(2)).to_string() == "1/2");
  CHECK(embed_rational(-3, Field::rational()).to_string() == "-3");
}

TEST_CASE("cyclotomic moduli match known polynomials") {
  auto coeffs = [](unsigned n) {
    std::vector<long> out;
    for (const auto& c : Field::cyclotomic(n).modulus()) out.push_back(c.get_si());
    return out;
  };
  CHECK(coeffs(1) == std::vector<long>{-1, 1});
  CHECK(coeffs(2) == std::vector<long>{1, 1});
  CHECK(coeffs(3) == std::vector<long>{1, 1, 1});
  CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
  CHECK(coeffs(6) == std::vector<long>{1, -1, 1});
  CHECK(coeffs(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(coeffs(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(coeffs(15) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("roots of unity have exact order") {
  for (unsigned n : {3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
    Field f = Field::cyclotomic(n);
    Scalar z = Scalar::root_of_unity(f, n, 1);
    Scalar p(f, 1L);
    for (unsigned k = 1; k < n; ++k) {
      p *= z;
      CHECK_FALSE(p.is_one());
    }
    p *= z;
    CHECK(p.is_one());
    // Phi_n(zeta) = 0
    Scalar acc(f), power(f, 1L);
    for (const auto& c : f.modulus()) {
      acc += Scalar(f, mpq_class(c)) * power;
      power *= z;
    }
    CHECK(acc.is_zero());
  }
  // odd order fields also contain the 2n-th roots
  Field f3 = Field::cyclotomic(3);
  Scalar w = Scalar::root_of_unity(f3, 6, 1);
  CHECK_FALSE((w * w * w).is_one());
  CHECK((w * w * w * w * w * w).is_one());
  CHECK_THROWS_AS(Scalar::root_of_unity(f3, 4, 1), Error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (unsigned n : {1u, 3u, 4u, 5u, 8u, 12u}) {
    Field f = n == 1 ? Field::rational() : Field::cyclotomic(n);
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      // canonical form: parsing the printed form gives back identical coefficients
      CHECK(Scalar::parse(f, a.to_string()).coefficients() == a.coefficients());
    }
  }
}

TEST_CASE("field descriptors") {
  CHECK(Field::parse("rational") == Field::rational());
  CHECK(Field::parse("cyclotomic(4)") == Field::cyclotomic(4));
  CHECK(Field::parse("cyclotomic:4") == Field::cyclotomic(4));
  CHECK(Field::cyclotomic(5).degree() == 4);
  CHECK_THROWS_AS(Field::parse("padic(3)"), Error);
  CHECK_THROWS_AS(Scalar::parse(Field::rational(), "1 + z"), Error);
  CHECK_THROWS_AS(Scalar::parse(Field::rational(), "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(Field::rational(), "abc"), Error);
}
