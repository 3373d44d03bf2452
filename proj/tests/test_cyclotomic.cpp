#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "vanorder/cyclotomic.hpp"

using namespace vanorder;

TEST_CASE("cyclotomic polynomials") {
  CHECK(CyclotomicField::get(1)->cyclotomic_poly() == std::vector<long long>{-1, 1});
  CHECK(CyclotomicField::get(2)->cyclotomic_poly() == std::vector<long long>{1, 1});
  CHECK(CyclotomicField::get(6)->cyclotomic_poly() == std::vector<long long>{1, -1, 1});
  CHECK(CyclotomicField::get(12)->cyclotomic_poly() == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(CyclotomicField::get(8)->cyclotomic_poly() == std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(CyclotomicField::get(12)->phi() == 4);
  CHECK(CyclotomicField::get(30)->phi() == 8);
}

TEST_CASE("roots of unity behave") {
  auto f = CyclotomicField::get(12);
  Cyclotomic z = Cyclotomic::zeta_power(f, 1);
  Cyclotomic acc(1);
  for (int i = 0; i < 12; ++i) acc = acc * z;
  CHECK(acc == Cyclotomic(1));  // zeta^12 = 1
  Cyclotomic sum = Cyclotomic::zero(f);
  for (int e = 0; e < 12; ++e) sum += Cyclotomic::zeta_power(f, e);
  CHECK(sum.is_zero());  // all 12th roots sum to zero
  CHECK((z * z.conj()) == Cyclotomic(1));
}

TEST_CASE("zero test is exact") {
  auto f = CyclotomicField::get(9);
  // 1 + zeta^3 + zeta^6 = 0 in Q(zeta_9)
  Cyclotomic v = Cyclotomic(1) + Cyclotomic::zeta_power(f, 3) + Cyclotomic::zeta_power(f, 6);
  CHECK(v.is_zero());
  Cyclotomic w = Cyclotomic(1) + Cyclotomic::zeta_power(f, 3);
  CHECK(!w.is_zero());
}

TEST_CASE("ring identities and floating cross-check on random values") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> coef(-5, 5);
  for (std::uint64_t m : {1ull, 2ull, 4ull, 6ull, 9ull, 12ull, 30ull}) {
    auto f = CyclotomicField::get(m);
    auto random_val = [&] {
      std::vector<long long> c(f->phi());
      for (auto& x : c) x = coef(rng);
      return Cyclotomic(f, std::move(c));
    };
    for (int trial = 0; trial < 40; ++trial) {
      Cyclotomic a = random_val(), b = random_val(), c = random_val();
      CHECK((a * b) == (b * a));
      CHECK(((a + b) * c) == (a * c + b * c));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a - a).is_zero());
      std::complex<double> lhs = (a * b + c).to_complex();
      std::complex<double> rhs = a.to_complex() * b.to_complex() + c.to_complex();
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("galois maps permute roots of unity") {
  auto f = CyclotomicField::get(12);
  for (std::uint64_t k : {1ull, 5ull, 7ull, 11ull}) {
    for (int e = 0; e < 12; ++e) {
      Cyclotomic z = Cyclotomic::zeta_power(f, e);
      CHECK(z.galois(k) == Cyclotomic::zeta_power(f, (e * k) % 12));
    }
  }
  CHECK_THROWS_AS(Cyclotomic::zeta_power(f, 1).galois(4), input_error);
}

TEST_CASE("integer detection and rendering") {
  auto f = CyclotomicField::get(12);
  Cyclotomic five(5);
  CHECK(five.is_integer());
  CHECK(five.as_integer() == 5);
  CHECK(five.str() == "5");
  Cyclotomic z = Cyclotomic::zeta_power(f, 1);
  CHECK(!z.is_integer());
  CHECK(z.str() == "[0,1,0,0]@12");
  CHECK_THROWS_AS(z.as_integer(), domain_error);
  // integers promote into any field
  CHECK((z + Cyclotomic(0)) == z);
  CHECK((z * Cyclotomic(2) - z - z).is_zero());
}

TEST_CASE("lexicographic order is total on a fixed field") {
  auto f = CyclotomicField::get(6);
  Cyclotomic a = Cyclotomic::zeta_power(f, 1);
  Cyclotomic b = Cyclotomic(1);
  CHECK(lex_less(b, a) != lex_less(a, b));
}
