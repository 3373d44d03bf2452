#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <fstream>
#include <sstream>

#include "vanorder/chartab.hpp"
#include "vanorder/textio.hpp"

using namespace vanorder;

namespace {
PermutationGroup make(const std::vector<std::string>& cycles, int degree) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  return PermutationGroup(std::move(gens));
}
PermutationGroup s3() { return make({"(1 2 3)", "(1 2)"}, 3); }
PermutationGroup s4() { return make({"(1 2 3 4)", "(1 2)"}, 4); }
PermutationGroup a5() { return make({"(1 2 3 4 5)", "(3 4 5)"}, 5); }
PermutationGroup q8() { return make({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8); }

void check_orthogonality(const CharacterTable& T) {
  std::uint64_t n = T.group.order();
  // rows: sum_j |C_j| chi_a(j) conj(chi_b(j)) = |G| delta_ab
  for (std::size_t a = 0; a < T.r; ++a)
    for (std::size_t b = a; b < T.r; ++b) {
      Cyclotomic sum(0);
      for (std::size_t j = 0; j < T.r; ++j)
        sum += Cyclotomic(static_cast<long long>(T.classes[j].size)) * T.values[a][j] *
               T.values[b][j].conj();
      if (a == b)
        CHECK(sum == Cyclotomic(static_cast<long long>(n)));
      else
        CHECK(sum.is_zero());
    }
  // columns: sum_t chi_t(i) conj(chi_t(j)) = delta_ij |C_G(g_i)|
  for (std::size_t i = 0; i < T.r; ++i)
    for (std::size_t j = i; j < T.r; ++j) {
      Cyclotomic sum(0);
      for (std::size_t t = 0; t < T.r; ++t) sum += T.values[t][i] * T.values[t][j].conj();
      if (i == j)
        CHECK(sum == Cyclotomic(static_cast<long long>(n / T.classes[i].size)));
      else
        CHECK(sum.is_zero());
    }
}
}  // namespace

TEST_CASE("exponent") {
  CHECK(exponent(s4()) == 12);
  CHECK(exponent(a5()) == 30);
  CHECK(exponent(make({"(1 2 3 4 5 6)"}, 6)) == 6);
}

TEST_CASE("power maps") {
  PermutationGroup G = s4();
  std::vector<int> id_map = power_map(G, 1);
  for (std::size_t i = 0; i < id_map.size(); ++i) CHECK(id_map[i] == static_cast<int>(i));
  // canonical S4 classes: [1A, 2A(double transpositions), 2B(transpositions), 3A, 4A]
  std::vector<int> sq = power_map(G, 2);
  CHECK(sq == std::vector<int>{0, 0, 0, 3, 1});  // 4A^2 = double transposition class
  std::vector<int> full = power_map(G, exponent(G));
  for (int c : full) CHECK(c == 0);
}

TEST_CASE("class multiplication coefficients") {
  PermutationGroup G = s3();
  ClassAlgebraData alg = class_mult_coeffs(G);
  REQUIRE(alg.r == 3);
  // identity class: a(0, j, k) = delta_jk
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(alg.at(0, j, k) == (j == k ? 1u : 0u));
  // pairs of transpositions multiplying to a fixed 3-cycle (oracle-counted: 3)
  CHECK(alg.at(1, 1, 2) == 3);

  PermutationGroup s = s4();
  ClassAlgebraData a4 = class_mult_coeffs(s);
  const auto& cls = conjugacy_classes(s);
  for (std::size_t i = 0; i < a4.r; ++i)
    for (std::size_t j = 0; j < a4.r; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < a4.r; ++k) sum += a4.at(i, j, k) * cls[k].size;
      CHECK(sum == cls[i].size * cls[j].size);
    }
}

TEST_CASE("dixon primes") {
  CHECK(dixon_prime(s4()) == 13);
  CHECK(dixon_prime(make({"(1 2)"}, 2)) == 3);
  CHECK(dixon_prime(a5()) == 31);
}

TEST_CASE("character table of S3") {
  CharacterTable T = character_table(s3());
  REQUIRE(T.r == 3);
  CHECK(T.degrees == std::vector<std::uint64_t>{1, 1, 2});
  // first row is trivial
  for (std::size_t i = 0; i < 3; ++i) CHECK(T.values[0][i] == Cyclotomic(1));
  // the degree-2 row is (2, 0, -1) on classes (1A, 2A, 3A)
  CHECK(T.values[2][0] == Cyclotomic(2));
  CHECK(T.values[2][1].is_zero());
  CHECK(T.values[2][2] == Cyclotomic(-1));
  check_orthogonality(T);
}

TEST_CASE("character table of C2") {
  CharacterTable T = character_table(make({"(1 2)"}, 2));
  REQUIRE(T.r == 2);
  CHECK(T.values[0][0] == Cyclotomic(1));
  CHECK(T.values[0][1] == Cyclotomic(1));
  CHECK(T.values[1][0] == Cyclotomic(1));
  CHECK(T.values[1][1] == Cyclotomic(-1));
}

TEST_CASE("character table of S4") {
  CharacterTable T = character_table(s4());
  CHECK(T.degrees == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
  std::uint64_t ssq = 0;
  for (std::uint64_t d : T.degrees) {
    ssq += d * d;
    CHECK(T.group.order() % d == 0);  // degrees divide |G|
  }
  CHECK(ssq == 24);
  check_orthogonality(T);
}

TEST_CASE("character tables of A5 and Q8 are exactly orthogonal") {
  check_orthogonality(character_table(a5()));
  check_orthogonality(character_table(q8()));
  CharacterTable T = character_table(a5());
  CHECK(T.degrees == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
}

TEST_CASE("nonlinear rows vanish somewhere") {
  for (PermutationGroup G : {s3(), s4(), a5(), q8()}) {
    CharacterTable T = character_table(G);
    for (std::size_t t = 0; t < T.r; ++t) {
      if (T.degrees[t] == 1) continue;
      bool has_zero = false;
      for (std::size_t i = 0; i < T.r; ++i) has_zero = has_zero || T.values[t][i].is_zero();
      CHECK(has_zero);
    }
  }
}

TEST_CASE("p-defect zero") {
  CharacterTable T = character_table(a5());
  // the degree-5 row has 5-defect zero and vanishes on all 5-singular classes
  std::size_t row5 = 0;
  for (std::size_t t = 0; t < T.r; ++t)
    if (T.degrees[t] == 5) row5 = t;
  CHECK(is_p_defect_zero(T, row5, 5));
  for (std::size_t i = 0; i < T.r; ++i)
    if (T.classes[i].element_order % 5 == 0) CHECK(T.values[row5][i].is_zero());
  CHECK(!is_p_defect_zero(T, 0, 5));  // trivial character, 5 divides |G|
  CHECK(is_p_defect_zero(T, 0, 7));   // 7 does not divide |A5|
}

TEST_CASE("defect-zero rows vanish on p-singular classes") {
  for (PermutationGroup G : {s4(), a5(), q8(), s3()}) {
    CharacterTable T = character_table(G);
    for (std::uint64_t p : prime_divisors(G.order()))
      for (std::size_t t = 0; t < T.r; ++t) {
        if (!is_p_defect_zero(T, t, p)) continue;
        for (std::size_t i = 0; i < T.r; ++i)
          if (T.classes[i].element_order % p == 0) CHECK(T.values[t][i].is_zero());
      }
  }
}

TEST_CASE("Galois stability: power maps permute rows") {
  for (PermutationGroup G : {s4(), a5()}) {
    CharacterTable T = character_table(G);
    std::uint64_t m = T.group_exponent;
    for (std::uint64_t k = 2; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      for (std::size_t t = 0; t < T.r; ++t) {
        std::vector<Cyclotomic> mapped;
        for (std::size_t i = 0; i < T.r; ++i) mapped.push_back(T.values[t][i].galois(k));
        bool found = false;
        for (std::size_t u = 0; u < T.r && !found; ++u) {
          bool same = true;
          for (std::size_t i = 0; i < T.r && same; ++i) same = (mapped[i] == T.values[u][i]);
          found = same;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("floating-point cross check of row orthogonality") {
  for (PermutationGroup G : {s4(), a5()}) {
    CharacterTable T = character_table(G);
    for (std::size_t a = 0; a < T.r; ++a)
      for (std::size_t b = 0; b < T.r; ++b) {
        std::complex<double> sum = 0;
        for (std::size_t j = 0; j < T.r; ++j)
          sum += static_cast<double>(T.classes[j].size) * T.values[a][j].to_complex() *
                 std::conj(T.values[b][j].to_complex());
        double expect = (a == b) ? static_cast<double>(T.group.order()) : 0.0;
        CHECK(std::abs(sum - expect) < 1e-6 * T.group.order());
      }
  }
}

TEST_CASE("stored power maps cover the divisors of the exponent") {
  PermutationGroup G = s4();
  CharacterTable T = character_table(G);
  for (std::uint64_t k : divisors(T.group_exponent)) {
    REQUIRE(T.power_maps.count(k) == 1);
    CHECK(T.power_maps.at(k) == power_map(G, k));
  }
  CHECK(T.power_maps.size() == divisors(T.group_exponent).size());
}

TEST_CASE("deterministic rendering") {
  std::string r1 = render_character_table(character_table(s4()), "S4");
  std::string r2 = render_character_table(character_table(s4()), "S4");
  CHECK(r1 == r2);
  CHECK(r1.substr(0, 28) == "group S4 order 24 classes 5\n");
}

TEST_CASE("degree sequences across the corpus match independent computations") {
  // expected sequences computed by a separate numeric class-matrix
  // diagonalization, frozen here
  struct Expected {
    const char* file;
    std::vector<std::uint64_t> degrees;
  };
  const std::vector<Expected> cases = {
      {"d18.gens", {1, 1, 2, 2, 2, 2}},
      {"f20.gens", {1, 1, 1, 1, 4}},
      {"sl23.gens", {1, 1, 1, 2, 2, 2, 3}},
      {"g72.gens", {1, 1, 2, 2, 2, 2, 3, 3, 6}},
      {"s5.gens", {1, 1, 4, 4, 5, 5, 6}},
      {"a6.gens", {1, 5, 5, 8, 8, 9, 10}},
      {"psl27.gens", {1, 3, 3, 6, 7, 8}},
      {"psl28.gens", {1, 7, 7, 7, 7, 8, 9, 9, 9}},
      {"a7.gens", {1, 6, 10, 10, 14, 14, 15, 21, 35}},
      {"m11.gens", {1, 10, 10, 10, 11, 16, 16, 44, 45, 55}},
  };
  for (const Expected& c : cases) {
    std::ifstream in(std::string(VANORDER_DATA_DIR) + "/corpus/" + c.file);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    PermutationGroup G(parse_generator_file(buf.str()).gens);
    CharacterTable T = character_table(G);
    INFO(c.file);
    CHECK(T.degrees == c.degrees);
  }
}

TEST_CASE("capacity errors") {
  PermutationGroup big = PermutationGroup(
      {parse_cycles("(1 2 3 4 5 6 7)", 7), parse_cycles("(5 6 7)", 7)}, /*cap=*/100);
  CHECK_THROWS_AS(character_table(big), capacity_error);
}
