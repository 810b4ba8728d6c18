#include <numeric>
#include <tuple>

#include <catch2/catch_amalgamated.hpp>

#include "fano/bott.hpp"
#include "support/oracles.hpp"

using namespace fano;

TEST_CASE("expected dimension") {
  CHECK(expected_dimension(1, 3, 3) == 0);
  CHECK(expected_dimension(1, 5, 4) == 0);
  CHECK(expected_dimension(1, 3, 4) == 2);
  CHECK(expected_dimension(1, 4, 3) == -1);
  CHECK_THROWS_AS(expected_dimension(3, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(expected_dimension(1, 0, 3), InvalidArgument);
}

TEST_CASE("problem instance gates") {
  CHECK_THROWS_AS(ProblemInstance(1, 4, 3).require_computable(), NegativeDelta);
  CHECK_THROWS_AS(ProblemInstance(1, 4, 3).require_computable(true), NegativeDelta);

  const ProblemInstance quadric_planes(2, 2, 4);  // d = 2, n < 2k+1
  CHECK_FALSE(quadric_planes.hypothesis_holds());
  CHECK_THROWS_AS(quadric_planes.require_computable(), HypothesisViolation);
  CHECK_NOTHROW(quadric_planes.require_computable(true));

  CHECK(ProblemInstance(1, 2, 3).hypothesis_holds());  // n = 2k+1
  CHECK(ProblemInstance(1, 3, 2).hypothesis_holds() == true);
}

TEST_CASE("S_I examples") {
  CHECK(s_term(WeightVector{1, 2}, IndexSet({1, 2}, 2), 2) == 24);
  CHECK(s_term(WeightVector{1, 2, 3, 4}, IndexSet({1, 2}, 4), 1) == 2);
  CHECK(s_term(WeightVector{1, 2, 3, 4}, IndexSet({1, 2}, 4), 3) == 360);
}

TEST_CASE("S_I against brute-force compositions and its factor count") {
  const WeightVector w{3, -1, 4, 7, -5};
  const IndexSet I({1, 3, 5}, 5);
  for (unsigned d = 1; d <= 5; ++d) {
    BigInt expected = 1;
    for (const auto& v : testing::compositions_brute(d, 3)) expected *= v[0] * w.h(1) + v[1] * w.h(3) + v[2] * w.h(5);
    CHECK(s_term(w, I, d) == expected);

    // with every weight 1 each factor equals d
    BigInt all_d;
    mpz_pow_ui(all_d.get_mpz_t(), BigInt(d).get_mpz_t(), binomial(d + 2, d).get_ui());
    CHECK(s_term(WeightVector{1, 1, 1, 1, 1}, I, d) == all_d);
  }
}

TEST_CASE("Q_I examples") {
  CHECK(q_term(WeightVector{1, 2, 3, 4}, IndexSet({1, 2}, 4)) == 7);
  CHECK(q_term(WeightVector{1, 2, 3}, IndexSet({1, 2, 3}, 3)) == 0);
  CHECK(q_term(WeightVector{-1, 0, 2, 5}, IndexSet({2, 4}, 4)) == 1);
}

TEST_CASE("T_I examples") {
  CHECK(t_term(WeightVector{1, 2, 3, 4}, IndexSet({1, 2}, 4)) == 12);
  CHECK(t_term(WeightVector{1, 2, 3}, IndexSet({1, 2, 3}, 3)) == 1);
  CHECK(t_term(WeightVector{0, 1, 5}, IndexSet({2}, 3)) == -4);
}

TEST_CASE("T_I has (k+1)(n-k) factors") {
  // weight 2 inside I and 0 outside makes every factor 2
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned k = 0; k < n; ++k) {
      std::vector<unsigned> members(k + 1);
      std::iota(members.begin(), members.end(), 1u);
      std::vector<BigInt> h(n + 1, 0);
      for (unsigned i = 0; i <= k; ++i) h[i] = 2;
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), 2, (k + 1) * (n - k));
      CHECK(t_term(WeightVector(h), IndexSet(members, n + 1)) == expected);
    }
}

TEST_CASE("BottTerm holds S Q^delta / T exactly") {
  const ProblemInstance p(1, 3, 4);
  const WeightVector w{1, 2, 3, 4, 5};
  for (const IndexSet& I : enumerate_index_sets(5, 2)) {
    const BottTerm t = bott_term(p, w, I);
    CHECK(t.index_set == I);
    CHECK(t.term * t.t_value == t.s_value * t.q_value * t.q_value);
    CHECK(t.term.get_den() > 0);
  }
}

TEST_CASE("Q_I^0 is 1 even when Q_I vanishes") {
  // delta = 0 with a complement summing to zero
  const ProblemInstance p(1, 3, 3);
  const WeightVector w{5, 7, 2, -2};
  const BottTerm t = bott_term(p, w, IndexSet({1, 2}, 4));
  CHECK(t.q_value == 0);
  CHECK(t.term * t.t_value == t.s_value);
  CHECK(fano_degree_bott(p, w) == 27);
}

TEST_CASE("unvalidated weights trip the division guard") {
  const ProblemInstance p(1, 3, 3);
  CHECK_THROWS_AS(bott_term(p, WeightVector{1, 1, 2, 3}, IndexSet({1, 3}, 4)), InternalError);
  CHECK_THROWS_AS(fano_degree_bott(p, WeightVector{1, 1, 2, 3}), DistinctnessViolation);
  CHECK_THROWS_AS(fano_degree_bott(p, WeightVector{1, 2, 3}), InvalidArgument);
}

TEST_CASE("degree examples") {
  CHECK(fano_degree_bott(ProblemInstance(1, 3, 3), WeightVector{1, 2, 3, 4}) == 27);
  CHECK(fano_degree_bott(ProblemInstance(1, 5, 4), sequential_weights(5)) == 2875);
  CHECK(fano_degree_bott(ProblemInstance(1, 5, 4), WeightVector{-7, 3, 11, 0, 2}) == 2875);
  CHECK(fano_degree_bott(ProblemInstance(0, 3, 2), WeightVector{4, -1, 9}) == 3);
  CHECK(fano_degree_bott(ProblemInstance(1, 3, 4), random_weights(5, 3, 50)) == 45);
}

TEST_CASE("degree errors") {
  CHECK_THROWS_AS(fano_degree_bott(ProblemInstance(1, 4, 3), sequential_weights(4)), NegativeDelta);
  CHECK_THROWS_AS(fano_degree_bott(ProblemInstance(2, 2, 4), sequential_weights(5)), HypothesisViolation);
}

TEST_CASE("forced hypothesis still evaluates the formula") {
  // planes on a quadric in P^4: the residue sum is defined and integral
  const ProblemInstance p(2, 2, 4);
  REQUIRE(p.delta() == 0);
  const BigInt v = fano_degree_bott(p, sequential_weights(5), {1, true});
  CHECK(v == fano_degree_bott(p, random_weights(5, 9, 100), {1, true}));
}

TEST_CASE("lines on hypersurfaces via the pair form") {
  CHECK(lines_on_hypersurface(3, WeightVector{1, 2, 3, 4}) == 27);
  CHECK(lines_on_hypersurface(4, sequential_weights(5)) == 2875);
  CHECK(lines_on_hypersurface(5, random_weights(6, 11, 100)) == 698005);
  for (unsigned n = 3; n <= 6; ++n) {
    const auto w = random_weights(n + 1, n, 40);
    CHECK(lines_on_hypersurface(n, w) == fano_degree_bott(ProblemInstance(1, 2 * n - 3, n), w));
  }
  CHECK_THROWS_AS(lines_on_hypersurface(2, sequential_weights(3)), InvalidArgument);
  CHECK_THROWS_AS(lines_on_hypersurface(3, WeightVector{1, 2, 2, 4}), DistinctnessViolation);
}

TEST_CASE("P^2 localization identity") {
  CHECK(p2_localization_identity(WeightVector{1, 2, 3}) == 1);
  CHECK(p2_localization_identity(WeightVector{0, 1, -1}) == 1);
  CHECK(p2_localization_identity(WeightVector{5, 11, -7}) == 1);
  CHECK_THROWS_AS(p2_localization_identity(WeightVector{1, 1, 3}), DistinctnessViolation);
  CHECK_THROWS_AS(p2_localization_identity(WeightVector{1, 2}), InvalidArgument);
}

TEST_CASE("each term is invariant under scaling the weights") {
  const ProblemInstance p(1, 3, 4);
  const WeightVector w = random_weights(5, 17, 30);
  for (long c : {2L, -3L, 7L, -1L}) {
    const WeightVector cw = w.scaled(c);
    for (const IndexSet& I : enumerate_index_sets(5, 2)) CHECK(bott_term(p, w, I).term == bott_term(p, cw, I).term);
  }
}

TEST_CASE("sum is invariant under translating the weights") {
  for (const auto& [k, d, n] : {std::tuple{1u, 3u, 4u}, {0u, 4u, 3u}, {2u, 3u, 6u}, {1u, 6u, 5u}}) {
    const ProblemInstance p(k, d, n);
    const WeightVector w = random_weights(n + 1, 5, 25);
    const BigInt base = fano_degree_bott(p, w);
    for (long c : {1L, -13L, 100L}) CHECK(fano_degree_bott(p, w.shifted(c)) == base);
  }
}

TEST_CASE("parallel reduction is bit-identical to serial") {
  for (const auto& [k, d, n] : {std::tuple{2u, 3u, 8u}, {1u, 6u, 8u}, {2u, 1u, 8u}}) {
    const ProblemInstance p(k, d, n);
    const WeightVector w = random_weights(n + 1, 21, 60);
    const ExactRational serial = bott_residue_sum(p, w, {1, false});
    for (unsigned threads : {2u, 3u, 4u, 7u, 1000u}) CHECK(bott_residue_sum(p, w, {threads, false}) == serial);
    CHECK(serial.get_den() == 1);
  }
}
