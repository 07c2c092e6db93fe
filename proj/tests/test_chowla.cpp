#include <doctest.h>

#include "chowla2/chowla.hpp"

using namespace chowla2;

namespace {

CorrelationSpec make_spec(const Field& f, unsigned n, const std::vector<std::string>& als,
                          std::vector<int> eps) {
  std::vector<Poly> alphas;
  for (const auto& s : als) alphas.push_back(Poly::parse(f, s));
  return CorrelationSpec(f, n, alphas, std::move(eps));
}

}  // namespace

TEST_CASE("brute force basics") {
  const Field f2(1), f4(2);

  // r = 1, eps = 1: sum of mu over monic polynomials vanishes for n >= 2.
  for (unsigned n = 2; n <= 4; ++n)
    CHECK(autocorrelation_bruteforce(make_spec(f2, n, {"0"}, {1})) == 0);

  // n = 1: every term is -1, so C = (-1)^(sum eps) q.
  CHECK(autocorrelation_bruteforce(make_spec(f2, 1, {"0"}, {1})) == -2);
  CHECK(autocorrelation_bruteforce(make_spec(f2, 1, {"0", "1"}, {1, 1})) == 2);
  CHECK(autocorrelation_bruteforce(make_spec(f4, 1, {"0"}, {2})) == 4);

  // q=2, n=2, alphas (x, x+1), eps (2,2): C = 2 (full correlation).
  CHECK(autocorrelation_bruteforce(make_spec(f2, 2, {"x", "x+1"}, {2, 2})) == 2);

  CHECK_THROWS_AS(make_spec(f2, 2, {"x", "x"}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(f2, 2, {"x^2"}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(f2, 2, {"x"}, {3}), std::invalid_argument);
}

TEST_CASE("character-sum path equals brute force") {
  const Field f2(1), f4(2);
  CHECK_THROWS_AS(autocorrelation_charsum(make_spec(f2, 2, {"x"}, {2})),
                  std::invalid_argument);

  // Spot example from the n = 3 range plus exhaustive small sweeps.
  const auto spec = make_spec(f2, 3, {"0", "1"}, {1, 1});
  const long long diff =
      autocorrelation_bruteforce(spec) - autocorrelation_charsum(spec);
  CHECK(diff == 0);

  for (const Field& f : {f2, f4}) {
    for (unsigned n = 1; n <= 3; ++n) {
      const std::vector<std::string> als =
          n == 1 ? std::vector<std::string>{"0", "1"}
                 : std::vector<std::string>{"0", "1", "x", "x+1"};
      for (std::size_t i = 0; i < als.size(); ++i)
        for (std::size_t j = i + 1; j < als.size(); ++j)
          for (int mask = 0; mask < 3; ++mask) {
            const auto s = make_spec(f, n, {als[i], als[j]},
                                     {mask & 1 ? 2 : 1, mask & 2 ? 2 : 1});
            const long long b = autocorrelation_bruteforce(s);
            const long long c = autocorrelation_charsum(s);
            CHECK(b == c);
            // the coarse contract: discrepancy within r q^(n-1)
            const long long lim = 2 * static_cast<long long>(std::pow(f.size(), n - 1));
            CHECK(std::llabs(b - c) <= lim);
          }
    }
  }

  // r = 3 with mixed exponents.
  for (int mask = 0; mask < 7; ++mask) {
    const auto s = make_spec(f2, 3, {"0", "x", "x^2+1"},
                             {mask & 1 ? 2 : 1, mask & 2 ? 2 : 1, mask & 4 ? 2 : 1});
    CHECK(autocorrelation_bruteforce(s) == autocorrelation_charsum(s));
  }
}

TEST_CASE("theorem bound arithmetic") {
  CHECK(theorem_bound(2, 3, 2) == doctest::Approx(168.941125));
  CHECK(theorem_bound_holds(168, 2, 3, 2));
  CHECK_FALSE(theorem_bound_holds(169, 2, 3, 2));
  CHECK(theorem_bound_holds(-150, 2, 3, 2));
  // monotone in r, n, q
  CHECK(theorem_bound(2, 3, 2) < theorem_bound(2, 3, 3));
  CHECK(theorem_bound(2, 3, 2) < theorem_bound(2, 4, 2));
  CHECK(theorem_bound(2, 3, 2) < theorem_bound(4, 3, 2));
}

TEST_CASE("n2 classification") {
  const Field f2(1), f4(2);

  // (x, x+1) with eps (1,1): case 2, C = -2.
  {
    const auto cl = n2_classify(make_spec(f2, 2, {"x", "x+1"}, {1, 1}));
    CHECK(cl.which == N2Case::kBNonEmpty);
    CHECK(cl.C == -2);
    CHECK(cl.relation_ok);
  }
  // (x, x+1) with eps (2,2): case 3, C = q(q - #A) = 2.
  {
    const auto cl = n2_classify(make_spec(f2, 2, {"x", "x+1"}, {2, 2}));
    CHECK(cl.which == N2Case::kFullCorrelation);
    CHECK(cl.C == 2);
    CHECK(cl.relation_ok);
  }
  // q=4: (x, x+1, x+w, x+w^2) all eps 1: case 3, C = 4 * 3 = 12.
  {
    const auto cl = n2_classify(make_spec(f4, 2, {"x", "x+1", "x+0x2", "x+0x3"}, {1, 1, 1, 1}));
    CHECK(cl.which == N2Case::kFullCorrelation);
    CHECK(cl.C == 12);
    CHECK(cl.relation_ok);
  }
  // gamma nonempty: single alpha with eps 1.
  {
    const auto cl = n2_classify(make_spec(f2, 2, {"x"}, {1}));
    CHECK(cl.which == N2Case::kGammaNonEmpty);
    CHECK(cl.relation_ok);
  }
  CHECK_THROWS_AS(n2_classify(make_spec(f2, 3, {"x"}, {1})), std::invalid_argument);
}

TEST_CASE("berl sum fibers") {
  const Field f2(1);
  const auto spec = make_spec(f2, 3, {"0", "1"}, {1, 1});
  const RatFun p = berl_sum_ratfun({f2.one(), f2.zero()}, spec);
  CHECK(p.height() <= 2 * 2);
  CHECK(p.field() == f2);
}

TEST_CASE("bad sets") {
  const Field f2(1), f4(2);
  {
    const auto rep = bad_sets(f2, 3, {Poly(f2), Poly::parse(f2, "1")});
    CHECK(rep.points == 4);
    CHECK(rep.covering_ok);
    CHECK(rep.bound_A_ok);
    CHECK(rep.bound_B_ok);
    CHECK(rep.bound_C_ok);
    CHECK(rep.bound_G_ok);
    CHECK(rep.fibers_ok);
  }
  {
    const auto rep = bad_sets(f4, 3, {Poly(f4), Poly::parse(f4, "x")});
    CHECK(rep.points == 16);
    CHECK(rep.covering_ok);
    CHECK(rep.fibers_ok);
  }
  // translation invariance of C under shifting all alphas.
  {
    const auto s1 = make_spec(f2, 3, {"x", "x+1"}, {1, 1});
    const auto s2 = make_spec(f2, 3, {"0", "1"}, {1, 1});
    CHECK(autocorrelation_bruteforce(s1) == autocorrelation_bruteforce(s2));
  }
  CHECK_THROWS_AS(bad_sets(f2, 2, {Poly(f2), Poly::parse(f2, "1")}), std::invalid_argument);
}

TEST_CASE("theorem verification sweep (small)") {
  const Field f2(1);
  const TheoremReport r = verify_theorem(f2, 3, 2);
  CHECK(r.all_ok);
  CHECK(r.specs_checked == r.specs_total);
  CHECK(r.specs_total == 28 * 3);
  CHECK_THROWS_AS(verify_theorem(f2, 2, 2), std::invalid_argument);

  // Deterministic stratified sampling kicks in above the budget.
  const TheoremReport s1 = verify_theorem(f2, 3, 2, /*budget=*/300, /*seed=*/5);
  CHECK(s1.all_ok);
  CHECK(s1.specs_checked > 0);
  CHECK(s1.specs_checked < s1.specs_total);
  const TheoremReport s2 = verify_theorem(f2, 3, 2, 300, 5);
  CHECK(s1.specs_checked == s2.specs_checked);
}

TEST_CASE("family identities n=3,4") {
  const Field f2(1);
  const FamilyReport r3 = verify_family_identities(f2, 3);
  CHECK(r3.ok());
  CHECK(r3.grid_q >= 12);
  const FamilyReport r4 = verify_family_identities(f2, 4);
  CHECK(r4.ok());
  CHECK_THROWS_AS(verify_family_identities(f2, 9), std::invalid_argument);
}

TEST_CASE("nonvanishing witnesses n=3") {
  const Field f2(1);
  const NonvanishingReport r = verify_nonvanishing(f2, 3);
  CHECK(r.family_ok);
  CHECK(r.witness_ok);
  CHECK(r.alphas_checked == 7);
  CHECK(r.witnesses_found == 7);
}

TEST_CASE("square independence q=2 e=1,2 n=3") {
  const Field f2(1);
  const std::vector<Poly> alphas = {Poly(f2), Poly::parse(f2, "1")};
  for (unsigned e : {1u, 2u}) {
    const SqIndepReport r = square_independence_check(f2, 3, alphas, e);
    CHECK(r.bound_ok);
    CHECK(r.witness_ok);
    CHECK(r.points == (e == 1 ? 4u : 16u));
  }
}

TEST_CASE("pellet identity small") {
  for (unsigned k : {1u, 2u}) {
    const Field f(k);
    for (unsigned n = 1; n <= 3; ++n) {
      const PelletReport r = verify_pellet(f, n);
      CHECK(r.ok);
      CHECK(r.squarefree_checked + r.nonsquarefree_checked ==
            static_cast<std::uint64_t>(std::pow(f.size(), n)));
    }
  }
}
