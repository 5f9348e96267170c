#include <doctest.h>

#include "biop/bioperate.hpp"
#include "support/oracles.hpp"

using namespace biop;
using oracle::parse;

namespace {

void check_sound(const Multiset& factors, const ConstructionTrace& trace) {
  CAPTURE(render(factors));
  CAPTURE(render(trace.result));
  RingElement mu = pi(factors);
  CHECK(trace.target == mu);
  CHECK(sigma(trace.result) == mu);
  CHECK(pi(trace.result) == mu);
  CHECK_FALSE(classify(trace.result).is_trivial);
  CHECK(is_minimal(trace.result).minimal);
  CHECK(replay(trace) == trace.result);
  // Every non-unit factor survives, unless it was rewritten.
  for (const auto& [x, k] : factors.entries()) {
    if (is_unit(x)) continue;
    bool rewritten = false;
    for (const auto& t : trace.transforms) rewritten |= t.removed == x;
    if (!rewritten) CHECK(trace.result.count(x) >= k);
  }
}

}  // namespace

TEST_CASE("appendage catalogs are sound") {
  for (auto ring : {RingId::nat(), RingId::integers(), RingId::gaussian(), RingId::eisenstein(), RingId::sqrt2()}) {
    CAPTURE(ring.name());
    for (const auto& a : appendage_catalog(ring)) {
      CAPTURE(a.label);
      CHECK(pi(a.elements) == one(ring));
      CHECK(sigma(a.elements) == a.sum_delta);
    }
  }
  CHECK(appendage_catalog(RingId::integers()).size() == 3);
  CHECK(appendage_catalog(RingId::nat()).size() == 1);
  auto g = appendage_catalog(RingId::gaussian());
  CHECK(find_appendage(g, "T+2i").elements == parse(RingId::gaussian(), "i,i,-1,1"));
  CHECK(find_appendage(g, "T+2i").sum_delta == make_gaussian(0, 2));
  auto w = appendage_catalog(RingId::eisenstein());
  CHECK(find_appendage(w, "Tw").sum_delta == make_eisenstein(0, 1));
  CHECK(find_appendage(w, "T-2w").elements == parse(RingId::eisenstein(), "-1w,-1-1w,-1,1,1"));
  CHECK_THROWS_AS(find_appendage(w, "T+2i"), Error);
  CHECK_THROWS_AS(appendage_catalog(RingId::rational()), Error);
  CHECK_THROWS_AS(appendage_catalog(RingId::lunar()), Error);
}

TEST_CASE("natural numbers") {
  auto n = RingId::nat();
  auto t = bioperate_nat(parse(n, "2,2"));
  CHECK(t.result == parse(n, "2,2"));
  t = bioperate_nat(parse(n, "2,4"));
  CHECK(t.result == parse(n, "1,1,2,4"));
  t = bioperate_nat(parse(n, "3,3"));
  CHECK(t.result == parse(n, "1,1,1,3,3"));
  CHECK(t.target == make_nat(9));
  CHECK_THROWS_AS(bioperate_nat(parse(n, "1,4")), Error);
  CHECK_THROWS_AS(bioperate_nat(parse(n, "4")), Error);
  // Length m + k - sum of the factors.
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Multiset f(n);
    int k = 2 + rng() % 4;
    std::int64_t m = 1, total = 0;
    for (int j = 0; j < k; ++j) {
      std::int64_t a = 2 + rng() % 9;
      f.insert(make_nat(a));
      m *= a;
      total += a;
    }
    auto r = bioperate_nat(f);
    CHECK(r.result.size() == static_cast<std::uint64_t>(m + k - total));
    check_sound(f, r);
  }
}

TEST_CASE("integers") {
  auto z = RingId::integers();
  auto t = bioperate_int(parse(z, "3,-5"));
  CHECK(t.result == parse(z, "3,-5,-1*14,1"));
  REQUIRE(t.appendages.size() == 1);
  CHECK(t.appendages[0].label == "T-1");
  CHECK(t.appendages[0].count == 13);
  REQUIRE(t.trimmed.size() == 1);
  CHECK(t.trimmed[0].removed == parse(z, "1,1,-1,-1"));
  CHECK(t.trimmed[0].times == 6);
  check_sound(parse(z, "3,-5"), t);
  CHECK(bioperate_int(parse(z, "2,3")).result == parse(z, "1,2,3"));
  check_sound(parse(z, "-2,-2"), bioperate_int(parse(z, "-2,-2")));
  CHECK_THROWS_AS(bioperate_int(parse(z, "1,5")), Error);
  CHECK_THROWS_AS(bioperate_int(parse(z, "0,5")), Error);
  CHECK_THROWS_AS(bioperate_int(parse(z, "5")), Error);
}

TEST_CASE("gaussian integers") {
  auto g = RingId::gaussian();
  auto f = parse(g, "1+2i,2+3i");
  auto t = bioperate_gaussian(f);
  CHECK(t.result == parse(g, "1+2i,2+3i,i,i,-1*7"));
  CHECK(t.target == make_gaussian(-4, 7));
  check_sound(f, t);
  CHECK(bioperate_gaussian(parse(g, "2,2")).result == parse(g, "2,2"));
  auto u = bioperate_gaussian(parse(g, "1+i,1-i"));
  CHECK(u.target == make_gaussian(2, 0));
  check_sound(parse(g, "1+i,1-i"), u);
  CHECK_THROWS_AS(bioperate_gaussian(parse(g, "i,2")), Error);
  CHECK_THROWS_AS(bioperate_gaussian(parse(g, "0,2,2")), Error);
}

TEST_CASE("gaussian odd imaginary gap uses the rewrite") {
  auto g = RingId::gaussian();
  // sigma = 3 + i, pi = 2 + 2i: imaginary parts differ in parity.
  auto f = parse(g, "1+i,2");
  auto t = bioperate_gaussian(f);
  REQUIRE(t.transforms.size() == 1);
  CHECK(t.transforms[0].removed == make_gaussian(1, 1));
  CHECK(t.transforms[0].inserted == parse(g, "-1+1i,i,-1"));
  check_sound(f, t);
}

TEST_CASE("eisenstein integers") {
  auto w = RingId::eisenstein();
  auto f = parse(w, "2+1w,2+1w");
  auto t = bioperate_eisenstein(f);
  CHECK(t.target == make_eisenstein(3, 3));
  check_sound(f, t);
  CHECK(bioperate_eisenstein(parse(w, "2,2")).result == parse(w, "2,2"));
  CHECK(bioperate_eisenstein(parse(w, "2,3")).result == parse(w, "1,2,3"));
}

TEST_CASE("sqrt2 integers") {
  auto r = RingId::sqrt2();
  CHECK(bioperate_sqrt2(parse(r, "2,3")).result == parse(r, "1,2,3"));
  auto f = parse(r, "1r,1r");
  auto t = bioperate_sqrt2(f);
  CHECK(t.target == make_sqrt2(2, 0));
  check_sound(f, t);
  auto already = parse(r, "2+1r,1r");
  CHECK(bioperate_sqrt2(already).result == already);
  // sigma = 3 + 2r, pi = 2 + 3r: odd gap, needs the rewrite of 1r.
  auto odd = parse(r, "3+1r,1r");
  auto p = bioperate_sqrt2(odd);
  REQUIRE(p.transforms.size() == 1);
  CHECK(p.transforms[0].removed == make_sqrt2(0, 1));
  CHECK(p.transforms[0].inserted == parse(r, "2+1r,-1+1r"));
  check_sound(odd, p);
}

TEST_CASE("rewrites preserve the product and flip the parity") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    auto a = std::get<Gaussian>(oracle::random_element(RingId::gaussian(), rng, 30));
    if (!divisible_by_one_plus_i(a) || (a.re == 0 && a.im == 0)) continue;
    RingElement x = a;
    Multiset group(RingId::gaussian(), {mul(make_gaussian(0, 1), x), make_gaussian(0, 1), make_gaussian(-1, 0)});
    CHECK(pi(group) == x);
    CHECK(phi_parity(subtract(sigma(group), x)) == 1);
  }
  for (int i = 0; i < 500; ++i) {
    auto a = std::get<Sqrt2>(oracle::random_element(RingId::sqrt2(), rng, 30));
    if (!divisible_by_sqrt2(a)) continue;
    RingElement x = a;
    Multiset group(RingId::sqrt2(), {mul(make_sqrt2(1, 1), x), make_sqrt2(-1, 1)});
    CHECK(pi(group) == x);
    CHECK(phi_parity(subtract(sigma(group), x)) == 1);
  }
}

TEST_CASE("dispatch") {
  CHECK(bioperate(parse(RingId::integers(), "2,3")).result == parse(RingId::integers(), "1,2,3"));
  CHECK(bioperate(parse(RingId::nat(), "2,3")).result == parse(RingId::nat(), "1,2,3"));
  CHECK_THROWS_AS(bioperate(parse(RingId::rational(), "2,3")), Error);
  CHECK_THROWS_AS(bioperate(parse(RingId::lunar(), "2,3")), Error);
  CHECK_THROWS_AS(bioperate_int(parse(RingId::gaussian(), "2,3")), Error);
}

TEST_CASE("field completion") {
  auto q = RingId::rational();
  CHECK(field_complete(parse(q, "2,3")) == parse(q, "1,2,3"));
  CHECK(field_complete(parse(q, "0")) == parse(q, "0,0"));
  auto f = RingId::prime_field(11);
  CHECK(field_complete(parse(f, "2,2,2,2")) == parse(f, "2,2,2,2,2"));
  try {
    field_complete(parse(q, "1/2,2"));
    FAIL("expected ProductIsOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProductIsOne);
  }
  CHECK_THROWS_AS(field_complete(parse(RingId::integers(), "2,3")), Error);

  // The appended element is the only one that works.
  std::mt19937_64 rng(4);
  auto p = RingId::prime_field(13);
  for (int i = 0; i < 300; ++i) {
    Multiset s = oracle::random_multiset(p, rng, 12, 1, 5);
    if (pi(s) == one(p)) continue;
    Multiset done = field_complete(s);
    CHECK(is_bioperational(done));
    int working = 0;
    for (int a = 0; a < 13; ++a) {
      Multiset t = s;
      t.insert(make_residue(a, p));
      working += is_bioperational(t);
    }
    CHECK(working == 1);
  }
  for (int i = 0; i < 300; ++i) {
    Multiset s = oracle::random_multiset(q, rng, 9, 1, 4);
    if (pi(s) == one(q)) continue;
    Multiset done = field_complete(s);
    CHECK(is_bioperational(done));
    CHECK(done.size() == s.size() + 1);
  }
}

TEST_CASE("trimming") {
  auto z = RingId::integers();
  CHECK(trim_to_minimal(parse(z, "1,2,3,-1,-1,1,1")) == parse(z, "1,2,3"));
  CHECK(trim_to_minimal(parse(z, "2,2")) == parse(z, "2,2"));
  std::vector<TrimStep> steps;
  Multiset s = msum(parse(z, "3,-5"), mscale(13, parse(z, "-1,-1,1")));
  CHECK(trim_to_minimal(s, {}, &steps) == parse(z, "3,-5,-1*14,1"));
  CHECK(steps.size() == 1);
  CHECK(trim_to_minimal(parse(z, "0,0,0,2,-2")) == parse(z, "0"));
  CHECK_THROWS_AS(trim_to_minimal(parse(RingId::lunar(), "17,7")), Error);
  CHECK_THROWS_AS(trim_to_minimal(parse(z, "2,3")), Error);
}

TEST_CASE("random constructions are sound in every construction ring") {
  std::mt19937_64 rng(2718);
  for (auto ring : {RingId::integers(), RingId::gaussian(), RingId::eisenstein(), RingId::sqrt2()}) {
    CAPTURE(ring.name());
    for (int i = 0; i < 150; ++i) {
      Multiset f(ring);
      int k = 2 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) f.insert(oracle::random_non_unit(ring, rng, 6));
      check_sound(f, bioperate(f));
    }
  }
}
