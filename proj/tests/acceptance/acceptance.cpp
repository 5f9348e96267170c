// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "biop/bioperate.hpp"
#include "biop/enumerate.hpp"
#include "biop/verify.hpp"
#include "support/oracles.hpp"

using namespace biop;
using oracle::parse;

namespace {

// Time limits in seconds. Criteria without a stated limit get a generous cap
// so a runaway search still shows up as a failure.
constexpr double kLimitOeisLength = 5.0;
constexpr double kLimitRecords = 60.0;
constexpr double kLimitField = 60.0;
constexpr double kLimitLunar = 60.0;
constexpr double kLimitFuzz = 120.0;
constexpr double kLimitDefault = 300.0;

constexpr int kPropertyCases = 500;
constexpr int kFuzzPerRing = 1000;
constexpr std::int64_t kFuzzCoefficient = 10;
constexpr std::uint64_t kOracleMaxSize = 12;

// Bioperational multisets met by criteria 1-10, keyed by ring and rendering.
std::map<std::string, Multiset> encountered;

void record(const Multiset& s) {
  if (s.empty() || s.size() > kOracleMaxSize || !is_bioperational(s)) return;
  encountered.emplace(s.ring().name() + ":" + render(s), s);
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

bool run(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit) {
    std::ostringstream t;
    t << "runtime " << secs << "s over " << limit << "s";
    o.expect(false, t.str());
  }
  std::printf("%s %2d %s (%.2fs)%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.note.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

void oeis_length(Outcome& o) {
  const std::vector<std::uint64_t> expected{1, 1, 1, 3, 1, 2, 2, 2, 2, 3, 2, 4, 2};
  std::vector<std::uint64_t> got;
  for (std::int64_t n = 2; n <= 14; ++n) {
    auto r = enumerate_nat_by_length(n);
    got.push_back(r.count());
    for (const auto& s : r.solutions) record(s);
  }
  o.expect(got == expected, "got " + join(got));
}

void oeis_records(Outcome& o) {
  const std::vector<std::int64_t> expected{2, 5, 13, 25, 37, 41, 61, 85, 113};
  auto r = records_nat(120);
  o.expect(r.positions == expected, "record positions differ");
}

void small_lengths(Outcome& o) {
  auto n = RingId::nat();
  const std::vector<std::pair<std::int64_t, std::vector<const char*>>> cases = {
      {2, {"2,2"}},
      {3, {"1,2,3"}},
      {4, {"1,1,2,4"}},
      {5, {"1,1,1,2,5", "1,1,1,3,3", "1,1,2,2,2"}},
  };
  for (const auto& [len, texts] : cases) {
    std::vector<Multiset> expected;
    for (auto t : texts) expected.push_back(parse(n, t));
    std::sort(expected.begin(), expected.end());
    auto got = enumerate_nat_by_length(len).solutions;
    o.expect(got == expected, "n=" + std::to_string(len));
  }
}

void integer_example(Outcome& o) {
  auto z = RingId::integers();
  auto trace = bioperate(parse(z, "3,-5"));
  const auto& s = trace.result;
  record(s);
  o.expect(sigma(s) == make_int(-15) && pi(s) == make_int(-15), "sum-product of construction");
  o.expect(s.contains(make_int(3)) && s.contains(make_int(-5)), "factors kept");
  o.expect(is_minimal(s).minimal, "construction minimal");
  Multiset listed = parse(z, "3,-5,-1*14,1");
  auto c = classify(listed);
  o.expect(c.is_bioperational && c.sum == make_int(-15), "listed multiset bioperational");
  o.expect(is_minimal(listed).minimal, "listed multiset minimal");
}

void gaussian_example(Outcome& o) {
  auto g = RingId::gaussian();
  auto trace = bioperate(parse(g, "1+2i,2+3i"));
  record(trace.result);
  o.expect(sigma(trace.result) == make_gaussian(-4, 7), "construction sum");
  o.expect(pi(trace.result) == make_gaussian(-4, 7), "construction product");
  o.expect(is_minimal(trace.result).minimal, "construction minimal");
  Multiset listed = parse(g, "1+2i,2+3i,i,i,-1*7");
  o.expect(sigma(listed) == make_gaussian(-4, 7), "listed sum");
  o.expect(pi(listed) == make_gaussian(-4, 7), "listed product");
}

void field_example(Outcome& o) {
  auto f = RingId::prime_field(11);
  Multiset start = parse(f, "2,2,2,2");
  Multiset done = field_complete(start);
  record(done);
  o.expect(mdiff(done, start) == parse(f, "2"), "appended element");
  auto u = uniform_field_solutions(11, 5);
  o.expect(std::find(u.begin(), u.end(), UniformSolution{2, 5}) != u.end(), "(2,5) missing");
}

void field_exhaustiveness(Outcome& o) {
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    auto r = verify_field_exhaustiveness(p, 4);
    for (const auto& s : r.found) record(s);
    for (const auto& s : r.counterexamples) record(s);
    std::string what = "p=" + std::to_string(p);
    if (!r.counterexamples.empty()) what += " counterexample " + render(r.counterexamples.front());
    o.expect(r.holds, what);
  }
}

void lunar_triviality(Outcome& o) {
  auto r = verify_lunar_triviality(2, 4);
  for (const auto& s : r.found) record(s);
  o.expect(r.holds, "triviality");
  auto l = RingId::lunar();
  auto found = brute_force_biop_search(l, lunar_pool(2), 3, {false, true});
  for (const auto& s : found) record(s);
  for (auto t : {"17,7", "2,2,2"}) {
    Multiset s = parse(l, t);
    o.expect(std::find(found.begin(), found.end(), s) != found.end(), std::string("missing ") + t);
  }
}

void property_suites(Outcome& o) {
  // pi >= sigma over elements >= 2, both in the library check and here.
  o.expect(verify_product_dominates_sum(kPropertyCases, 101).holds, "product dominates sum");
  std::mt19937_64 rng(9);
  for (int i = 0; i < kPropertyCases; ++i) {
    Multiset s(RingId::nat());
    int k = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int j = 0; j < k; ++j) s.insert(make_nat(std::uniform_int_distribution<std::int64_t>(2, 50)(rng)));
    if (std::get<Nat>(pi(s)).value < std::get<Nat>(sigma(s)).value) o.expect(false, "pi < sigma for " + render(s));
  }

  // Parity against divisibility by 1+i: multiples found by brute force.
  std::set<std::pair<std::int64_t, std::int64_t>> multiples;
  for (std::int64_t a = -30; a <= 30; ++a)
    for (std::int64_t b = -30; b <= 30; ++b) {
      auto m = std::get<Gaussian>(mul(make_gaussian(1, 1), make_gaussian(a, b)));
      multiples.insert({m.re, m.im});
    }
  for (std::int64_t a = -30; a <= 30; ++a)
    for (std::int64_t b = -30; b <= 30; ++b) {
      bool by_search = multiples.count({a, b}) > 0;
      bool same_parity = ((a - b) % 2) == 0;
      bool library = divisible_by_one_plus_i(std::get<Gaussian>(make_gaussian(a, b)));
      if (by_search != same_parity || library != same_parity) {
        o.expect(false, "1+i divisibility at " + std::to_string(a) + "," + std::to_string(b));
        return;
      }
    }

  o.expect(verify_gaussian_parity(kPropertyCases, 102).holds, "gaussian parity");
  o.expect(verify_sqrt2_parity(kPropertyCases, 103).holds, "sqrt2 parity");
  // Independent parity check: imaginary (or sqrt2) parts agree mod 2.
  for (auto ring : {RingId::gaussian(), RingId::sqrt2()}) {
    int done = 0;
    while (done < kPropertyCases) {
      Multiset s(ring);
      int k = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int j = 0; j < k; ++j) {
        RingElement x = oracle::random_element(ring, rng, 20);
        bool divisible = ring == RingId::gaussian() ? divisible_by_one_plus_i(std::get<Gaussian>(x))
                                                    : divisible_by_sqrt2(std::get<Sqrt2>(x));
        if (!divisible) s.insert(x);
      }
      if (s.empty()) continue;
      ++done;
      auto second = [&](const RingElement& x) {
        return ring == RingId::gaussian() ? std::get<Gaussian>(x).im : std::get<Sqrt2>(x).b;
      };
      auto sum = sigma(s), product = pi(s);
      if (((second(sum) - second(product)) % 2) != 0) {
        o.expect(false, ring.name() + " parity at " + render(s));
        break;
      }
    }
  }

  // Lunar digit counts, every pair of operands with at most four digits.
  std::vector<RingElement> values;
  values.reserve(10000);
  for (int v = 0; v < 10000; ++v) values.push_back(make_lunar(std::to_string(v)));
  auto digits = [](const RingElement& x) { return lunar_digit_count(std::get<Lunar>(x)); };
  std::uint64_t bad = 0;
  for (std::size_t a = 0; a < values.size() && bad == 0; ++a)
    for (std::size_t b = a; b < values.size(); ++b) {
      const auto da = digits(values[a]), db = digits(values[b]);
      if (digits(add(values[a], values[b])) != std::max(da, db)) ++bad;
      // Zero has one digit but annihilates, so the product law needs a, b != 0.
      if (a != 0 && digits(mul(values[a], values[b])) != da + db - 1) ++bad;
    }
  o.expect(bad == 0, "lunar digit laws");
}

void construction_fuzz(Outcome& o) {
  std::mt19937_64 rng(2024);
  for (auto ring : {RingId::integers(), RingId::gaussian(), RingId::eisenstein(), RingId::sqrt2()}) {
    int failures = 0;
    std::string first;
    for (int i = 0; i < kFuzzPerRing; ++i) {
      Multiset factors(ring);
      int k = std::uniform_int_distribution<int>(2, 4)(rng);
      for (int j = 0; j < k; ++j) factors.insert(oracle::random_non_unit(ring, rng, kFuzzCoefficient));
      RingElement target = pi(factors);
      try {
        Multiset s = bioperate(factors).result;
        record(s);
        auto c = classify(s);
        bool ok = c.is_bioperational && !c.is_trivial && c.sum == target && is_minimal(s).minimal;
        if (!ok && failures++ == 0) first = render(factors);
      } catch (const std::exception& e) {
        if (failures++ == 0) first = render(factors) + " (" + e.what() + ")";
      }
    }
    if (failures) o.expect(false, ring.name() + ": " + std::to_string(failures) + " failures, first " + first);
  }
}

void oracle_equivalence(Outcome& o) {
  for (std::int64_t n = 2; n <= 10; ++n) {
    std::vector<Multiset> expected;
    for (const auto& t : oracle::naive_nat_solutions(n)) expected.push_back(oracle::nat_multiset(t));
    std::sort(expected.begin(), expected.end());
    o.expect(enumerate_nat_by_length(n).solutions == expected, "length search n=" + std::to_string(n));
  }
  std::uint64_t disagreements = 0;
  for (const auto& [key, s] : encountered)
    if (is_minimal(s).minimal != oracle::exhaustive_is_minimal(s)) {
      if (disagreements++ == 0) o.expect(false, "is_minimal differs on " + key);
    }
  std::printf("     oracle compared %zu encountered multisets\n", encountered.size());
  o.expect(encountered.size() > 50, "too few multisets encountered");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "length counts n=2..14", kLimitOeisLength, oeis_length);
  ok &= run(2, "record positions up to 120", kLimitRecords, oeis_records);
  ok &= run(3, "solution sets for n=2..5", kLimitDefault, small_lengths);
  ok &= run(4, "integer example {3,-5}", kLimitDefault, integer_example);
  ok &= run(5, "gaussian example {1+2i,2+3i}", kLimitDefault, gaussian_example);
  ok &= run(6, "prime field 11 example", kLimitDefault, field_example);
  ok &= run(7, "field exhaustiveness p<=11, length<=4", kLimitField, field_exhaustiveness);
  ok &= run(8, "lunar triviality", kLimitLunar, lunar_triviality);
  ok &= run(9, "property suites", kLimitDefault, property_suites);
  ok &= run(10, "construction fuzz", kLimitFuzz, construction_fuzz);
  ok &= run(11, "oracle equivalence", kLimitDefault, oracle_equivalence);
  return ok ? 0 : 1;
}
