#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lensfiber/progression.hpp"

using namespace lensfiber;

namespace {

std::mt19937_64 rng(2024);

std::int64_t rnd(std::int64_t lo, std::int64_t hi) {  // inclusive
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random progression with width w >= 2 and admissible parameters.
AffineProgression random_progression(std::int64_t max_w, bool allow_contains = true) {
  std::int64_t w = rnd(2, max_w);
  std::int64_t st;
  do {
    st = rnd(1, w - 1);
  } while (std::gcd(w, st) != 1);
  AffineProgression P;
  P.start = rnd(-50, 50);
  P.width = w;
  P.step = st;
  P.length = rnd(0, w - 1);
  P.sign = (rng() & 1) ? 1 : -1;
  P.contains_start = allow_contains && (rng() & 1);
  return P;
}

std::set<Int> to_set(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

// Brute-force restriction of the represented set to [lo, hi).
std::set<Int> brute_restrict(const AffineProgression& P, const Int& lo, const Int& hi) {
  std::set<Int> out;
  for (const Int& x : P.materialize())
    if (x >= lo && x < hi) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("cycle_map fixtures") {
  CHECK(cycle_map(0, 33, 10, 30) == 7);
  CHECK(cycle_map(2, 5, -2, 3) == 6);
  for (Int x = 4; x < 9; ++x) CHECK(cycle_map(4, 5, 0, x) == x);
  CHECK(cycle_map(0, 33, 10, 33) == 10);  // closure endpoint allowed
  CHECK_THROWS_AS(cycle_map(0, 33, 10, 34), precondition_error);
  CHECK_THROWS_AS(cycle_map(0, 33, 10, -1), precondition_error);
}

TEST_CASE("first_return fixtures") {
  CHECK(first_return(0, 33, 10, 0, 0) == 7);
  CHECK(first_return(0, 33, -10, 0, 0) == 3);
  CHECK_THROWS_AS(first_return(0, 33, 11, 0, 0), precondition_error);  // gcd(33,11) != 1
  CHECK_THROWS_AS(first_return(0, 33, 1, 0, 0), precondition_error);   // q divides w
}

TEST_CASE("first_return equals literal iteration on 10,000 random configurations") {
  for (int it = 0; it < 10000; ++it) {
    std::int64_t w = rnd(3, 400);
    std::int64_t q;
    do {
      q = rnd(2, w - 1);
    } while (std::gcd(w, q) != 1);
    int sign = (rng() & 1) ? 1 : -1;
    Int s = rnd(-20, 20);
    Int y = s + rnd(0, w - q);
    Int x = y + rnd(0, q);  // closure of J
    Int shift = sign * q;
    Int got = first_return(s, w, shift, y, x);
    // iterate the cycle map on I until landing back in J
    Int cur = cycle_map(s, w, shift, x);
    int guard = 0;
    while (!(cur >= y && cur < y + q)) {
      cur = cycle_map(s, w, shift, cur);
      REQUIRE(++guard <= w + 2);
    }
    REQUIRE(got == cur);
  }
}

TEST_CASE("restrict fixtures from the width-33 example") {
  AffineProgression S{0, 33, 10, 11, +1, false};
  CHECK(S.break_point() == 11);
  CHECK(to_set(S.materialize()) ==
        std::set<Int>{1, 4, 7, 10, 11, 14, 17, 20, 24, 27, 30});

  AffineProgression left = restrict_progression(S, 0);
  CHECK(left.sign == -1);
  CHECK(left.step == 3);
  CHECK(left.length == 3);
  CHECK(to_set(left.materialize()) == std::set<Int>{1, 4, 7});

  AffineProgression atb = restrict_progression(S, 11);
  CHECK(atb.sign == 1);
  CHECK(atb.step == 3);
  CHECK(atb.length == 3);
  CHECK(atb.contains_start);
  CHECK(to_set(atb.materialize()) == std::set<Int>{11, 14, 17, 20});

  AffineProgression right = restrict_progression(S, 23);
  CHECK(right.sign == -1);
  CHECK(right.step == 3);
  CHECK(right.length == 3);
  CHECK_FALSE(right.contains_start);
  CHECK(to_set(right.materialize()) == std::set<Int>{24, 27, 30});

  CHECK_THROWS_AS(restrict_progression(S, 5), precondition_error);  // inadmissible anchor
}

TEST_CASE("restrict equals brute-force restriction on 10,000 random progressions, w <= 500") {
  for (int it = 0; it < 10000; ++it) {
    AffineProgression P = random_progression(500);
    Int b = P.break_point();
    std::vector<Int> anchors{P.start, P.end() - P.step};
    if (b + P.step <= P.end()) anchors.push_back(b);
    const Int& y = anchors[static_cast<std::size_t>(rnd(0, static_cast<std::int64_t>(anchors.size()) - 1))];
    AffineProgression R = restrict_progression(P, y);
    REQUIRE(to_set(R.materialize()) == brute_restrict(P, y, y + P.step));
    REQUIRE(R.width == P.step);
    REQUIRE(R.start == y);
    if (P.step > 1) {
      int expect_sign = (y == b) ? P.sign : -P.sign;
      REQUIRE(R.sign == expect_sign);
      REQUIRE(R.step == lnr(P.width, P.step));
    }
  }
}

TEST_CASE("progression membership and counting agree with materialization") {
  for (int it = 0; it < 3000; ++it) {
    AffineProgression P = random_progression(300);
    auto set = to_set(P.materialize());
    Int lo = P.start + rnd(0, to_i64(P.width) - 1);
    Int hi = lo + rnd(0, to_i64(P.end() - lo));
    Int expect = 0;
    for (const Int& x : set)
      if (x >= lo && x < hi) ++expect;
    REQUIRE(P.count_in(lo, hi) == expect);
    Int probe = P.start + rnd(0, to_i64(P.width) - 1);
    REQUIRE(P.contains(probe) == (set.count(probe) > 0));
  }
}

TEST_CASE("pattern lemma: membership of x and x +- step agree away from start and break point") {
  for (int it = 0; it < 4000; ++it) {
    AffineProgression P = random_progression(300);
    Int b = P.break_point();
    if (P.sign > 0) {
      // positive difference: x and x+q agree unless x = start or break point
      for (Int x = P.start; x + P.step < P.end(); ++x) {
        if (x == P.start || x == b) continue;
        REQUIRE(P.contains(x) == P.contains(x + P.step));
      }
    } else {
      // negative difference: x and x-q agree unless x = start+q or break point
      for (Int x = P.start + P.step; x < P.end(); ++x) {
        if (x == P.start + P.step || x == b) continue;
        REQUIRE(P.contains(x) == P.contains(x - P.step));
      }
      // second form: x and x+(w-q) agree unless x = start or break point
      for (Int x = P.start; x + P.width - P.step < P.end(); ++x) {
        if (x == P.start || x == b) continue;
        REQUIRE(P.contains(x) == P.contains(x + P.width - P.step));
      }
    }
  }
}

TEST_CASE("window_count obeys the two-level pattern around the break point") {
  for (int it = 0; it < 4000; ++it) {
    AffineProgression P = random_progression(300, /*allow_contains=*/false);
    if (P.length == 0) continue;
    Int b = P.break_point();
    // Positive difference: |S ∩ (x, x+q]| = c for x < b, c-1 for x >= b.
    // Negative difference: |S ∩ (x, x+q]| (x = z - q) = c for z < b, c+1 for z >= b.
    std::optional<Int> c_low, c_high;
    for (Int x = P.start; x + P.step < P.end(); ++x) {
      Int cnt = window_count(P, x);
      bool below = (P.sign > 0) ? (x < b) : (x + P.step < b);
      auto& slot = below ? c_low : c_high;
      if (!slot) {
        slot = cnt;
      } else {
        REQUIRE(*slot == cnt);
      }
    }
    if (c_low && c_high) {
      Int diff = *c_low - *c_high;
      REQUIRE(diff == (P.sign > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("window_count and sigma fixtures from the width-33 example") {
  AffineProgression S{0, 33, 10, 11, +1, false};
  CHECK(window_count(S, 0) == 4);  // {1,4,7,10}

  IntervalContext c1{S, 3, 1, false, false, 10};
  CHECK(sigma(c1) == -2);
  IntervalContext c2{S, 3, 2, false, false, 10};
  CHECK(sigma(c2) == 8);
  IntervalContext c3{S, 4, 1, false, false, 10};
  CHECK(sigma(c3) == -6);
}

TEST_CASE("classify_positive reproduces the three interval cases") {
  AffineProgression S{0, 33, 10, 11, +1, false};

  Reduction r1 = classify_positive({S, 3, 2, false, false, 10});
  CHECK(r1.kind == ReductionCase::left_interval);
  CHECK(r1.child.prog.start == 0);
  CHECK(r1.child.prog.width == 10);
  CHECK(r1.child.prog.sign == -1);
  CHECK(r1.child.prog.step == 3);
  CHECK(r1.child.left_like);
  CHECK(r1.child.isolated_radius == 3);

  Reduction r2 = classify_positive({S, 3, 1, false, false, 10});
  CHECK(r2.kind == ReductionCase::break_interval);
  CHECK(r2.child.prog.start == 11);
  CHECK(r2.child.prog.sign == 1);
  CHECK(r2.child.prog.step == 3);

  Reduction r3 = classify_positive({S, 4, 1, false, false, 10});
  CHECK(r3.kind == ReductionCase::right_interval);
  CHECK(r3.child.prog.start == 23);
  CHECK(r3.child.prog.sign == -1);
  CHECK(r3.child.right_like);
}

TEST_CASE("classify_positive precondition errors") {
  AffineProgression S{0, 33, 10, 11, +1, false};
  CHECK_THROWS_AS(classify_positive({S, 5, 2, false, false, 10}), precondition_error);  // 5 | 10
  AffineProgression neg = S;
  neg.sign = -1;
  CHECK_THROWS_AS(classify_positive({neg, 3, 2, false, false, 10}), precondition_error);
  CHECK_THROWS_AS(classify_negative({neg, 3, 2, false, false, 10}), precondition_error);  // no flag
  CHECK_THROWS_AS(classify_harmonic({S, 3, 2, false, false, 10}), precondition_error);    // 3 does not divide 10
}

TEST_CASE("classify_harmonic interval counts") {
  // (15,4,5) second level: progression on [5,9) with difference +3, theta = 3
  AffineProgression S{5, 4, 3, 1, +1, true};
  auto kids = classify_harmonic({S, 3, 1, false, false, 3});
  REQUIRE(kids.size() == 2);  // ceil(4/3)
  CHECK(kids[0].prog.start == 5);
  CHECK(kids[0].prog.width == 1);
  CHECK(kids[1].prog.start == 8);
  CHECK(kids[1].prog.width == 1);

  // (33,10,11) second level: [11,21) with difference +3, theta = 3
  AffineProgression S2{11, 10, 3, 3, +1, true};
  auto kids2 = classify_harmonic({S2, 3, 1, false, false, 3});
  REQUIRE(kids2.size() == 4);  // ceil(10/3)
  for (int i = 0; i < 4; ++i) CHECK(kids2[static_cast<std::size_t>(i)].prog.start == 11 + 3 * i);
}
