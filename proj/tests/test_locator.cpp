#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "lensfiber/fibering.hpp"
#include "lensfiber/locator.hpp"

#include "direct_oracle.hpp"

using namespace lensfiber;
using lftest::build_direct;
using lftest::direct_maxima;
using lftest::direct_minima;
using lftest::for_each_triple;

namespace {

LocatorOptions deep_options() {
  LocatorOptions o;
  o.scan_threshold = 0;  // force the recursion all the way down
  return o;
}

std::mt19937_64 rng(99);

std::int64_t rnd(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct RandomTriple {
  std::int64_t p, q, k;
};

RandomTriple random_triple(std::int64_t lo_p, std::int64_t hi_p) {
  std::int64_t p = rnd(lo_p, hi_p);
  std::int64_t q = rnd(1, p - 1);
  while (std::gcd(p, q) != 1) q = rnd(1, p - 1);
  std::int64_t k = rnd(1, p - 1);
  return {p, q, k};
}

}  // namespace

TEST_CASE("locate_minima paper fixtures") {
  CHECK(locate_minima(knot_params(33, 10, 11)) == std::vector<Int>{11, 14, 17, 20});
  CHECK(locate_minima(knot_params(15, 4, 5)) == std::vector<Int>{5, 8});
  CHECK(locate_minima(knot_params(46, 17, 23)).size() == 6);
  CHECK(locate_minima(knot_params(33, 10, 11), deep_options()) ==
        std::vector<Int>{11, 14, 17, 20});
  CHECK(locate_minima(knot_params(15, 4, 5), deep_options()) == std::vector<Int>{5, 8});
  CHECK(locate_minima(knot_params(46, 17, 23), deep_options()).size() == 6);
  CHECK(locate_minima(knot_params(7, 2, 3), deep_options()) == std::vector<Int>{4});
}

TEST_CASE("locate_minima equals brute force for every triple with p <= 120 (full recursion)") {
  auto opts = deep_options();
  for_each_triple(120, [&](std::int64_t p, std::int64_t q, std::int64_t k) {
    auto d = build_direct(p, q, k);
    auto got = locate_minima(knot_params(p, q, k), opts);
    REQUIRE(got == direct_minima(d));
  });
}

TEST_CASE("locate_minima equals brute force on random triples up to p = 500, all engines") {
  for (int it = 0; it < 1200; ++it) {
    auto [p, q, k] = random_triple(121, 500);
    auto d = build_direct(p, q, k);
    auto expect = direct_minima(d);
    auto kp = knot_params(p, q, k);
    CHECK(locate_minima(kp, deep_options()) == expect);
    CHECK(locate_minima(kp) == expect);  // default scan threshold
    LocatorOptions wide = deep_options();
    wide.force_wide = true;
    CHECK(locate_minima(kp, wide) == expect);
    LocatorOptions dbg = deep_options();
    dbg.debug_verify = true;
    CHECK(locate_minima(kp, dbg) == expect);
  }
}

TEST_CASE("locate_maxima equals brute force") {
  for_each_triple(90, [&](std::int64_t p, std::int64_t q, std::int64_t k) {
    auto d = build_direct(p, q, k);
    auto got = locate_maxima(knot_params(p, q, k), deep_options());
    REQUIRE(got == direct_maxima(d));
  });
  for (int it = 0; it < 400; ++it) {
    auto [p, q, k] = random_triple(91, 500);
    auto d = build_direct(p, q, k);
    CHECK(locate_maxima(knot_params(p, q, k), deep_options()) == direct_maxima(d));
  }
}

TEST_CASE("classification containment oracle over all contexts arising for p <= 90") {
  // Every classification step must confine the parent's minimizers to the
  // children, with disjoint children in the harmonic case, each holding at
  // least one minimizer, and isolation radii honored globally.
  for_each_triple(90, [&](std::int64_t p, std::int64_t q, std::int64_t k) {
    auto d = build_direct(p, q, k);
    std::set<std::int64_t> minima;
    for (const Int& m : direct_minima(d)) minima.insert(to_i64(m));
    auto min_in = [&](const Int& lo, const Int& hi) {
      // count minimizers of the periodic g in [lo, hi)
      std::int64_t c = 0;
      for (Int x = lo; x < hi; ++x)
        if (minima.count(to_i64(lnr(x, d.p)))) ++c;
      return c;
    };
    LocatorOptions opts;
    opts.scan_threshold = 0;
    opts.trace = [&](const IntervalContext& parent, const std::vector<IntervalContext>& kids) {
      std::int64_t inside_parent = min_in(parent.prog.start, parent.prog.end());
      REQUIRE(inside_parent > 0);
      std::int64_t inside_kids = 0;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const auto& kp = kids[i].prog;
        REQUIRE(kp.start >= parent.prog.start);
        REQUIRE(kp.end() <= parent.prog.end());
        std::int64_t n = min_in(kp.start, kp.end());
        if (kids.size() > 1) REQUIRE(n > 0);  // harmonic children each hold a minimizer
        inside_kids += n;
        for (std::size_t j = i + 1; j < kids.size(); ++j) {
          bool disjoint =
              kids[j].prog.start >= kp.end() || kids[j].prog.end() <= kp.start;
          REQUIRE(disjoint);
        }
        // isolation: no minimizer within isolated_radius outside the child,
        // given the parent was isolated at its own step size
        if (kids[i].isolated_radius > 0) {
          REQUIRE(min_in(kp.start - kids[i].isolated_radius, kp.start) == 0);
          REQUIRE(min_in(kp.end(), kp.end() + kids[i].isolated_radius) == 0);
        }
      }
      REQUIRE(inside_kids == inside_parent);
    };
    locate_minima(knot_params(p, q, k), opts);
  });
}

TEST_CASE("harmonic step yields ceil(w/q) children covering the minima") {
  // (46,17,23) runs two harmonic steps with factors 2 and 3
  auto kp = knot_params(46, 17, 23);
  std::vector<std::size_t> harmonic_sizes;
  LocatorOptions opts;
  opts.scan_threshold = 0;
  opts.trace = [&](const IntervalContext& parent, const std::vector<IntervalContext>& kids) {
    if (kids.size() > 1) {
      harmonic_sizes.push_back(kids.size());
      Int w = parent.prog.width, q = parent.prog.step;
      CHECK(Int(kids.size()) == fdiv(w + q - 1, q));
    }
  };
  auto mins = locate_minima(kp, opts);
  CHECK(mins.size() == 6);
  // one 2-way split at (w,q)=(17,12), then a 3-way split inside each part
  CHECK(harmonic_sizes == std::vector<std::size_t>{2, 3, 3});
}

TEST_CASE("symmetry_check fixtures") {
  CHECK(symmetry_check({11, 14, 17, 20}, 10, 3));
  CHECK(symmetry_check({5, 8}, 4, 3));
  CHECK_FALSE(symmetry_check({0}, 7, 3));
  CHECK_FALSE(symmetry_check({0, 3, 9}, 10, 3));  // 9 not in a full progression
  CHECK(symmetry_check({0, 3, 6, 9}, 10, 3));
  CHECK_THROWS_AS(symmetry_check({0}, 3, 6), precondition_error);
  CHECK_THROWS_AS(symmetry_check({0}, 6, 3), precondition_error);  // not coprime
}

TEST_CASE("theta | r_i implies (r_{i-1}, r_i)-symmetry of the minima, p <= 150") {
  for_each_triple(150, [&](std::int64_t p, std::int64_t q, std::int64_t k) {
    auto kp = knot_params(p, q, k);
    auto tr = euclid_trace(p, q);
    bool any = false;
    for (long i = 1; i < tr.n(); ++i)
      if (tr.r(i) % kp.theta == 0) any = true;
    if (!any) return;
    auto mins = locate_minima(kp);
    for (long i = 1; i < tr.n(); ++i) {
      if (tr.r(i) % kp.theta != 0) continue;
      REQUIRE(symmetry_check_mod(mins, tr.r(i - 1), tr.r(i), p));
    }
  });
}

TEST_CASE("locator count matches the closed formula at p around 10^18") {
  std::mt19937_64 r2(7777);
  auto big_rand = [&](const Int& lo, const Int& hi) {
    Int span = hi - lo;
    Int x = 0;
    for (int i = 0; i < 4; ++i) x = (x << 16) + Int(static_cast<unsigned long>(r2() & 0xffff));
    return lo + lnr(x, span);
  };
  int done = 0;
  while (done < 40) {
    Int p = big_rand(Int("1000000000000000000"), Int("2000000000000000000"));
    Int q = big_rand(1, p);
    if (gcd(p, q) != 1) continue;
    Int k = big_rand(1, p);
    auto kp = knot_params(p, q, k);
    auto tr = euclid_trace(p, q);
    Int expect = minima_count_formula(tr, kp.theta);
    if (expect > 100000) continue;
    auto mins = locate_minima(kp);
    REQUIRE(Int(mins.size()) == expect);
    for (const Int& m : mins) {
      REQUIRE(m >= 0);
      REQUIRE(m < p);
    }
    // spot-check: located points evaluate to the located minimum value
    JumpSequence seq(kp);
    Int v0 = seq.g_raw(mins.front());
    for (const Int& m : mins) REQUIRE(seq.g_raw(m) == v0);
    ++done;
  }
}

TEST_CASE("debug_verify accepts valid runs") {
  LocatorOptions dbg;
  dbg.scan_threshold = 0;
  dbg.debug_verify = true;
  dbg.force_wide = true;
  CHECK(locate_minima(knot_params(46, 17, 23), dbg).size() == 6);
  CHECK(locate_maxima(knot_params(46, 17, 23), dbg).size() == 6);
}
