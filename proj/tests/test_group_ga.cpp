#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "asf/artin_schreier.hpp"
#include "asf/error.hpp"
#include "asf/group_ga.hpp"

using namespace asf;

namespace {

std::vector<Element> units_of(const FiniteField& k) {
  std::vector<Element> u;
  for (const auto& x : k.elements()) {
    if (!x.is_zero()) u.push_back(x);
  }
  return u;
}

// Intersection of a_i * wp(K) by scanning x for each a_i.
std::set<Element> naive_intersection(const FiniteField& k, const std::vector<Element>& tuple) {
  const auto all = k.elements();
  std::set<Element> acc(all.begin(), all.end());
  for (const auto& a : tuple) {
    std::set<Element> img;
    for (const auto& x : k.elements()) img.insert(a * (x.frobenius() - x));
    std::set<Element> next;
    for (const auto& t : acc) {
      if (img.count(t)) next.insert(t);
    }
    acc = next;
  }
  return acc;
}

template <class F>
void for_each_tuple(const std::vector<Element>& units, std::size_t len, F&& fn) {
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    std::vector<Element> t;
    for (auto i : idx) t.push_back(units[i]);
    fn(t);
    std::size_t pos = 0;
    while (pos < len && ++idx[pos] == units.size()) idx[pos++] = 0;
    if (pos == len) return;
  }
}

// Naive Baldwin-Saxl index on the distinct values, by subset enumeration.
int naive_bs_index(const FiniteField& k, std::vector<Element> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  const std::size_t m = a.size();
  for (std::size_t n = 1;; ++n) {
    if (n + 1 > m) return static_cast<int>(n);
    bool ok = true;
    for (std::uint32_t mask = 0; mask < (1u << m) && ok; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n + 1) continue;
      std::vector<Element> big;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) big.push_back(a[i]);
      }
      const auto full = naive_intersection(k, big);
      bool found = false;
      for (std::size_t drop = 0; drop < big.size() && !found; ++drop) {
        auto sub = big;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        found = naive_intersection(k, sub) == full;
      }
      ok = found;
    }
    if (ok) return static_cast<int>(n);
  }
}

}  // namespace

TEST_CASE("spec rejects empty and zero tuples") {
  const auto k = FiniteField::canonical(2, 2);
  CHECK_THROWS_AS(GaGroupSpec(k, {}), Error);
  CHECK_THROWS_AS(GaGroupSpec(k, {k.one(), k.zero()}), Error);
}

TEST_CASE("ga_points examples") {
  const auto f2 = FiniteField::prime(2);
  const auto pts = ga_points(GaGroupSpec(f2, {f2.one()}));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].t.is_zero());
  CHECK(pts[0].x[0].is_zero());
  CHECK(pts[1].t.is_zero());
  CHECK(pts[1].x[0].is_one());
  const auto f4 = FiniteField::canonical(2, 2);
  CHECK(ga_points(GaGroupSpec(f4, {f4.one()})).size() == 4);
  const auto two = ga_points(GaGroupSpec(f4, {f4.one(), f4.gen()}));
  CHECK(two.size() == 4);
  for (const auto& pt : two) CHECK(pt.t.is_zero());
}

TEST_CASE("first_coord_image examples") {
  const auto f4 = FiniteField::canonical(2, 2);
  const auto r1 = first_coord_image(GaGroupSpec(f4, {f4.one()}));
  CHECK(r1.image == std::vector<Element>{f4.zero(), f4.one()});
  const auto r2 = first_coord_image(GaGroupSpec(f4, {f4.one(), f4.gen()}));
  CHECK(r2.image == std::vector<Element>{f4.zero()});
  const auto f9 = FiniteField::canonical(3, 2);
  const auto r3 = first_coord_image(GaGroupSpec(f9, {f9.one(), f9.one(), f9.one()}));
  CHECK(r3.image == image_subgroup(f9).image);
}

TEST_CASE("points form a subgroup with the predicted cardinality") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 1}, {5, 1}}) {
    const auto k = FiniteField::canonical(p, n);
    const auto units = units_of(k);
    for (std::size_t len = 1; len <= 2; ++len) {
      for_each_tuple(units, len, [&](const std::vector<Element>& tuple) {
        const GaGroupSpec spec(k, tuple);
        const auto pts = ga_points(spec);
        std::set<std::vector<Element>> set;
        for (const auto& pt : pts) {
          std::vector<Element> row{pt.t};
          row.insert(row.end(), pt.x.begin(), pt.x.end());
          for (std::size_t i = 0; i < tuple.size(); ++i) CHECK(pt.t == tuple[i] * wp(pt.x[i]));
          set.insert(row);
        }
        CHECK(set.size() == pts.size());
        for (const auto& a : set) {
          std::vector<Element> neg;
          for (const auto& c : a) neg.push_back(-c);
          CHECK(set.count(neg) == 1);
          for (const auto& b : set) {
            std::vector<Element> sum;
            for (std::size_t i = 0; i < a.size(); ++i) sum.push_back(a[i] + b[i]);
            CHECK(set.count(sum) == 1);
          }
        }
        std::uint64_t pn = 1;
        for (std::size_t i = 0; i < tuple.size(); ++i) pn *= p;
        CHECK(pts.size() == naive_intersection(k, tuple).size() * pn);
      });
    }
  }
}

TEST_CASE("projection identity and fiber regularity up to length 3") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto k = FiniteField::canonical(p, n);
    for (std::size_t len = 1; len <= 3; ++len) {
      for_each_tuple(units_of(k), len, [&](const std::vector<Element>& tuple) {
        const auto r = first_coord_image(GaGroupSpec(k, tuple));
        const auto expected = naive_intersection(k, tuple);
        CHECK(std::vector<Element>(expected.begin(), expected.end()) == r.image);
        CHECK(r.image == r.intersection);
        CHECK(r.fibers_regular);
        CHECK(r.point_count == expected.size() * r.fiber_size);
      });
    }
  }
}

TEST_CASE("serial and parallel points agree") {
  const auto k = FiniteField::canonical(3, 3);
  const std::vector<Element> tuple{k.one(), k.gen(), k.gen() + k.one()};
  const auto a = ga_points(GaGroupSpec(k, tuple), kernels::Exec::Serial);
  const auto b = ga_points(GaGroupSpec(k, tuple), kernels::Exec::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].x == b[i].x);
  }
}

TEST_CASE("baldwin_saxl_index examples") {
  const auto f2 = FiniteField::prime(2);
  CHECK(baldwin_saxl_index(f2, {f2.one()}) == 1);
  const auto f4 = FiniteField::canonical(2, 2);
  const Element w = f4.gen();
  CHECK(baldwin_saxl_index(f4, {f4.one(), w, w * w}) == 2);
  const auto f8 = FiniteField::canonical(2, 3);
  CHECK(baldwin_saxl_index(f8, units_of(f8)) <= 3);
}

TEST_CASE("baldwin_saxl_index against subset enumeration") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto k = FiniteField::canonical(p, n);
    const auto units = units_of(k);
    const int idx = baldwin_saxl_index(k, units);
    CHECK(idx == naive_bs_index(k, units));
    CHECK(idx <= n);
    CHECK(baldwin_saxl_index(k, units, kernels::Exec::Serial) == idx);
  }
  const auto f8 = FiniteField::canonical(2, 3);
  const auto u = units_of(f8);
  const std::vector<Element> some{u[0], u[2], u[4], u[0]};
  CHECK(baldwin_saxl_index(f8, some) == naive_bs_index(f8, some));
}

TEST_CASE("rational_as_inverse_search finds nothing") {
  // Independent check of the identity for all small pairs.
  auto satisfies = [](std::uint32_t p, const PolyFp& g, const PolyFp& h) {
    PolyFp hp = PolyFp::constant(p, 1), gp1 = PolyFp::constant(p, 1);
    for (std::uint32_t i = 0; i < p; ++i) hp = hp * h;
    for (std::uint32_t i = 0; i + 1 < p; ++i) gp1 = gp1 * g;
    return PolyFp::x(p) * (hp - h * gp1) == gp1 * g;
  };
  for (std::uint32_t p : {2u, 3u}) {
    const int max_deg = p == 2 ? 4 : 3;
    std::uint64_t count = 1;
    for (int i = 0; i <= max_deg; ++i) count *= p;
    std::size_t hits = 0;
    for (std::uint64_t gc = 1; gc < count; ++gc) {
      for (std::uint64_t hc = 0; hc < count; ++hc) {
        std::vector<std::uint32_t> g, h;
        for (std::uint64_t r = gc, s = hc, i = 0; i <= static_cast<std::uint64_t>(max_deg); ++i, r /= p, s /= p) {
          g.push_back(r % p);
          h.push_back(s % p);
        }
        const PolyFp gp(p, g), hp(p, h);
        if (gcd(gp, hp).degree() != 0) continue;
        if (hp.degree() <= 0 && gp.degree() == 0) continue;
        hits += satisfies(p, gp, hp);
      }
    }
    CHECK(hits == 0);
    for (int d = 1; d <= 4; ++d) {
      if (p == 3 && d == 4) continue;
      CHECK_FALSE(rational_as_inverse_search(p, d));
      CHECK_FALSE(rational_as_inverse_search(p, d, kernels::Exec::Serial));
    }
  }
  CHECK_FALSE(rational_as_inverse_search(3, 4));
}
