#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>

#include "asf/kernels.hpp"
#include "oracle.hpp"

using namespace asf;
using namespace asf::kernels;

namespace {

const std::vector<std::pair<std::uint32_t, int>> kFields = {{2, 1}, {2, 3}, {2, 5}, {3, 2}, {3, 3},
                                                             {5, 2}, {7, 2}, {2, 10}, {31, 2}};

}  // namespace

TEST_CASE("small field tables match naive arithmetic") {
  for (auto [p, n] : kFields) {
    const auto k = FiniteField::canonical(p, n);
    const SmallField f(k);
    const auto& m = k.modulus().coeffs();
    const oracle::NaiveField nf(p, oracle::Vec(m.begin(), m.end()));
    std::mt19937_64 rng(p + n);
    for (int i = 0; i < 500; ++i) {
      const Index a = rng() % f.order(), b = rng() % f.order();
      CHECK(f.add(a, b) == nf.add(a, b));
      CHECK(f.mul(a, b) == nf.mul(a, b));
      CHECK(f.sub(a, b) == nf.add(a, nf.neg(b)));
      CHECK(f.wp(a) == nf.wp(a));
      CHECK(f.frob(a) == nf.pow(a, p));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  omp_set_num_threads(4);
  for (auto [p, n] : kFields) {
    const SmallField f(FiniteField::canonical(p, n));
    const auto q = f.order();
    CHECK(least_preimages(f.wp_table(), q, Exec::Serial) == least_preimages(f.wp_table(), q, Exec::Parallel));
    std::mt19937_64 rng(q);
    std::vector<Index> coeffs{static_cast<Index>(rng() % q), static_cast<Index>(rng() % q), 1};
    CHECK(additive_values(f, coeffs, Exec::Serial) == additive_values(f, coeffs, Exec::Parallel));
    const Index a = 1 + rng() % (q - 1);
    CHECK(scaled_wp_image(f, a, Exec::Serial) == scaled_wp_image(f, a, Exec::Parallel));
    std::vector<Index> tuple{1, static_cast<Index>(1 + rng() % (q - 1))};
    if (q <= 128) tuple.push_back(static_cast<Index>(1 + rng() % (q - 1)));
    CHECK(scaled_wp_intersection(f, tuple, Exec::Serial) == scaled_wp_intersection(f, tuple, Exec::Parallel));
    if (q <= 256) {
      const auto s = ga_points(f, tuple, Exec::Serial);
      CHECK(s == ga_points(f, tuple, Exec::Parallel));
      CHECK(s.size() / (tuple.size() + 1) == ga_point_count(f, tuple, Exec::Parallel));
    }
    CHECK(ga_point_count(f, tuple, Exec::Serial) == ga_point_count(f, tuple, Exec::Parallel));
    if (q <= 32) {
      std::vector<Index> units;
      for (Index i = 1; i < q; ++i) units.push_back(i);
      CHECK(baldwin_saxl_index(f, units, Exec::Serial) == baldwin_saxl_index(f, units, Exec::Parallel));
    }
  }
  CHECK(rational_inverse_search(2, 3, Exec::Serial) == rational_inverse_search(2, 3, Exec::Parallel));
}

TEST_CASE("least_preimages by definition") {
  const SmallField f(FiniteField::canonical(3, 2));
  const auto pre = least_preimages(f.wp_table(), f.order(), Exec::Parallel);
  for (Index y = 0; y < f.order(); ++y) {
    std::int64_t expected = -1;
    for (Index x = 0; x < f.order() && expected < 0; ++x) {
      if (f.wp(x) == y) expected = x;
    }
    CHECK(pre[y] == expected);
  }
}

TEST_CASE("additive values by definition") {
  const SmallField f(FiniteField::canonical(2, 4));
  const std::vector<Index> coeffs{3, 0, 7};
  const auto v = additive_values(f, coeffs, Exec::Parallel);
  for (Index x = 0; x < f.order(); ++x) {
    const Index x2 = f.frob(x), x4 = f.frob(x2);
    CHECK(v[x] == f.add(f.mul(3, x), f.mul(7, x4)));
  }
}
