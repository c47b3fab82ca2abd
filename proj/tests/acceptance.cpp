// Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "asf/additive_poly.hpp"
#include "asf/artin_schreier.hpp"
#include "asf/group_ga.hpp"
#include "asf/laurent.hpp"
#include "asf/valuation.hpp"
#include "oracle.hpp"

using namespace asf;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::vector<FiniteField> fields_235(std::uint64_t max_q) {
  std::vector<FiniteField> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uint64_t q = p;
    for (int n = 1; q <= max_q; ++n, q *= p) out.push_back(FiniteField::canonical(p, n));
  }
  return out;
}

oracle::NaiveField naive(const FiniteField& k) {
  const auto& m = k.modulus().coeffs();
  return oracle::NaiveField(k.characteristic(), oracle::Vec(m.begin(), m.end()));
}

std::vector<Element> units_of(const FiniteField& k) {
  std::vector<Element> u;
  for (const auto& x : k.elements()) {
    if (!x.is_zero()) u.push_back(x);
  }
  return u;
}

int log_p(std::uint64_t v, std::uint32_t p) {
  int k = 0;
  while (v > 1) {
    if (v % p) return -1;
    v /= p;
    ++k;
  }
  return k;
}

Outcome extension_count() {
  std::size_t fields = 0, oracle_runs = 0;
  for (const auto& k : fields_235(125)) {
    const std::uint32_t p = k.characteristic();
    const int dim = log_p(image_subgroup(k).index, p);
    if (dim < 0 || orbit_count(p, dim) != 1 || count_as_extensions(k) != 1) {
      return {false, "formula count != 1 for " + k.to_string()};
    }
    if (k.order() <= 27) {
      const auto bf = count_as_extensions_bruteforce(k);
      if (bf.classes != 1 || !bf.agree) return {false, "oracle count != 1 for " + k.to_string()};
      ++oracle_runs;
    }
    ++fields;
  }
  return {true, std::to_string(fields) + " fields, oracle on " + std::to_string(oracle_runs)};
}

Outcome coset_index() {
  std::size_t fields = 0;
  for (const auto& k : fields_235(125)) {
    const auto nf = naive(k);
    std::set<std::uint64_t> image;
    for (std::uint64_t x = 0; x < nf.q; ++x) image.insert(nf.wp(x));
    const auto cd = image_subgroup(k);
    if (cd.index != k.characteristic() || nf.q / image.size() != k.characteristic() ||
        cd.image.size() != image.size()) {
      return {false, "index mismatch for " + k.to_string()};
    }
    ++fields;
  }
  return {true, std::to_string(fields) + " fields"};
}

Outcome trace_root() {
  std::size_t checked = 0;
  for (const auto& k : fields_235(125)) {
    const auto nf = naive(k);
    std::vector<std::uint8_t> solvable(nf.q, 0);
    for (std::uint64_t x = 0; x < nf.q; ++x) solvable[nf.wp(x)] = 1;
    for (const auto& a : k.elements()) {
      const auto root = has_as_root(k, a);
      const bool tz = trace_to_prime(a).is_zero();
      if (root.has_value() != tz || tz != (solvable[a.index()] != 0)) {
        return {false, "disagreement at " + a.to_string() + " in " + k.to_string()};
      }
      if (root && !(wp(*root) == a)) return {false, "bad root for " + a.to_string()};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " elements"};
}

Outcome canonical_round_trip() {
  std::mt19937_64 rng(20240611);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t p = primes[rng() % 3];
    const auto k = FiniteField::canonical(p, 1 + static_cast<int>(rng() % 3));
    const int n = static_cast<int>(rng() % 4);
    Element a = k.random(rng);
    while (a.is_zero()) a = k.random(rng);
    const auto cf = canonical_form(expand_canonical(a, n));
    if (!cf || !(cf->a == a) || cf->n != n) return {false, "round trip failed at trial " + std::to_string(trial)};
  }
  const auto f2 = FiniteField::prime(2);
  if (canonical_form(AdditivePolynomial(f2, {f2.one(), f2.zero(), f2.one()}))) return {false, "x^4+x has a form"};
  return {true, "1000 round trips, x^4+x -> None"};
}

Outcome ga_identities() {
  std::size_t tuples = 0;
  for (std::uint64_t q : {4, 8, 9, 27}) {
    const auto [p, n] = prime_power_decompose(q);
    const auto k = FiniteField::canonical(p, n);
    const auto nf = naive(k);
    const auto units = units_of(k);
    // a * wp(K) for each unit, from the naive arithmetic.
    std::vector<std::vector<std::uint8_t>> img(q, std::vector<std::uint8_t>(q, 0));
    for (const auto& a : units) {
      for (std::uint64_t x = 0; x < q; ++x) img[a.index()][nf.mul(a.index(), nf.wp(x))] = 1;
    }
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<std::size_t> idx(len, 0);
      while (true) {
        std::vector<Element> tuple;
        for (auto i : idx) tuple.push_back(units[i]);
        std::vector<Element> expected;
        for (std::uint64_t t = 0; t < q; ++t) {
          bool in = true;
          for (const auto& a : tuple) in = in && img[a.index()][t];
          if (in) expected.push_back(k.from_index(t));
        }
        const auto r = first_coord_image(GaGroupSpec(k, tuple));
        std::uint64_t pn = 1;
        for (std::size_t i = 0; i < len; ++i) pn *= p;
        if (r.image != expected || r.intersection != expected || !r.fibers_regular || r.fiber_size != pn ||
            r.point_count != expected.size() * pn) {
          return {false, "identity fails over GF(" + std::to_string(q) + ")"};
        }
        ++tuples;
        std::size_t pos = 0;
        while (pos < len && ++idx[pos] == units.size()) idx[pos++] = 0;
        if (pos == len) break;
      }
    }
  }
  return {true, std::to_string(tuples) + " tuples"};
}

Outcome lemma_refutation() {
  auto naive_search = [](std::uint32_t p, int max_deg) {
    std::uint64_t count = 1;
    for (int i = 0; i <= max_deg; ++i) count *= p;
    auto make = [&](std::uint64_t code) {
      std::vector<std::uint32_t> c;
      for (int i = 0; i <= max_deg; ++i, code /= p) c.push_back(code % p);
      return PolyFp(p, c);
    };
    std::size_t hits = 0;
    for (std::uint64_t gc = 1; gc < count; ++gc) {
      const PolyFp g = make(gc);
      PolyFp gp1 = PolyFp::constant(p, 1);
      for (std::uint32_t i = 0; i + 1 < p; ++i) gp1 = gp1 * g;
      for (std::uint64_t hc = 0; hc < count; ++hc) {
        const PolyFp h = make(hc);
        if (gcd(g, h).degree() != 0 || (g.degree() == 0 && h.degree() <= 0)) continue;
        PolyFp hp = PolyFp::constant(p, 1);
        for (std::uint32_t i = 0; i < p; ++i) hp = hp * h;
        hits += PolyFp::x(p) * (hp - h * gp1) == gp1 * g;
      }
    }
    return hits;
  };
  const bool lib = !rational_as_inverse_search(2, 4) && !rational_as_inverse_search(3, 3);
  const bool ref = naive_search(2, 4) == 0 && naive_search(3, 3) == 0;
  return {lib && ref, std::string("search: ") + (lib ? "none" : "found") + ", oracle: " + (ref ? "none" : "found")};
}

Outcome laurent_round_trip() {
  std::mt19937_64 rng(64);
  const std::pair<std::uint32_t, int> specs[] = {{2, 1}, {2, 2}, {2, 3}, {3, 2}};
  constexpr std::int64_t kPrec = 64;
  for (int trial = 0; trial < 500; ++trial) {
    const auto [p, n] = specs[trial % 4];
    const auto k = FiniteField::canonical(p, n);
    const std::int64_t start = -static_cast<std::int64_t>(rng() % 11);
    std::vector<Element> c;
    for (std::int64_t e = start; e < kPrec; ++e) c.push_back(k.random(rng));
    const auto b = LaurentSeries::from_coeffs(k, start, std::move(c), kPrec);
    const auto a = wp(b);
    const auto out = as_solve(a, kPrec);
    if (out.tag != SolveOutcome::Tag::Solved) return {false, "unsolved at trial " + std::to_string(trial)};
    const auto& x = *out.root;
    if (x.precision() < kPrec) return {false, "root precision too low"};
    for (std::int64_t e = std::min(x.valuation(), b.valuation()); e < kPrec; ++e) {
      const Element d = x.coeff(e) - b.coeff(e);
      if (e == 0 ? !d.in_prime_field() : !d.is_zero()) return {false, "root - b not in F_p at trial " + std::to_string(trial)};
    }
    const auto check = wp(x) - a;
    if (!check.is_zero() || check.precision() < kPrec) return {false, "wp(root) != a at trial " + std::to_string(trial)};
  }
  return {true, "500 round trips at precision 64"};
}

Outcome obstructions() {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto k = FiniteField::prime(p);
    const auto neg = as_solve(LaurentSeries::monomial(k.one(), -1, 32), 32);
    if (neg.tag != SolveOutcome::Tag::UnsolvableNegVal || neg.negval_witness != -1) {
      return {false, "t^-1 not rejected for p=" + std::to_string(p)};
    }
  }
  std::size_t constants = 0;
  for (const auto& k : fields_235(27)) {
    for (const auto& a : k.elements()) {
      if (trace_to_prime(a).is_zero()) continue;
      const auto res = as_solve(LaurentSeries::monomial(a, 0, 32), 32);
      if (res.tag != SolveOutcome::Tag::UnsolvableResidue || !(res.residue_witness == a)) {
        return {false, "constant " + a.to_string() + " not rejected over " + k.to_string()};
      }
      ++constants;
    }
  }
  const auto fpt = ValuedFieldDescriptor::make(ResidueDesc::finite(2), ValueGroupDesc::integers(), true);
  const auto algt = ValuedFieldDescriptor::make(ResidueDesc::algebraic_closure(2), ValueGroupDesc::integers(), true);
  for (const auto& d : {fpt, algt}) {
    const auto v = vfchar_verdict(d);
    if (v.kind != VfCharVerdict::Kind::IpWitnessed || v.witnesses.empty()) return {false, d.to_string() + " not IP-witnessed"};
  }
  return {true, "t^-1 for p in {2,3,5}; " + std::to_string(constants) + " constants; both descriptors IP-witnessed"};
}

Outcome corollary_grid() {
  std::size_t total = 0, in_subset = 0;
  for (std::uint32_t p = 2; p <= 27; ++p) {
    if (!is_prime(p)) continue;
    std::vector<ResidueDesc> residues{ResidueDesc::algebraic_closure(p)};
    for (std::uint64_t q = p; q <= 27; q *= p) residues.push_back(ResidueDesc::finite(q));
    for (const auto& r : residues) {
      for (const auto& g : {ValueGroupDesc::integers(), ValueGroupDesc::localized(p)}) {
        for (bool alg_max : {true, false}) {
          const auto d = ValuedFieldDescriptor::make(r, g, alg_max);
          const auto v = classify(d, 1);
          const bool kap = v.kaplansky.kaplansky();
          const bool equivalent = v.tame == kap && kap == v.perfect_residue;
          const bool subset = v.vfchar.kind == VfCharVerdict::Kind::NipCompatible && alg_max;
          if (equivalent != subset) return {false, "mismatch at " + d.to_string()};
          in_subset += subset;
          ++total;
        }
      }
    }
  }
  return {true, std::to_string(total) + " descriptors, " + std::to_string(in_subset) + " in the NIP-compatible subset"};
}

Outcome baldwin_saxl() {
  std::string detail;
  for (std::uint32_t p : {2u, 3u}) {
    for (int n = 1; n <= 3; ++n) {
      const auto k = FiniteField::canonical(p, n);
      const int idx = baldwin_saxl_index(k, units_of(k));
      detail += (detail.empty() ? "" : ", ") + std::string("GF(") + std::to_string(k.order()) + ")=" + std::to_string(idx);
      if (idx > n) return {false, detail};
      if (k.order() == 4 && idx != 2) return {false, detail};
    }
  }
  return {true, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "extension count", 60, extension_count},
      {2, "coset index", 5, coset_index},
      {3, "trace <=> root", 30, trace_root},
      {4, "canonical form round trip", 10, canonical_round_trip},
      {5, "G_a identities", 60, ga_identities},
      {6, "rational identity refutation", 10, lemma_refutation},
      {7, "Laurent solver round trip", 30, laurent_round_trip},
      {8, "obstruction witnesses", 5, obstructions},
      {9, "tame/Kaplansky/perfect grid", 10, corollary_grid},
      {10, "Baldwin-Saxl index", 10, baldwin_saxl},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && secs < c.limit_s;
    failures += !pass;
    std::printf("criterion %2d %-30s %s  %7.3fs / %4.0fs  %s%s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs, c.limit_s,
                o.detail.c_str(), o.ok && !pass ? " (time limit exceeded)" : "");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
