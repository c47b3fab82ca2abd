#include "asf/report.hpp"

#include <algorithm>
#include <random>

#include "asf/additive_poly.hpp"
#include "asf/artin_schreier.hpp"
#include "asf/error.hpp"
#include "asf/group_ga.hpp"
#include "asf/laurent.hpp"
#include "asf/valuation.hpp"

namespace asf {

bool FullReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.agree; }) &&
         std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.ok; });
}

namespace {

constexpr std::uint64_t kOracleMaxQ = 27;
constexpr std::uint32_t kOracleMaxP = 5;

CountRow count_row(std::uint32_t p, int n) {
  const FiniteField k = FiniteField::canonical(p, n);
  CountRow row{k.order(), p, n, 0, 0, 0, std::nullopt, 0, 0, false};
  const auto cosets = image_subgroup(k);
  row.index = cosets.index;
  std::vector<std::uint8_t> hit(row.q, 0);
  for (const auto& x : k.elements()) hit[wp(x).index()] = 1;
  row.index_oracle = row.q / static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  row.count = count_as_extensions(k);
  if (row.q <= kOracleMaxQ && p <= kOracleMaxP) row.count_oracle = count_as_extensions_bruteforce(k).classes;
  bool trace_ok = true;
  for (const auto& a : k.elements()) {
    const bool tz = trace_to_prime(a).is_zero();
    const bool solvable = hit[a.index()] != 0;
    row.trace_zero += tz;
    row.solvable += solvable;
    if (tz != solvable || has_as_root_scan(k, a).has_value() != solvable) trace_ok = false;
  }
  row.agree = trace_ok && row.index == p && row.index_oracle == p && row.count == orbit_count(p, 1) &&
              (!row.count_oracle || *row.count_oracle == row.count);
  return row;
}

CheckLine canonical_round_trip(std::uint64_t max_q) {
  std::mt19937_64 rng(0x5eed);
  const std::uint32_t primes[] = {2, 3, 5};
  int done = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = primes[rng() % 3];
    int k = 1 + static_cast<int>(rng() % 3);
    while (k > 1 && FiniteField::canonical(p, k).order() > max_q) --k;
    const FiniteField field = FiniteField::canonical(p, k);
    const int n = static_cast<int>(rng() % 4);
    Element a = field.random(rng);
    if (a.is_zero()) a = field.one();
    const auto cf = canonical_form(expand_canonical(a, n));
    if (!cf || !(cf->a == a) || cf->n != n) {
      return {"canonical_form", false, "round trip failed for a=" + a.to_string() + " n=" + std::to_string(n)};
    }
    ++done;
  }
  const FiniteField f2 = FiniteField::prime(2);
  const AdditivePolynomial non(f2, {f2.one(), f2.zero(), f2.one()});
  const bool none = !canonical_form(non).has_value();
  return {"canonical_form", none, std::to_string(done) + " round trips; x^4+x has no form: " + (none ? "yes" : "no")};
}

CheckLine ga_identities(std::uint64_t max_q) {
  std::size_t tuples = 0;
  std::string fields;
  for (std::uint64_t q : {4, 8, 9, 27}) {
    if (q > max_q) continue;
    const auto [p, n] = prime_power_decompose(q);
    const FiniteField k = FiniteField::canonical(p, n);
    std::vector<Element> units;
    for (const auto& x : k.elements()) {
      if (!x.is_zero()) units.push_back(x);
    }
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<std::size_t> idx(len, 0);
      while (true) {
        std::vector<Element> tuple;
        for (auto i : idx) tuple.push_back(units[i]);
        // Throws CrossCheckFailure on any violated identity.
        first_coord_image(GaGroupSpec(k, tuple));
        ++tuples;
        std::size_t pos = 0;
        while (pos < len && ++idx[pos] == units.size()) idx[pos++] = 0;
        if (pos == len) break;
      }
    }
    fields += (fields.empty() ? "" : ",") + std::to_string(q);
  }
  return {"ga_identities", true, std::to_string(tuples) + " tuples over q in {" + fields + "}"};
}

CheckLine lemma_search() {
  const bool none2 = !rational_as_inverse_search(2, 4).has_value();
  const bool none3 = !rational_as_inverse_search(3, 3).has_value();
  return {"rational_inverse", none2 && none3, std::string("F_2 deg<=4: ") + (none2 ? "none" : "found") +
                                                  ", F_3 deg<=3: " + (none3 ? "none" : "found")};
}

CheckLine laurent_round_trip() {
  std::mt19937_64 rng(0x5eed);
  const std::pair<std::uint32_t, int> fields[] = {{2, 1}, {2, 2}, {2, 3}, {3, 2}};
  constexpr std::int64_t kPrec = 64;
  int done = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto [p, n] = fields[rng() % 4];
    const FiniteField k = FiniteField::canonical(p, n);
    const std::int64_t start = -static_cast<std::int64_t>(rng() % 11);
    std::vector<Element> c;
    for (std::int64_t e = start; e < kPrec; ++e) c.push_back(k.random(rng));
    const auto b = LaurentSeries::from_coeffs(k, start, std::move(c), kPrec);
    const auto a = wp(b);
    const auto out = as_solve(a, kPrec);
    if (out.tag != SolveOutcome::Tag::Solved) return {"laurent_round_trip", false, "unsolved " + a.to_string()};
    const auto diff = *out.root - b;
    bool constant = diff.precision() >= kPrec;
    for (std::int64_t e = diff.valuation(); constant && e < kPrec; ++e) {
      const Element c = diff.coeff(e);
      constant = e == 0 ? c.in_prime_field() : c.is_zero();
    }
    if (!constant) return {"laurent_round_trip", false, "root - b not in F_p for " + b.to_string()};
    ++done;
  }
  return {"laurent_round_trip", true, std::to_string(done) + " round trips at precision 64"};
}

CheckLine obstructions() {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField k = FiniteField::prime(p);
    if (as_solve(LaurentSeries::monomial(k.one(), -1, 16), 16).tag != SolveOutcome::Tag::UnsolvableNegVal) {
      return {"obstructions", false, "t^-1 solved over GF(" + std::to_string(p) + ")"};
    }
    if (as_solve(LaurentSeries::monomial(k.one(), 0, 16), 16).tag != SolveOutcome::Tag::UnsolvableResidue) {
      return {"obstructions", false, "1 solved over GF(" + std::to_string(p) + ")"};
    }
  }
  const auto fpt = ValuedFieldDescriptor::make(ResidueDesc::finite(2), ValueGroupDesc::integers(), true);
  const auto algt = ValuedFieldDescriptor::make(ResidueDesc::algebraic_closure(2), ValueGroupDesc::integers(), true);
  const bool ip = vfchar_verdict(fpt).kind == VfCharVerdict::Kind::IpWitnessed &&
                  vfchar_verdict(algt).kind == VfCharVerdict::Kind::IpWitnessed;
  return {"obstructions", ip, "t^-1 and trace-1 constants rejected for p in {2,3,5}"};
}

CheckLine valued_grid(std::uint64_t max_q) {
  // Depth 2 for small primes; depth 1 elsewhere keeps the tower stages small.
  const auto bound_for = [](std::uint32_t p) { return p <= 7 ? 2 : 1; };
  std::size_t checked = 0;
  for (std::uint32_t p = 2; p <= std::min<std::uint64_t>(max_q, 27); ++p) {
    if (!is_prime(p)) continue;
    std::vector<ResidueDesc> residues{ResidueDesc::algebraic_closure(p)};
    for (std::uint64_t q = p; q <= std::min<std::uint64_t>(max_q, 27); q *= p) residues.push_back(ResidueDesc::finite(q));
    for (const auto& residue : residues) {
      for (const auto& group : {ValueGroupDesc::integers(), ValueGroupDesc::localized(p)}) {
        for (bool alg_max : {true, false}) {
          const auto desc = ValuedFieldDescriptor::make(residue, group, alg_max);
          const auto v = classify(desc, bound_for(p));
          const bool equivalent = v.tame == v.kaplansky.kaplansky() && v.kaplansky.kaplansky() == v.perfect_residue;
          const bool subset = v.vfchar.kind == VfCharVerdict::Kind::NipCompatible && alg_max;
          if (equivalent != subset) return {"valued_grid", false, "mismatch at " + desc.to_string()};
          ++checked;
        }
      }
    }
  }
  return {"valued_grid", true, std::to_string(checked) + " descriptors, bound 2 for p <= 7, 1 above"};
}

CheckLine baldwin_saxl(std::uint64_t max_q) {
  std::string detail;
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    for (int n = 1; n <= 3; ++n) {
      const FiniteField k = FiniteField::canonical(p, n);
      if (k.order() > max_q) continue;
      std::vector<Element> units;
      for (const auto& x : k.elements()) {
        if (!x.is_zero()) units.push_back(x);
      }
      const int idx = baldwin_saxl_index(k, units);
      ok = ok && idx <= n && (k.order() != 4 || idx == 2);
      detail += (detail.empty() ? "" : " ") + std::to_string(k.order()) + ":" + std::to_string(idx);
    }
  }
  return {"baldwin_saxl", ok, detail};
}

}  // namespace

FullReport report_all(std::uint64_t max_q) {
  if (max_q < 2) raise(ErrorCode::InvalidArgument, "max-q must be >= 2");
  if (max_q > kernels::SmallField::kMaxOrder) raise(ErrorCode::FieldTooLarge, "max-q is limited to 1024");
  FullReport out{max_q, {}, {}};
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    const auto [p, n] = prime_power_decompose(q);
    if (p != 0) out.rows.push_back(count_row(p, n));
  }
  const bool rows_ok = std::all_of(out.rows.begin(), out.rows.end(), [](const CountRow& r) { return r.agree; });
  out.checks.push_back({"counting_table", rows_ok, std::to_string(out.rows.size()) + " fields"});
  out.checks.push_back(canonical_round_trip(max_q));
  out.checks.push_back(ga_identities(max_q));
  out.checks.push_back(lemma_search());
  out.checks.push_back(laurent_round_trip());
  out.checks.push_back(obstructions());
  out.checks.push_back(valued_grid(max_q));
  out.checks.push_back(baldwin_saxl(max_q));
  return out;
}

}  // namespace asf
