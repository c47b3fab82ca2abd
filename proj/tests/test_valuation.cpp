#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "asf/artin_schreier.hpp"
#include "asf/error.hpp"
#include "asf/valuation.hpp"

using namespace asf;

namespace {

ValuedFieldDescriptor desc(const std::string& residue, ValueGroupDesc group, bool alg_max) {
  return ValuedFieldDescriptor::make(parse_residue(residue), group, alg_max);
}

std::vector<ValuedFieldDescriptor> grid() {
  std::vector<ValuedFieldDescriptor> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    std::vector<ResidueDesc> residues{ResidueDesc::algebraic_closure(p)};
    for (std::uint64_t q = p; q <= 27; q *= p) residues.push_back(ResidueDesc::finite(q));
    for (const auto& r : residues) {
      for (const auto& g : {ValueGroupDesc::integers(), ValueGroupDesc::localized(p)}) {
        for (bool alg_max : {true, false}) out.push_back(ValuedFieldDescriptor::make(r, g, alg_max));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("descriptors") {
  const auto d = desc("GF(4)", ValueGroupDesc::integers(), true);
  CHECK(d.p == 2);
  CHECK(d.residue_nip == NipStatus::NipFinite);
  CHECK(desc("algclosure(3)", ValueGroupDesc::localized(3), false).residue_nip == NipStatus::NipInfinite);
  CHECK_THROWS_AS(parse_residue("algclosure(4)"), Error);
  CHECK_THROWS_AS(parse_residue("GF(6)"), Error);
  CHECK(parse_residue("GF(3^2)").degree == 2);
}

TEST_CASE("kaplansky_check examples") {
  const auto k1 = kaplansky_check(desc("GF(2)", ValueGroupDesc::integers(), true), 2);
  CHECK_FALSE(k1.c1);
  CHECK(k1.c1_witness == "1");
  CHECK_FALSE(k1.c2);
  REQUIRE(k1.c2_poly);
  CHECK(k1.c2_poly->to_string() == "x^2+x");
  CHECK(k1.c2_target->is_one());
  CHECK_FALSE(k1.kaplansky());

  const auto k2 = kaplansky_check(desc("algclosure(2)", ValueGroupDesc::localized(2), true), 2);
  CHECK(k2.c1);
  CHECK(k2.c2);
  CHECK(k2.verified_to_bound);
  CHECK(k2.kaplansky());
  CHECK(k2.instances_checked > 0);

  const auto k3 = kaplansky_check(desc("algclosure(3)", ValueGroupDesc::integers(), true), 1);
  CHECK_FALSE(k3.c1);
  CHECK(k3.c1_witness == "1");
  CHECK_THROWS_AS(kaplansky_check(desc("GF(2)", ValueGroupDesc::integers(), true), 0), Error);
}

TEST_CASE("finite residue witness is verifiable by evaluation") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const auto d = ValuedFieldDescriptor::make(ResidueDesc::finite(q), ValueGroupDesc::rationals(), true);
    const auto k = kaplansky_check(d, 1);
    REQUIRE(k.c2_poly);
    REQUIRE(k.c2_target);
    for (const auto& x : k.c2_poly->field().elements()) CHECK_FALSE((*k.c2_poly)(x) == *k.c2_target);
  }
}

TEST_CASE("tower solutions are certified and bounded") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const AlgebraicClosureTower tower(p);
    const auto fp = FiniteField::prime(p);
    const auto f = AdditivePolynomial::artin_schreier(fp);
    for (std::uint32_t a = 0; a < p; ++a) {
      const auto sol = tower.solve(f, fp.from_int(a));
      REQUIRE(sol);
      CHECK(sol->degree == (a == 0 ? 1 : static_cast<int>(p)));
      CHECK(sol->root.frobenius() - sol->root == sol->root.field().from_int(a));
    }
    const auto f2 = tower.stage(2);
    const auto g = AdditivePolynomial::artin_schreier(f2);
    for (const auto& a : f2.elements()) {
      const auto sol = tower.solve(g, a);
      REQUIRE(sol);
      CHECK(sol->degree <= 2 * static_cast<int>(p));
      const auto e = tower.embedding(2, sol->degree);
      CHECK(sol->root.frobenius() - sol->root == e(a));
    }
  }
  const AlgebraicClosureTower t2(2);
  const auto f2 = FiniteField::prime(2);
  CHECK_FALSE(t2.solve(AdditivePolynomial(f2), f2.one()));
}

TEST_CASE("tower is safe for concurrent readers") {
  const AlgebraicClosureTower tower(3);
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      const int d = 1 + i % 4;
      const auto k = tower.stage(d);
      const auto e = tower.embedding(1, d);
      ok[i] = k.degree() == d && e.target() == k;
    });
  }
  for (auto& t : threads) t.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(tower.stages_built() == 4);
}

TEST_CASE("classify examples") {
  const auto v1 = classify(desc("GF(2)", ValueGroupDesc::integers(), true), 2);
  CHECK_FALSE(v1.tame);
  CHECK_FALSE(v1.kaplansky.kaplansky());
  CHECK(v1.perfect_residue);
  const auto v2 = classify(desc("algclosure(2)", ValueGroupDesc::localized(2), true), 2);
  CHECK(v2.tame);
  CHECK(v2.kaplansky.kaplansky());
  const auto v3 = classify(desc("algclosure(2)", ValueGroupDesc::integers(), true), 2);
  CHECK_FALSE(v3.tame);
  CHECK_FALSE(v3.kaplansky.kaplansky());
}

TEST_CASE("vfchar_verdict examples") {
  const auto fpt = vfchar_verdict(desc("GF(2)", ValueGroupDesc::integers(), true));
  CHECK(fpt.kind == VfCharVerdict::Kind::IpWitnessed);
  bool has_negval = false;
  for (const auto& w : fpt.witnesses) {
    if (w.type == IpWitness::Type::NegativeValuationInstance) {
      has_negval = true;
      REQUIRE(w.outcome);
      CHECK(w.outcome->tag == SolveOutcome::Tag::UnsolvableNegVal);
      CHECK(w.value == "t^-1");
    }
  }
  CHECK(has_negval);
  const auto algt = vfchar_verdict(desc("algclosure(2)", ValueGroupDesc::integers(), true));
  CHECK(algt.kind == VfCharVerdict::Kind::IpWitnessed);
  CHECK(vfchar_verdict(desc("algclosure(3)", ValueGroupDesc::localized(3), true)).kind ==
        VfCharVerdict::Kind::NipCompatible);
  CHECK(vfchar_verdict(desc("algclosure(3)", ValueGroupDesc::localized(3), false)).kind ==
        VfCharVerdict::Kind::Unknown);
}

TEST_CASE("verdict invariants over the grid") {
  for (const auto& d : grid()) {
    const auto v = classify(d, d.p <= 7 ? 2 : 1);
    const bool divisible = value_group_p_divisible(d.group, d.p).divisible;
    const bool finite = d.residue.kind == ResidueDesc::Kind::Finite;
    if (v.vfchar.kind == VfCharVerdict::Kind::IpWitnessed) CHECK_FALSE(v.vfchar.witnesses.empty());
    if (finite || !divisible) CHECK(v.vfchar.kind == VfCharVerdict::Kind::IpWitnessed);
    CHECK(v.tame == (d.alg_maximal && divisible));
    const bool equivalent = v.tame == v.kaplansky.kaplansky() && v.kaplansky.kaplansky() == v.perfect_residue;
    const bool subset = v.vfchar.kind == VfCharVerdict::Kind::NipCompatible && d.alg_maximal;
    CHECK(equivalent == subset);
  }
}
