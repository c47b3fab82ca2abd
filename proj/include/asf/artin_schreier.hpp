#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asf/finite_field.hpp"
#include "asf/fq_poly.hpp"

namespace asf {

/// x^p - x.
Element wp(const Element& x);

/// K / wp(K) for a finite field K.
struct CosetDecomposition {
  FiniteField field;
  std::vector<Element> image;  // wp(K), enumeration order
  std::vector<Element> reps;   // least element of each coset; reps[0] = 0
  std::uint64_t index;
};

CosetDecomposition image_subgroup(const FiniteField& field);

/// Least x with wp(x) = a, or nullopt. Small fields are decided twice, by an
/// exhaustive scan and by the trace criterion, and the two must agree.
std::optional<Element> has_as_root(const FiniteField& field, const Element& a);

/// Exhaustive-scan path only (reference oracle).
std::optional<Element> has_as_root_scan(const FiniteField& field, const Element& a);

struct AsExtension {
  FiniteField base;
  FiniteField extension;   // degree p*n over F_p
  Embedding embedding;     // base -> extension
  Element alpha;           // least root of x^p - x - a in the extension
  FqPoly defining_poly;    // x^p - x - a over the base
};

/// K(alpha) with alpha^p - alpha = a. Throws ElementInImage when a is in wp(K).
AsExtension build_as_extension(const FiniteField& field, const Element& a);

/// (p^k - 1) / (p - 1): nontrivial F_p^x orbits on an F_p-space of dimension k.
std::uint64_t orbit_count(std::uint32_t p, int k);

/// Number of Artin-Schreier extensions of a finite field via the orbit formula.
std::uint64_t count_as_extensions(const FiniteField& field);

struct BruteForceCount {
  std::uint64_t classes;            // K-isomorphism classes of K(alpha_a), a a nonzero coset rep
  std::uint64_t criterion_classes;  // classes under a ~ b iff b in lambda*a + wp(K)
  bool agree;                       // the two partitions coincide
};

/// Builds K(alpha_a) for every nonzero coset representative and groups them
/// by exhibited K-isomorphisms. Meant for small fields.
BruteForceCount count_as_extensions_bruteforce(const FiniteField& field);

/// True iff there is a K-embedding of K(alpha_a) into K(alpha_b): the
/// minimal polynomial of alpha_a has a root in K(alpha_b).
bool as_extensions_isomorphic(const AsExtension& a, const AsExtension& b);

/// (b, c) = (a, -a), so that a = b^p + wp(c).
std::pair<Element, Element> frobenius_decompose(const Element& a);

}  // namespace asf
