#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asf/additive_poly.hpp"
#include "asf/finite_field.hpp"
#include "asf/fq_poly.hpp"
#include "asf/laurent.hpp"

namespace asf {

/// Residue field of a valued-field descriptor: a finite field F_q or F_p^alg.
struct ResidueDesc {
  enum class Kind { Finite, AlgebraicClosure };
  Kind kind;
  std::uint32_t p;
  int degree;  // q = p^degree for Finite; unused otherwise

  static ResidueDesc finite(std::uint64_t q);
  static ResidueDesc algebraic_closure(std::uint32_t p);

  FiniteField field() const;  // Finite only
  std::string to_string() const;
};

/// `GF(q)`, `GF(p^n)` or `algclosure(p)`.
ResidueDesc parse_residue(std::string_view text);

enum class NipStatus { NipInfinite, NipFinite, Unknown };
std::string_view to_string(NipStatus s);

struct ValuedFieldDescriptor {
  std::uint32_t p;
  ResidueDesc residue;
  ValueGroupDesc group;
  bool alg_maximal;
  NipStatus residue_nip;

  /// Checks the characteristic and assigns residue_nip from the fixed table
  /// (finite fields and F_p^alg are NIP).
  static ValuedFieldDescriptor make(ResidueDesc residue, ValueGroupDesc group, bool alg_maximal);
  std::string to_string() const;
};

/// F_p^alg as the directed system of canonical fields F_{p^d}, built on
/// demand and memoized. Safe for concurrent use.
class AlgebraicClosureTower {
 public:
  explicit AlgebraicClosureTower(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FiniteField stage(int degree) const;
  /// Least-root embedding F_{p^from} -> F_{p^to}; requires from | to.
  Embedding embedding(int from, int to) const;
  std::size_t stages_built() const;

  struct Solution {
    Element root;  // in stage(degree)
    int degree;    // degree over F_p of the field where the root was found
  };

  /// A root of f(x) = a, f and a over stage(m), found in the smallest stage
  /// F_{p^{m k}} that contains one and certified by evaluation. nullopt
  /// only when f is zero and a is not.
  std::optional<Solution> solve(const AdditivePolynomial& f, const Element& a) const;

 private:
  std::uint32_t p_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, FiniteField> stages_;
  mutable std::map<std::pair<int, int>, Embedding> embeddings_;
};

struct KaplanskyResult {
  bool c1;                                    // value group p-divisible
  std::optional<std::string> c1_witness;
  bool c2;                                    // every f(x) = a solvable on the residue field
  std::optional<AdditivePolynomial> c2_poly;  // failing instance
  std::optional<Element> c2_target;
  bool verified_to_bound;                     // c2 came from a bounded tower search
  int bound;
  std::size_t instances_checked;
  int max_solution_degree;

  bool kaplansky() const { return c1 && c2; }
};

/// Kaplansky conditions. For a finite residue field condition 2 fails with
/// f = x^p - x and the least a of nonzero trace, certified by evaluation. For
/// F_p^alg every additive f over F_p of p-degree <= search_bound with every
/// a in F_p, and every wp-instance over F_{p^m} for 2 <= m <= search_bound,
/// is solved in the tower.
KaplanskyResult kaplansky_check(const ValuedFieldDescriptor& desc, int search_bound);

struct IpWitness {
  enum class Type { NonDivisibleValue, NegativeValuationInstance, ResidueInstance };
  Type type;
  std::string value;                  // the non-divisible value, or the series
  std::optional<SolveOutcome> outcome;  // solver verdict on the series instance
};

struct VfCharVerdict {
  enum class Kind { NipCompatible, IpWitnessed, Unknown };
  Kind kind;
  std::vector<IpWitness> witnesses;
};

std::string_view to_string(VfCharVerdict::Kind kind);
std::string_view to_string(IpWitness::Type type);

VfCharVerdict vfchar_verdict(const ValuedFieldDescriptor& desc);

struct ClassificationVerdict {
  KaplanskyResult kaplansky;
  bool tame;
  bool perfect_residue;
  VfCharVerdict vfchar;
};

/// Tame, Kaplansky, perfect residue and the NIP verdict. On NIP-compatible
/// algebraically maximal descriptors the three properties must coincide;
/// a violation throws CrossCheckFailure.
ClassificationVerdict classify(const ValuedFieldDescriptor& desc, int search_bound);

}  // namespace asf
