#pragma once

#include <optional>

#include "qfrob/group.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/quantize.hpp"

namespace qfrob {

/// Per-class counts N_1 with N_1(c) = #{(a,b) : [a,b] = z} for any fixed z in
/// the class c. The per-element counts are constant on classes, and the mass
/// balance sum_c N_1(c) * |c| = |G|^2 is asserted.
ClassFunction commutator_distribution(const FiniteGroup& g, const ClassData& classes);
ClassFunction commutator_distribution(const FiniteGroup& g);

/// |Hom(pi_1(Sigma_genus), G)|: the number of 2g-tuples whose product of
/// commutators is the identity. genus 0 gives 1.
///
/// Computed by g-fold convolution in the class-function algebra. For
/// per-element class functions f, h the convolution is
///   (f * h)(C) = sum_{A,B} f(A) * h(B) * c_{A,B,C},
/// where c_{A,B,C} = #{(a,b) in A x B : a*b = z} for a fixed representative
/// z of C (independent of the choice). The weighting is locked by the
/// brute-force oracle: whenever |G|^(2*genus) <= 10^6 the convolution result
/// is compared against direct tuple enumeration and a mismatch throws.
BigInt genus_count(const FiniteGroup& g, unsigned genus);

/// Direct enumeration over G^(2*genus); exponential, for oracle use.
BigInt genus_count_brute_force(const FiniteGroup& g, unsigned genus);

/// Counts with marked points: |G|^(points-1) * genus_count. Adding a point
/// multiplies by exactly |G| (the split law).
BigInt pointed_count(const FiniteGroup& g, unsigned genus, unsigned points);

/// The twisting operator on the free module over the group elements:
/// Theta(1_g) = |Stab(g)| * sum of 1_h over h conjugate to g. Its trace is
/// |G| * (number of classes), and Theta^2 = |G| * Theta.
struct TwistOperator {
  BigInt trace;
  std::optional<Matrix<Rational>> op;  // materialized for |G| <= matrix_cap
  bool identity_based = false;  // trace obtained from |G|*c instead of the matrix
};

TwistOperator twist_trace(const FiniteGroup& g, std::size_t matrix_cap = 512);

/// The counting sequence genus 0..max_genus over Q, ready for quantization.
InvariantSequence<Rational> repvar_sequence(const FiniteGroup& g, unsigned max_genus);

}  // namespace qfrob
