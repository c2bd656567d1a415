#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfrob/rational.hpp"

namespace qfrob {

/// Multiplication-table finite group. Elements are indices 0..order-1.
/// Construction validates the group axioms: closure and identity/inverse
/// exactly, associativity exhaustively for order <= 64 and on randomized
/// triples above that.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxTableOrder = 10000;

  /// `table[a * order + b]` = index of a*b.
  static FiniteGroup from_table(std::size_t order, std::vector<uint32_t> table,
                                std::vector<std::string> names = {});

  /// Closure of permutation generators (each a bijection on 0..degree-1),
  /// capped at `closure_bound` elements.
  static FiniteGroup from_permutations(const std::vector<std::vector<uint32_t>>& generators,
                                       std::size_t closure_bound = kMaxTableOrder);

  std::size_t order() const { return order_; }
  uint32_t identity() const { return identity_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return table_[a * order_ + b]; }
  uint32_t inverse(uint32_t a) const { return inverse_[a]; }
  const std::string& name_of(uint32_t a) const { return names_[a]; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  uint32_t commutator(uint32_t a, uint32_t b) const {
    return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
  }

 private:
  FiniteGroup() = default;
  void validate();

  std::size_t order_ = 0;
  uint32_t identity_ = 0;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> inverse_;
  std::vector<std::string> names_;
  std::string name_ = "G";
};

/// Conjugacy-class data: the partition, the class index of every element and
/// centralizer orders. |class(g)| * |centralizer(g)| = |G| holds for every
/// element (validated at construction).
struct ClassData {
  std::vector<std::vector<uint32_t>> classes;
  std::vector<uint32_t> class_of;
  std::vector<std::uint64_t> centralizer_order;

  std::size_t count() const { return classes.size(); }
};

ClassData conjugacy_classes(const FiniteGroup& g);

/// One arbitrary-precision integer per conjugacy class; by convention the
/// value at a class is the count at any single element of that class.
using ClassFunction = std::vector<BigInt>;

/// Builtin groups: "C<n>" cyclic, "D<n>" dihedral of order 2n, "S3", "S4",
/// "Q8". Throws on unknown names.
FiniteGroup builtin_group(const std::string& name);

/// Group file: either a header line "order n" followed by n rows of n 1-based
/// indices, or a header line "perm" followed by one cycle-notation generator
/// per line, e.g. "(1 2)(3 4)". Lines starting with '#' are comments.
FiniteGroup parse_group_file(const std::string& text);

}  // namespace qfrob
