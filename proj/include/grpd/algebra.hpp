#ifndef GRPD_ALGEBRA_HPP_
#define GRPD_ALGEBRA_HPP_

#include <memory>
#include <string>
#include <vector>

#include "grpd/error.hpp"
#include "grpd/scalar.hpp"

namespace grpd {

// A = R e_1 + ... + R e_m with pairwise orthogonal idempotents summing to 1.
struct IdempotentAlgebra {
  BaseRing base;
  int m = 0;
  std::vector<std::string> labels;  // optional, one per idempotent

  IdempotentAlgebra() = default;
  IdempotentAlgebra(BaseRing b, int m_) : base(b), m(m_) {}

  bool operator==(const IdempotentAlgebra& other) const {
    return base == other.base && m == other.m;
  }
};

using AlgebraPtr = std::shared_ptr<const IdempotentAlgebra>;

AlgebraPtr make_algebra(BaseRing base, int m);

// Dense coefficient vector over the algebra's base ring.
class RingElement {
 public:
  RingElement(AlgebraPtr alg, std::vector<mpq_class> coeffs);
  static RingElement zero(const AlgebraPtr& alg);
  static RingElement one(const AlgebraPtr& alg);
  static RingElement unit(const AlgebraPtr& alg, int i);  // e_i
  // Sum of e_i over a sorted index set.
  static RingElement indicator(const AlgebraPtr& alg, const std::vector<int>& support);

  const AlgebraPtr& algebra() const { return alg_; }
  const mpq_class& coeff(int i) const { return c_[i]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;  // componentwise (Hadamard)
  RingElement scaled(const mpq_class& s) const;

  bool is_zero() const;
  bool operator==(const RingElement& o) const;

  std::string str() const;

 private:
  void check_same(const RingElement& o) const;  // throws AlgebraMismatch

  AlgebraPtr alg_;
  std::vector<mpq_class> c_;
};

// All idempotents of A supported inside `support` (0/1 vectors; base ring is a
// domain, so there are no others). Includes 0. Throws when |support| > cap.
std::vector<RingElement> all_idempotents(const AlgebraPtr& alg, const std::vector<int>& support,
                                         int cap = 20);

// Subalgebra spanned by the block idempotents f_b of a partition of {0..m-1}.
struct PartitionSubalgebra {
  AlgebraPtr alg;
  std::vector<std::vector<int>> blocks;  // normalized: sorted, by least member

  static PartitionSubalgebra full(const AlgebraPtr& alg);  // all singletons = A
  static PartitionSubalgebra from_blocks(const AlgebraPtr& alg,
                                         std::vector<std::vector<int>> blocks);

  int block_of(int i) const;  // index into blocks
  RingElement block_idempotent(int b) const;
  bool contains(const RingElement& a) const;  // constant on every block
  // Every block of `coarser` is a union of blocks of *this.
  bool refines(const PartitionSubalgebra& coarser) const;

  bool operator==(const PartitionSubalgebra& o) const { return blocks == o.blocks; }
  bool operator<(const PartitionSubalgebra& o) const { return blocks < o.blocks; }
};

// Span of C1 ∩ C2: elements constant on both partitions are exactly those
// constant on the join (connected components of the union of block relations).
PartitionSubalgebra partition_meet_as_intersection(const PartitionSubalgebra& c1,
                                                   const PartitionSubalgebra& c2);

// Bracket notation with 1-based indices; singleton blocks omitted.
std::string bracket_render(const PartitionSubalgebra& c);
PartitionSubalgebra bracket_parse(const std::string& s, const AlgebraPtr& alg);

}  // namespace grpd

#endif  // GRPD_ALGEBRA_HPP_
