#include "grpd/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "grpd/union_find.hpp"

namespace grpd {

AlgebraPtr make_algebra(BaseRing base, int m) {
  if (m < 1) throw PreconditionError("BadArgument", "algebra needs m >= 1");
  return std::make_shared<IdempotentAlgebra>(base, m);
}

RingElement::RingElement(AlgebraPtr alg, std::vector<mpq_class> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != alg_->m) {
    throw PreconditionError("BadArgument", "coefficient vector length does not match m");
  }
  for (auto& x : c_) x = alg_->base.reduce(x);
}

RingElement RingElement::zero(const AlgebraPtr& alg) {
  return RingElement(alg, std::vector<mpq_class>(alg->m, mpq_class(0)));
}

RingElement RingElement::one(const AlgebraPtr& alg) {
  return RingElement(alg, std::vector<mpq_class>(alg->m, mpq_class(1)));
}

RingElement RingElement::unit(const AlgebraPtr& alg, int i) {
  std::vector<mpq_class> c(alg->m, mpq_class(0));
  c[i] = 1;
  return RingElement(alg, std::move(c));
}

RingElement RingElement::indicator(const AlgebraPtr& alg, const std::vector<int>& support) {
  std::vector<mpq_class> c(alg->m, mpq_class(0));
  for (int i : support) c[i] = 1;
  return RingElement(alg, std::move(c));
}

void RingElement::check_same(const RingElement& o) const {
  if (!(*alg_ == *o.alg_)) {
    throw PreconditionError("AlgebraMismatch", "operands live in different algebras");
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  std::vector<mpq_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = alg_->base.add(c_[i], o.c_[i]);
  return RingElement(alg_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(o);
  std::vector<mpq_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = alg_->base.sub(c_[i], o.c_[i]);
  return RingElement(alg_, std::move(c));
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  std::vector<mpq_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = alg_->base.mul(c_[i], o.c_[i]);
  return RingElement(alg_, std::move(c));
}

RingElement RingElement::scaled(const mpq_class& s) const {
  std::vector<mpq_class> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = alg_->base.mul(c_[i], s);
  return RingElement(alg_, std::move(c));
}

bool RingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool RingElement::operator==(const RingElement& o) const {
  return *alg_ == *o.alg_ && c_ == o.c_;
}

std::string RingElement::str() const {
  std::string out = "(";
  for (int i = 0; i < alg_->m; ++i) {
    if (i) out += ",";
    out += alg_->base.render_scalar(c_[i]);
  }
  return out + ")";
}

std::vector<RingElement> all_idempotents(const AlgebraPtr& alg, const std::vector<int>& support,
                                         int cap) {
  const int k = static_cast<int>(support.size());
  if (k > cap) {
    throw PreconditionError("SupportTooLarge",
                            "support of size " + std::to_string(k) + " exceeds cap");
  }
  std::vector<RingElement> out;
  out.reserve(1u << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<mpq_class> c(alg->m, mpq_class(0));
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) c[support[b]] = 1;
    out.emplace_back(alg, std::move(c));
  }
  return out;
}

PartitionSubalgebra PartitionSubalgebra::full(const AlgebraPtr& alg) {
  std::vector<std::vector<int>> blocks(alg->m);
  for (int i = 0; i < alg->m; ++i) blocks[i] = {i};
  return PartitionSubalgebra{alg, std::move(blocks)};
}

PartitionSubalgebra PartitionSubalgebra::from_blocks(const AlgebraPtr& alg,
                                                     std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(alg->m, false);
  for (auto& b : blocks) {
    if (b.empty()) throw PreconditionError("BadArgument", "empty partition block");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      if (i < 0 || i >= alg->m) throw PreconditionError("BadArgument", "block index out of range");
      if (seen[i]) throw PreconditionError("OverlappingBlocks", "index appears in two blocks");
      seen[i] = true;
    }
  }
  for (int i = 0; i < alg->m; ++i) {
    if (!seen[i]) blocks.push_back({i});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return PartitionSubalgebra{alg, std::move(blocks)};
}

int PartitionSubalgebra::block_of(int i) const {
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), i)) return static_cast<int>(b);
  }
  throw PreconditionError("BadArgument", "index outside partition");
}

RingElement PartitionSubalgebra::block_idempotent(int b) const {
  return RingElement::indicator(alg, blocks[b]);
}

bool PartitionSubalgebra::contains(const RingElement& a) const {
  for (const auto& block : blocks) {
    for (size_t j = 1; j < block.size(); ++j) {
      if (a.coeff(block[j]) != a.coeff(block[0])) return false;
    }
  }
  return true;
}

bool PartitionSubalgebra::refines(const PartitionSubalgebra& coarser) const {
  for (const auto& block : blocks) {
    int b = coarser.block_of(block[0]);
    for (int i : block) {
      if (coarser.block_of(i) != b) return false;
    }
  }
  return true;
}

PartitionSubalgebra partition_meet_as_intersection(const PartitionSubalgebra& c1,
                                                   const PartitionSubalgebra& c2) {
  if (!(*c1.alg == *c2.alg)) {
    throw PreconditionError("AlgebraMismatch", "partitions over different algebras");
  }
  UnionFind uf(c1.alg->m);
  for (const auto& b : c1.blocks)
    for (size_t j = 1; j < b.size(); ++j) uf.unite(b[0], b[j]);
  for (const auto& b : c2.blocks)
    for (size_t j = 1; j < b.size(); ++j) uf.unite(b[0], b[j]);
  return PartitionSubalgebra{c1.alg, uf.classes()};
}

std::string bracket_render(const PartitionSubalgebra& c) {
  std::string out;
  for (const auto& b : c.blocks) {
    if (b.size() < 2) continue;
    out += "[";
    for (size_t j = 0; j < b.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(b[j] + 1);
    }
    out += "]";
  }
  return out;
}

PartitionSubalgebra bracket_parse(const std::string& s, const AlgebraPtr& alg) {
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '[') throw ParseError("expected '[' at position " + std::to_string(i));
    ++i;
    std::vector<int> block;
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) throw ParseError("expected index at position " + std::to_string(i));
      int idx = std::stoi(s.substr(start, i - start));
      if (idx < 1 || idx > alg->m) throw ParseError("index " + std::to_string(idx) + " out of range");
      block.push_back(idx - 1);
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ']' at position " + std::to_string(i));
    }
    std::set<int> uniq(block.begin(), block.end());
    if (uniq.size() != block.size()) throw ParseError("repeated index inside a block");
    blocks.push_back(std::move(block));
    skip_ws();
  }
  try {
    return PartitionSubalgebra::from_blocks(alg, std::move(blocks));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace grpd
