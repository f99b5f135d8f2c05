#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "inswap/errors.hpp"

namespace inswap {

// Bijection of {1..K}, stored 0-based: image(i) = sigma(i+1) - 1.
// Serialized form is the 1-based image list, e.g. "2,1,3,4".
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> zero_based_images) : img_(std::move(zero_based_images)) {
    validate();
  }

  static Permutation identity(std::size_t k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  // From 1-based images as written in the paper's (a1,...,aK) notation.
  static Permutation from_one_based(const std::vector<int>& images) {
    std::vector<int> v(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) v[i] = images[i] - 1;
    return Permutation(std::move(v));
  }

  static Permutation parse(const std::string& csv) {
    std::vector<int> v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok) - 1);
    return Permutation(std::move(v));
  }

  std::size_t size() const { return img_.size(); }
  int operator()(std::size_t i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(img_[i] + 1);
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
  void validate() const {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("not a permutation: " + to_string());
      seen[v] = 1;
    }
  }

  std::vector<int> img_;
};

// r = p o q with r(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: arity mismatch (" + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()) + ")");
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p(static_cast<std::size_t>(q(i)));
  return Permutation(std::move(r));
}

inline Permutation invert(const Permutation& p) { return p.inverse(); }

// Ordered, duplicate-free set of permutations of common arity. Elements are
// kept in lexicographic order so downstream weight tables and CSV output are
// reproducible. subgroup() is set by the generators below after checking
// closure, and is required by the PINS handoff rule.
class PermutationSet {
public:
  PermutationSet() = default;

  PermutationSet(std::size_t arity, std::vector<Permutation> elements, bool subgroup = false)
      : arity_(arity), elems_(std::move(elements)), subgroup_(subgroup) {
    for (const auto& p : elems_)
      if (p.size() != arity_) throw std::invalid_argument("permutation set: arity mismatch");
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      throw std::invalid_argument("permutation set: duplicate element");
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return elems_.size(); }
  bool is_subgroup() const { return subgroup_; }
  const Permutation& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
  }

private:
  std::size_t arity_ = 0;
  std::vector<Permutation> elems_;
  bool subgroup_ = false;
};

inline constexpr std::size_t kDefaultClosureCap = 10080;  // 2 * 7!, room for 7! single blocks

// Smallest subgroup containing the generators: breadth-first closure of
// {identity} u generators u inverses under composition.
inline PermutationSet generate_subgroup(const std::vector<Permutation>& generators,
                                        std::size_t arity,
                                        std::size_t cap = kDefaultClosureCap) {
  if (cap < 1) throw std::invalid_argument("generate_subgroup: cap must be >= 1");
  for (const auto& g : generators)
    if (g.size() != arity) throw std::invalid_argument("generate_subgroup: arity mismatch");

  // Worklist closure: every popped element is composed (both orders) with all
  // elements present at pop time; new products join the list and the worklist.
  std::set<Permutation> seen;
  std::vector<Permutation> elems;
  auto add = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap)
        throw CapacityError("generate_subgroup: closure exceeds cap of " + std::to_string(cap) +
                            " elements");
      elems.push_back(std::move(p));
    }
  };

  add(Permutation::identity(arity));
  for (const auto& g : generators) {
    add(g);
    add(g.inverse());
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t n = elems.size();
    for (std::size_t j = 0; j < n; ++j) {
      add(compose(elems[i], elems[j]));
      add(compose(elems[j], elems[i]));
    }
  }

  return PermutationSet(arity, std::move(elems), true);
}

inline PermutationSet generate_subgroup(const PermutationSet& generators,
                                        std::size_t cap = kDefaultClosureCap) {
  return generate_subgroup(generators.elements(), generators.arity(), cap);
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// True iff the union of the given subgroups generates all of S_K.
inline bool generates_full_group(const std::vector<PermutationSet>& subgroups,
                                 std::size_t cap = kDefaultClosureCap) {
  if (subgroups.empty()) throw std::invalid_argument("generates_full_group: no subgroups");
  const std::size_t k = subgroups.front().arity();
  std::vector<Permutation> gens;
  for (const auto& s : subgroups) {
    if (s.arity() != k) throw std::invalid_argument("generates_full_group: arity mismatch");
    gens.insert(gens.end(), s.elements().begin(), s.elements().end());
  }
  const PermutationSet closure = generate_subgroup(gens, k, cap);
  return closure.size() == factorial(k);
}

inline constexpr std::size_t kDefaultMaxBlock = 6;

// Subgroup of all permutations acting independently within contiguous blocks
// of the given sizes; order = prod_i (sizes[i]!). Built by direct enumeration.
inline PermutationSet block_partition_subgroup(std::size_t k, const std::vector<std::size_t>& sizes,
                                               std::size_t max_block = kDefaultMaxBlock,
                                               std::size_t cap = kDefaultClosureCap) {
  std::size_t sum = 0;
  std::uint64_t order = 1;
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("block_partition_subgroup: zero block size");
    if (s > max_block)
      throw CapacityError("block_partition_subgroup: block of size " + std::to_string(s) +
                          " exceeds maximum " + std::to_string(max_block));
    sum += s;
    order *= factorial(s);
    if (order > cap)
      throw CapacityError("block_partition_subgroup: order " + std::to_string(order) +
                          " exceeds cap of " + std::to_string(cap) + " elements");
  }
  if (sum != k)
    throw std::invalid_argument("block_partition_subgroup: block sizes sum to " +
                                std::to_string(sum) + ", expected " + std::to_string(k));

  // Cartesian product of per-block permutations.
  std::vector<Permutation> elems;
  elems.reserve(order);
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);

  // offsets[b] = start index of block b
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (std::size_t s : sizes) {
    offsets.push_back(off);
    off += s;
  }

  std::vector<std::vector<int>> block_perms(sizes.size());
  std::vector<std::size_t> idx(sizes.size(), 0);
  std::vector<std::vector<std::vector<int>>> all_block(sizes.size());
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    std::vector<int> blk(sizes[b]);
    std::iota(blk.begin(), blk.end(), static_cast<int>(offsets[b]));
    std::sort(blk.begin(), blk.end());
    do {
      all_block[b].push_back(blk);
    } while (std::next_permutation(blk.begin(), blk.end()));
  }

  // odometer over blocks
  while (true) {
    std::vector<int> img(k);
    for (std::size_t b = 0; b < sizes.size(); ++b)
      for (std::size_t j = 0; j < sizes[b]; ++j) img[offsets[b] + j] = all_block[b][idx[b]][j];
    elems.emplace_back(std::move(img));
    std::size_t b = 0;
    while (b < sizes.size() && ++idx[b] == all_block[b].size()) {
      idx[b] = 0;
      ++b;
    }
    if (b == sizes.size()) break;
  }

  return PermutationSet(k, std::move(elems), true);
}

}  // namespace inswap
