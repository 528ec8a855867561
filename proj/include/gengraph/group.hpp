#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gengraph {

using Elem = std::uint32_t;

/// Membership mask over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe) {}
  ElementSet(std::size_t universe, std::span<const Elem> members);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return mask_.count(); }
  bool contains(Elem e) const { return mask_.test(e); }
  void insert(Elem e) { mask_.set(e); closed_ = false; }

  /// Set only by operations that verified closure under the group product.
  bool closed() const { return closed_; }
  void mark_closed() { closed_ = true; }

  std::vector<Elem> elements() const;  // ascending
  const boost::dynamic_bitset<>& mask() const { return mask_; }

  bool is_subset_of(const ElementSet& other) const { return mask_.is_subset_of(other.mask_); }
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

 private:
  boost::dynamic_bitset<> mask_;
  bool closed_ = false;
};

/// A finite group given by its Cayley table. Element 0 is the identity.
///
/// Instances are immutable once built; `from_table` checks the identity law,
/// inverses and associativity and throws GroupError on any violation.
class Group {
 public:
  /// `table` is row-major n*n; table[i*n + j] is the product i*j.
  static Group from_table(std::vector<Elem> table, std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inverse(Elem a) const { return inverses_[a]; }
  unsigned element_order(Elem a) const { return orders_[a]; }
  Elem power(Elem a, std::uint64_t k) const;
  Elem commutator(Elem a, Elem b) const;  // a^-1 b^-1 a b
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const Elem> table() const { return table_; }
  std::span<const unsigned> orders() const { return orders_; }
  bool is_abelian() const;
  bool is_cyclic() const;

 private:
  Group() = default;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<unsigned> orders_;
  std::vector<std::string> labels_;
};

/// Least subgroup containing `seeds`.
ElementSet closure(const Group& g, const ElementSet& seeds);
ElementSet closure(const Group& g, std::span<const Elem> seeds);

bool is_generating_pair(const Group& g, Elem a, Elem b);

/// Some pair generates (or the group is cyclic).
bool is_two_generated(const Group& g);

/// The lexicographically least generating pair, if any.
std::optional<std::pair<Elem, Elem>> least_generating_pair(const Group& g);

/// A subgroup re-indexed as a group in its own right.
struct Subgroup {
  Group group;
  std::vector<Elem> embedding;  // subgroup element -> element of the parent
};

Subgroup induced_subgroup(const Group& g, const ElementSet& members);

/// Direct product; element (a_1,...,a_k) has mixed-radix index with the first
/// factor most significant.
Group direct_product(std::span<const Group> factors);

Group cyclic_group(std::size_t n);

/// Cayley-table text format ("cayley 1").
Group read_cayley(std::istream& in);
Group load_cayley_file(const std::filesystem::path& path);
void write_cayley(std::ostream& out, const Group& g);

}  // namespace gengraph
