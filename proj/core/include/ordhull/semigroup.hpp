#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordhull/errors.hpp"
#include "ordhull/rng.hpp"

namespace ordhull {

// Finite semigroup given by a Cayley table, table[i*n+j] = index of e_i e_j.
// Associativity is validated at construction; monoid/group/commutativity
// flags are derived once and cached.
class FiniteSemigroup {
 public:
  static FiniteSemigroup from_table(std::vector<std::string> names, std::vector<int> table);

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<int>& table() const { return table_; }

  std::optional<int> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }
  bool is_group() const { return is_group_; }
  bool is_commutative() const { return is_commutative_; }
  int inverse(int a) const;  // throws NotAGroup

 private:
  FiniteSemigroup() = default;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;
  std::optional<int> identity_;
  bool is_group_ = false;
  bool is_commutative_ = false;
  std::vector<int> inverse_;
};

bool is_associative(const std::vector<int>& table, int n);

struct HomCheck {
  bool ok = true;
  std::string detail;
};

// Product preservation plus the unit pin: when both sides are monoids the
// source unit must map to the target unit. (For group sources the inverse
// compatibility 𝔥(h⁻¹) = 𝔥(h)⁻¹-in-the-image follows from these.)
HomCheck check_homomorphism(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                            const std::vector<int>& map);

struct ImageRestriction {
  FiniteSemigroup image;
  std::vector<int> map;    // src index -> image index
  std::vector<int> embed;  // image index -> original dst index
};
ImageRestriction restrict_to_image(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                                   const std::vector<int>& map);

// Returns the semigroup unchanged when it already has a two-sided identity,
// otherwise adjoins a fresh one.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

struct AdjoinedHom {
  FiniteSemigroup source;
  std::vector<int> map;
};
// Extends a homomorphism along adjoin_identity by sending the fresh unit to
// the target's unit. Throws TargetNotMonoid.
AdjoinedHom adjoin_identity(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                            const std::vector<int>& map);

// Closure of `generators` under the product; in group mode the generators'
// inverses are thrown in first. Returns sorted element indices.
// Throws EmptyGenerators / GroupModeOnNonGroup.
std::vector<int> generate(const FiniteSemigroup& s, const std::vector<int>& generators,
                          bool group_mode);
bool is_generating(const FiniteSemigroup& s, const std::vector<int>& generators, bool group_mode);

// Lexicographically minimal Cayley table under element relabelings; the
// canonical key used to deduplicate enumeration streams.
std::vector<int> canonical_table(const std::vector<int>& table, int n);

// All associative Cayley tables on n elements up to isomorphism (canonical
// representatives in ascending order). Exhaustive, so n <= 3.
std::vector<std::vector<int>> semigroup_tables(int n);

// Z1..Z4 and the Klein four-group; every group on <= 4 elements up to iso.
std::vector<std::vector<int>> group_tables(int n);

// Seeded randomized backtracking over partial Cayley tables; yields `count`
// associative tables (deduplicated canonically, so possibly fewer).
std::vector<std::vector<int>> sample_semigroup_tables(int n, int count, Rng& rng);

// All homomorphisms from src into an abstract finite multiplication given by
// (dst_size, mul), in lexicographic image order. `pin` forces map[pin->first]
// = pin->second (used for unit constraints). Stops early when visit returns
// false.
void enumerate_homomorphisms(const FiniteSemigroup& src, int dst_size,
                             const std::function<int(int, int)>& mul,
                             std::optional<std::pair<int, int>> pin,
                             const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace ordhull
