#pragma once

#include "kmp/error.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace kmp {

/// Canonical serialized form of a group element, owned by the model that
/// produced it (coordinate bytes or matrix coefficient bytes).
using Key = std::string;

/// Black-box group: a reentrant, side-effect free multiplication and
/// inversion on canonical keys.
struct GroupOracle
{
	std::function<Key(Key const &, Key const &)> multiply;
	std::function<Key(Key const &)> inverse;
	Key identity;
};

using OraclePtr = std::shared_ptr<GroupOracle const>;

inline constexpr std::size_t default_enumeration_cap = std::size_t{1} << 21;

Key commutator(GroupOracle const &g, Key const &a, Key const &b); // a b a^-1 b^-1
Key conjugate(GroupOracle const &g, Key const &a, Key const &by); // by^-1 a by
Key power(GroupOracle const &g, Key const &a, std::uint64_t n);
/// Order of a, or 0 if it exceeds `limit`.
std::uint64_t element_order(GroupOracle const &g, Key const &a, std::uint64_t limit = 1u << 20);

/// A subgroup presented by generators, optionally enumerated by breadth-first
/// closure under right multiplication by the generators. Insertion order is
/// deterministic for a fixed generator order.
class FiniteGroupTable
{
  public:
	FiniteGroupTable(OraclePtr oracle, std::vector<Key> generators,
	                 std::optional<std::uint32_t> prime = std::nullopt);

	GroupOracle const &oracle() const { return *oracle_; }
	OraclePtr const &oracle_ptr() const { return oracle_; }
	std::vector<Key> const &generators() const { return generators_; }
	std::optional<std::uint32_t> prime() const { return prime_; }
	void set_prime(std::uint32_t p) { prime_ = p; }

	bool enumerated() const { return enumerated_; }
	/// Enumerates (idempotent). Throws EnumerationCapExceeded.
	FiniteGroupTable &enumerate(std::size_t cap = default_enumeration_cap);
	/// Adds a generator; extends the enumeration when one exists.
	void adjoin(Key generator, std::size_t cap = default_enumeration_cap);

	// The following require an enumeration.
	std::size_t order() const;
	std::vector<Key> const &elements() const;
	bool contains(Key const &k) const;

  private:
	void insert(Key k, std::size_t cap);
	void close(std::size_t cap);
	void require_enumerated() const;

	OraclePtr oracle_;
	std::vector<Key> generators_;
	std::optional<std::uint32_t> prime_;
	bool enumerated_ = false;
	std::vector<Key> elements_;
	std::unordered_map<Key, std::uint32_t> index_;
	std::size_t done_ = 0;      // elements multiplied by every generator seen so far
	std::size_t gens_done_ = 0; // generators applied to elements [0, done_)
};

FiniteGroupTable closure(OraclePtr oracle, std::vector<Key> generators,
                         std::size_t cap = default_enumeration_cap);

/// Smallest subgroup containing `seeds` and normalized by `conjugators`.
FiniteGroupTable normal_closure(OraclePtr oracle, std::vector<Key> const &seeds,
                                std::vector<Key> const &conjugators,
                                std::size_t cap = default_enumeration_cap);

/// Normal closure of the commutators of generator pairs.
FiniteGroupTable derived_subgroup(FiniteGroupTable const &G, std::size_t cap = default_enumeration_cap);

/// Normal closure of p-th powers of generators only.
FiniteGroupTable power_subgroup(FiniteGroupTable const &G, std::uint32_t p,
                                std::size_t cap = default_enumeration_cap);

/// Phi(G) = G^p [G, G]: normal closure of generator commutators and p-th powers.
FiniteGroupTable frattini_subgroup(FiniteGroupTable const &G, std::size_t cap = default_enumeration_cap);

struct FrattiniQuotient
{
	std::uint32_t prime;
	std::uint32_t dimension;   // dim_{F_p} G / Phi(G)
	FiniteGroupTable phi;
	std::vector<Key> basis;    // generators independent modulo Phi
	std::uint64_t group_order; // |Phi| p^dimension
};

/// Frattini quotient of a finite p-group given by generators. The dimension is
/// the rank of the generators modulo the enumerated Phi; when G is itself
/// enumerated, |G| = |Phi| p^dimension is checked. Throws NotAPGroup if an
/// element order (exhaustive up to 1e5 elements, else 10^3 samples) is not a
/// power of the prime.
FrattiniQuotient frattini_quotient(FiniteGroupTable const &G, std::size_t cap = default_enumeration_cap,
                                   std::uint64_t seed = 1);

inline std::uint32_t frattini_quotient_dimension(FiniteGroupTable const &G,
                                                 std::size_t cap = default_enumeration_cap)
{
	return frattini_quotient(G, cap).dimension;
}

/// Derived subgroup equals G (G gets enumerated).
bool is_perfect(FiniteGroupTable const &G, std::size_t cap = default_enumeration_cap);

bool is_subgroup_of(FiniteGroupTable const &A, FiniteGroupTable const &B); // both enumerated
bool same_elements(FiniteGroupTable const &A, FiniteGroupTable const &B);
/// Generators of N conjugated by generators of G stay in N (N enumerated).
bool is_normalized_by(FiniteGroupTable const &N, FiniteGroupTable const &G);

/// Greedy small generating set of an enumerated subgroup.
std::vector<Key> generating_subset(FiniteGroupTable const &H, std::size_t cap = default_enumeration_cap);

/// Random element as a product of random generators.
Key random_element(FiniteGroupTable const &G, std::mt19937_64 &rng);

struct FiltrationReport
{
	std::vector<bool> step_holds; // K_i subset of V K_{i+1}, i = 1..n-1
	bool hypothesis = false;      // all steps hold
	bool conclusion_checked = false;
	bool conclusion = false;      // K_1 subset of V
};

/// Finite analogue of "K_i in V K_{i+1} for all i implies K_1 in V" along a
/// chain K_1 >= ... >= K_n = {1} of normal subgroups. All inputs enumerated.
/// Throws ChainNotNested.
FiltrationReport check_filtration_lemma(FiniteGroupTable const &G,
                                        std::vector<FiniteGroupTable> const &chain,
                                        FiniteGroupTable const &V,
                                        std::size_t cap = default_enumeration_cap);

struct TitsReport
{
	bool t1 = false; // <B u N> = G, B n N normal in N
	bool t2 = false; // S generates W = N/(B n N), elements of order 2
	bool t3 = false; // s B w in BwB u BswB
	bool t4 = false; // s B s not in B
	bool bruhat_partition = false; // G is the disjoint union of BwB
	std::size_t weyl_order = 0;

	bool all() const { return t1 && t2 && t3 && t4; }
};

/// (G, B, N, S) checked exhaustively; S are representatives in N.
TitsReport verify_tits_axioms(FiniteGroupTable const &G, FiniteGroupTable const &B,
                              FiniteGroupTable const &N, std::vector<Key> const &S,
                              std::size_t cap = default_enumeration_cap);

} // namespace kmp
