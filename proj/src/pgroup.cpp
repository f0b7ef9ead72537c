#include "kmp/pgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

namespace kmp {

Key commutator(GroupOracle const &g, Key const &a, Key const &b)
{
	return g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
}

Key conjugate(GroupOracle const &g, Key const &a, Key const &by)
{
	return g.multiply(g.multiply(g.inverse(by), a), by);
}

Key power(GroupOracle const &g, Key const &a, std::uint64_t n)
{
	Key result = g.identity;
	Key base = a;
	while (n)
	{
		if (n & 1)
			result = g.multiply(result, base);
		n >>= 1;
		if (n)
			base = g.multiply(base, base);
	}
	return result;
}

std::uint64_t element_order(GroupOracle const &g, Key const &a, std::uint64_t limit)
{
	Key x = a;
	for (std::uint64_t n = 1; n <= limit; ++n)
	{
		if (x == g.identity)
			return n;
		x = g.multiply(x, a);
	}
	return 0;
}

FiniteGroupTable::FiniteGroupTable(OraclePtr oracle, std::vector<Key> generators,
                                   std::optional<std::uint32_t> prime)
    : oracle_(std::move(oracle)), prime_(prime)
{
	for (auto &g : generators)
		if (g != oracle_->identity && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
			generators_.push_back(std::move(g));
}

void FiniteGroupTable::insert(Key k, std::size_t cap)
{
	if (index_.count(k))
		return;
	if (elements_.size() >= cap)
		throw Error(ErrorKind::EnumerationCapExceeded,
		            fmt::format("subgroup has more than {} elements", cap));
	index_.emplace(k, static_cast<std::uint32_t>(elements_.size()));
	elements_.push_back(std::move(k));
}

void FiniteGroupTable::close(std::size_t cap)
{
	auto const &mul = oracle_->multiply;
	std::size_t const old_done = done_;
	for (std::size_t g = gens_done_; g < generators_.size(); ++g)
		for (std::size_t i = 0; i < old_done; ++i)
			insert(mul(elements_[i], generators_[g]), cap);
	gens_done_ = generators_.size();
	while (done_ < elements_.size())
	{
		for (auto const &g : generators_)
			insert(mul(elements_[done_], g), cap);
		++done_;
	}
}

FiniteGroupTable &FiniteGroupTable::enumerate(std::size_t cap)
{
	if (enumerated_)
		return *this;
	insert(oracle_->identity, cap);
	close(cap);
	enumerated_ = true;
	return *this;
}

void FiniteGroupTable::adjoin(Key generator, std::size_t cap)
{
	if (generator == oracle_->identity ||
	    std::find(generators_.begin(), generators_.end(), generator) != generators_.end())
		return;
	generators_.push_back(std::move(generator));
	if (enumerated_)
		close(cap);
}

void FiniteGroupTable::require_enumerated() const
{
	if (!enumerated_)
		throw Error(ErrorKind::InvalidArgument, "group table is not enumerated");
}

std::size_t FiniteGroupTable::order() const
{
	require_enumerated();
	return elements_.size();
}

std::vector<Key> const &FiniteGroupTable::elements() const
{
	require_enumerated();
	return elements_;
}

bool FiniteGroupTable::contains(Key const &k) const
{
	require_enumerated();
	return index_.count(k) != 0;
}

FiniteGroupTable closure(OraclePtr oracle, std::vector<Key> generators, std::size_t cap)
{
	FiniteGroupTable G(std::move(oracle), std::move(generators));
	G.enumerate(cap);
	return G;
}

FiniteGroupTable normal_closure(OraclePtr oracle, std::vector<Key> const &seeds,
                                std::vector<Key> const &conjugators, std::size_t cap)
{
	FiniteGroupTable N(oracle, seeds);
	N.enumerate(cap);
	auto const &g = *oracle;
	std::vector<Key> inverses;
	for (auto const &c : conjugators)
		inverses.push_back(g.inverse(c));
	for (std::size_t i = 0; i < N.generators().size(); ++i)
		for (std::size_t c = 0; c < conjugators.size(); ++c)
		{
			Key x = g.multiply(g.multiply(inverses[c], N.generators()[i]), conjugators[c]);
			if (!N.contains(x))
				N.adjoin(std::move(x), cap);
		}
	return N;
}

FiniteGroupTable derived_subgroup(FiniteGroupTable const &G, std::size_t cap)
{
	auto const &gens = G.generators();
	std::vector<Key> seeds;
	for (std::size_t i = 0; i < gens.size(); ++i)
		for (std::size_t j = i + 1; j < gens.size(); ++j)
			seeds.push_back(commutator(G.oracle(), gens[i], gens[j]));
	auto D = normal_closure(G.oracle_ptr(), seeds, gens, cap);
	if (G.prime())
		D.set_prime(*G.prime());
	return D;
}

FiniteGroupTable power_subgroup(FiniteGroupTable const &G, std::uint32_t p, std::size_t cap)
{
	std::vector<Key> seeds;
	for (auto const &x : G.generators())
		seeds.push_back(power(G.oracle(), x, p));
	auto P = normal_closure(G.oracle_ptr(), seeds, G.generators(), cap);
	P.set_prime(p);
	return P;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint32_t p)
{
	if (n == 0)
		return false;
	while (n % p == 0)
		n /= p;
	return n == 1;
}

std::uint32_t smallest_prime_factor(std::uint64_t n)
{
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return static_cast<std::uint32_t>(d);
	return static_cast<std::uint32_t>(n);
}

std::uint32_t infer_prime(FiniteGroupTable const &G)
{
	if (G.prime())
		return *G.prime();
	for (auto const &x : G.generators())
	{
		auto const n = element_order(G.oracle(), x);
		if (n == 0)
			throw Error(ErrorKind::NotAPGroup, "generator of unbounded order");
		if (n > 1)
			return smallest_prime_factor(n);
	}
	return 2; // trivial group
}

void check_p_group(FiniteGroupTable const &G, std::uint32_t p, std::uint64_t seed)
{
	auto const &g = G.oracle();
	auto check = [&](Key const &x) {
		if (!is_power_of(element_order(g, x), p))
			throw Error(ErrorKind::NotAPGroup, fmt::format("element order is not a power of {}", p));
	};
	for (auto const &x : G.generators())
		check(x);
	if (G.enumerated() && G.order() <= 100000)
	{
		if (!is_power_of(G.order(), p))
			throw Error(ErrorKind::NotAPGroup, fmt::format("|G| = {} is not a power of {}", G.order(), p));
		for (auto const &x : G.elements())
			check(x);
		return;
	}
	if (G.generators().empty())
		return;
	std::mt19937_64 rng(seed);
	for (int i = 0; i < 1000; ++i)
		check(random_element(G, rng));
}

} // namespace

FiniteGroupTable frattini_subgroup(FiniteGroupTable const &G, std::size_t cap)
{
	std::uint32_t const p = infer_prime(G);
	auto const &gens = G.generators();
	std::vector<Key> seeds;
	for (std::size_t i = 0; i < gens.size(); ++i)
		for (std::size_t j = i + 1; j < gens.size(); ++j)
			seeds.push_back(commutator(G.oracle(), gens[i], gens[j]));
	for (auto const &x : gens)
		seeds.push_back(power(G.oracle(), x, p));
	auto Phi = normal_closure(G.oracle_ptr(), seeds, gens, cap);
	Phi.set_prime(p);
	return Phi;
}

FrattiniQuotient frattini_quotient(FiniteGroupTable const &G, std::size_t cap, std::uint64_t seed)
{
	std::uint32_t const p = infer_prime(G);
	check_p_group(G, p, seed);
	auto Phi = frattini_subgroup(G, cap);
	auto const &g = G.oracle();

	// G/Phi is elementary abelian; reps enumerates the span of the chosen basis.
	std::vector<Key> reps{g.identity};
	std::vector<Key> basis;
	for (auto const &x : G.generators())
	{
		bool dependent = false;
		for (auto const &t : reps)
			if (Phi.contains(g.multiply(g.inverse(t), x)))
			{
				dependent = true;
				break;
			}
		if (dependent)
			continue;
		basis.push_back(x);
		std::vector<Key> next;
		next.reserve(reps.size() * p);
		for (auto const &t : reps)
		{
			Key y = t;
			for (std::uint32_t e = 0; e < p; ++e)
			{
				next.push_back(y);
				y = g.multiply(y, x);
			}
		}
		reps = std::move(next);
	}

	std::uint64_t order = Phi.order();
	for (std::size_t i = 0; i < basis.size(); ++i)
		order *= p;
	if (G.enumerated() && G.order() != order)
		throw Error(ErrorKind::NotAPGroup,
		            fmt::format("|G| = {} but |Phi| p^d = {}", G.order(), order));
	auto const dim = static_cast<std::uint32_t>(basis.size());
	return {p, dim, std::move(Phi), std::move(basis), order};
}

bool is_perfect(FiniteGroupTable const &G, std::size_t cap)
{
	FiniteGroupTable copy = G;
	copy.enumerate(cap);
	auto D = derived_subgroup(copy, cap);
	return D.order() == copy.order();
}

bool is_subgroup_of(FiniteGroupTable const &A, FiniteGroupTable const &B)
{
	return std::all_of(A.elements().begin(), A.elements().end(),
	                   [&](Key const &k) { return B.contains(k); });
}

bool same_elements(FiniteGroupTable const &A, FiniteGroupTable const &B)
{
	return A.order() == B.order() && is_subgroup_of(A, B);
}

bool is_normalized_by(FiniteGroupTable const &N, FiniteGroupTable const &G)
{
	for (auto const &n : N.generators())
		for (auto const &c : G.generators())
			if (!N.contains(conjugate(N.oracle(), n, c)))
				return false;
	return true;
}

std::vector<Key> generating_subset(FiniteGroupTable const &H, std::size_t cap)
{
	FiniteGroupTable span(H.oracle_ptr(), {});
	span.enumerate(cap);
	for (auto const &x : H.elements())
		if (!span.contains(x))
			span.adjoin(x, cap);
	return span.generators();
}

Key random_element(FiniteGroupTable const &G, std::mt19937_64 &rng)
{
	auto const &gens = G.generators();
	auto const &g = G.oracle();
	if (gens.empty())
		return g.identity;
	std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
	std::size_t const length = 2 * gens.size() + 20;
	Key x = g.identity;
	for (std::size_t i = 0; i < length; ++i)
		x = g.multiply(x, gens[pick(rng)]);
	return x;
}

FiltrationReport check_filtration_lemma(FiniteGroupTable const &G,
                                        std::vector<FiniteGroupTable> const &chain,
                                        FiniteGroupTable const &V, std::size_t cap)
{
	if (chain.empty() || chain.back().order() != 1)
		throw Error(ErrorKind::ChainNotNested, "chain must end with the trivial subgroup");
	for (std::size_t i = 0; i + 1 < chain.size(); ++i)
		if (!is_subgroup_of(chain[i + 1], chain[i]))
			throw Error(ErrorKind::ChainNotNested, fmt::format("K_{} is not inside K_{}", i + 2, i + 1));
	for (std::size_t i = 0; i < chain.size(); ++i)
		if (!is_normalized_by(chain[i], G))
			throw Error(ErrorKind::InvalidArgument, fmt::format("K_{} is not normal", i + 1));

	FiltrationReport report;
	report.hypothesis = true;
	for (std::size_t i = 0; i + 1 < chain.size(); ++i)
	{
		auto gens = V.generators();
		for (auto &k : generating_subset(chain[i + 1], cap))
			gens.push_back(std::move(k));
		auto const product = closure(V.oracle_ptr(), std::move(gens), cap); // V K_{i+1}
		bool const holds = is_subgroup_of(chain[i], product);
		report.step_holds.push_back(holds);
		report.hypothesis = report.hypothesis && holds;
	}
	if (report.hypothesis)
	{
		report.conclusion_checked = true;
		report.conclusion = is_subgroup_of(chain.front(), V);
	}
	return report;
}

} // namespace kmp
