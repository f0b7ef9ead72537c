#include "kmp/affine_matrix.hpp"
#include "kmp/pgroup.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace kmp;

namespace {

/// Z/n_1 x ... x Z/n_l, one byte per coordinate.
OraclePtr cyclic_product(std::vector<std::uint8_t> moduli)
{
	auto g = std::make_shared<GroupOracle>();
	g->identity = Key(moduli.size(), '\0');
	g->multiply = [moduli](Key const &a, Key const &b) {
		Key c(a);
		for (std::size_t i = 0; i < moduli.size(); ++i)
			c[i] = static_cast<char>((static_cast<std::uint8_t>(a[i]) + static_cast<std::uint8_t>(b[i])) % moduli[i]);
		return c;
	};
	g->inverse = [moduli](Key const &a) {
		Key c(a);
		for (std::size_t i = 0; i < moduli.size(); ++i)
			c[i] = static_cast<char>((moduli[i] - static_cast<std::uint8_t>(a[i])) % moduli[i]);
		return c;
	};
	return g;
}

Key unit_vector(std::size_t n, std::size_t i)
{
	Key k(n, '\0');
	k[i] = 1;
	return k;
}

std::vector<Key> keys(MatrixGroup const &G, std::vector<MatrixGroup::Matrix> const &xs)
{
	std::vector<Key> out;
	for (auto const &x : xs)
		out.push_back(G.key(x));
	return out;
}

/// Upper unitriangular 3x3 matrices over F_p.
FiniteGroupTable heisenberg(std::uint32_t p)
{
	auto const G = std::make_shared<MatrixGroup const>(3, FiniteField::of_order(p), 1);
	auto H = closure(MatrixGroup::oracle(G), keys(*G, sylow_generators(*G, false)));
	H.set_prime(p);
	return H;
}

FiniteGroupTable affine_sylow(std::uint32_t m, std::uint32_t q, std::uint32_t k)
{
	auto const G = std::make_shared<MatrixGroup const>(m, FiniteField::of_order(q), k);
	auto U = closure(MatrixGroup::oracle(G), keys(*G, sylow_generators(*G)));
	U.set_prime(G->field().p());
	return U;
}

/// Smallest s such that some s-subset of the elements generates G.
std::size_t minimal_generating_size(FiniteGroupTable const &G)
{
	auto const &els = G.elements();
	std::size_t const n = els.size();
	if (n == 1)
		return 0;
	for (std::size_t s = 1; s <= n; ++s)
	{
		std::vector<bool> pick(n, false);
		std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
		do
		{
			std::vector<Key> gens;
			for (std::size_t i = 0; i < n; ++i)
				if (pick[i])
					gens.push_back(els[i]);
			if (closure(G.oracle_ptr(), gens).order() == n)
				return s;
		} while (std::prev_permutation(pick.begin(), pick.end()));
	}
	return n;
}

} // namespace

TEST(Closure, Examples)
{
	auto const Z = cyclic_product({5});
	EXPECT_EQ(closure(Z, {}).order(), 1u);
	EXPECT_EQ(closure(Z, {unit_vector(1, 0)}).order(), 5u);
	EXPECT_THROW(closure(cyclic_product({7, 7, 7}), {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}, 100),
	             Error);
}

// The t-corrected generators for m = 2, q = 2 are involutions; the closure is
// dihedral of order twice the order of their product.
TEST(Closure, CharacteristicTwoExample)
{
	auto const G = std::make_shared<MatrixGroup const>(2, FiniteField::of_order(2), 2);
	auto const gens = sylow_generators(*G);
	auto const U = closure(MatrixGroup::oracle(G), keys(*G, gens));
	auto const o = MatrixGroup::oracle(G);
	auto const ab = G->key(G->multiply(gens[0], gens[1]));
	EXPECT_EQ(U.order(), 2 * element_order(*o, ab));
	EXPECT_EQ(U.order(), 8u);
}

TEST(Closure, IndependentOfGeneratorOrder)
{
	auto const G = std::make_shared<MatrixGroup const>(3, FiniteField::of_order(2), 2);
	auto gens = keys(*G, sylow_generators(*G));
	auto const ref = closure(MatrixGroup::oracle(G), gens);
	std::mt19937_64 rng(3);
	for (int i = 0; i < 5; ++i)
	{
		std::shuffle(gens.begin(), gens.end(), rng);
		EXPECT_TRUE(same_elements(closure(MatrixGroup::oracle(G), gens), ref));
	}
}

TEST(Derived, Examples)
{
	FiniteGroupTable E(cyclic_product({3, 3, 3}), {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)});
	EXPECT_EQ(derived_subgroup(E).order(), 1u);
	for (std::uint32_t p : {2u, 3u, 5u})
	{
		auto const H = heisenberg(p);
		auto const D = derived_subgroup(H);
		EXPECT_EQ(D.order(), p);
		// D is the center
		for (auto const &z : D.elements())
			for (auto const &g : H.generators())
				EXPECT_EQ(H.oracle().multiply(z, g), H.oracle().multiply(g, z));
	}
}

TEST(Derived, NormalWithAbelianQuotient)
{
	auto const U = affine_sylow(2, 3, 3);
	auto const D = derived_subgroup(U);
	EXPECT_TRUE(is_normalized_by(D, U));
	std::mt19937_64 rng(5);
	auto const &g = U.oracle();
	for (int i = 0; i < 1000; ++i)
	{
		auto const a = random_element(U, rng), b = random_element(U, rng);
		ASSERT_TRUE(D.contains(commutator(g, a, b)));
	}
}

// derived and p-power subgroups are invariant under conjugation by random elements
TEST(Derived, Characteristic)
{
	std::mt19937_64 rng(6);
	for (auto const &U : {affine_sylow(2, 3, 3), heisenberg(5), affine_sylow(3, 2, 2)})
	{
		auto const p = *U.prime();
		auto const D = derived_subgroup(U);
		auto const P = power_subgroup(U, p);
		for (int i = 0; i < 1000; ++i)
		{
			auto const g = random_element(U, rng);
			auto const &x = D.elements()[rng() % D.order()];
			auto const &y = P.elements()[rng() % P.order()];
			ASSERT_TRUE(D.contains(conjugate(U.oracle(), x, g)));
			ASSERT_TRUE(P.contains(conjugate(U.oracle(), y, g)));
		}
	}
}

TEST(Frattini, Examples)
{
	for (std::uint32_t d = 1; d <= 4; ++d)
	{
		std::vector<Key> gens;
		for (std::uint32_t i = 0; i < d; ++i)
			gens.push_back(unit_vector(d, i));
		FiniteGroupTable E(cyclic_product(std::vector<std::uint8_t>(d, 3)), gens, 3);
		EXPECT_EQ(frattini_quotient_dimension(E), d);
	}
	FiniteGroupTable C(cyclic_product({25}), {unit_vector(1, 0)}, 5);
	auto const q = frattini_quotient(C);
	EXPECT_EQ(q.dimension, 1u);
	EXPECT_EQ(q.phi.order(), 5u);
	EXPECT_EQ(frattini_quotient_dimension(heisenberg(5)), 2u);
}

TEST(Frattini, NotAPGroup)
{
	FiniteGroupTable C(cyclic_product({6}), {unit_vector(1, 0)}, 2);
	C.enumerate();
	try
	{
		frattini_quotient(C);
		FAIL();
	}
	catch (Error const &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::NotAPGroup);
	}
}

// commutators alone already contain the p-th powers of the generators
TEST(Frattini, PowersInsideCommutatorsForAffineSylow)
{
	auto const U = affine_sylow(2, 3, 3);
	EXPECT_TRUE(same_elements(frattini_subgroup(U), derived_subgroup(U)));
}

// dimension equals the minimum size of a generating subset (order <= p^5)
TEST(Frattini, EqualsMinimalGeneratingSize)
{
	std::vector<FiniteGroupTable> groups;
	groups.push_back(heisenberg(2));
	groups.push_back(heisenberg(3));
	groups.push_back(affine_sylow(2, 3, 2));
	groups.push_back(affine_sylow(2, 2, 2));
	groups.push_back(FiniteGroupTable(cyclic_product({2, 2, 2, 4}),
	                                  {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}, 2));
	groups.push_back(FiniteGroupTable(cyclic_product({9, 3}), {unit_vector(2, 0), unit_vector(2, 1)}, 3));
	for (auto &G : groups)
	{
		G.enumerate();
		ASSERT_LE(G.order(), 243u);
		EXPECT_EQ(frattini_quotient_dimension(G), minimal_generating_size(G));
	}
}

TEST(Frattini, GeneratingSubsetIsGenerating)
{
	auto const U = affine_sylow(2, 3, 3);
	auto const s = generating_subset(U);
	EXPECT_EQ(closure(U.oracle_ptr(), s).order(), U.order());
	EXPECT_GE(s.size(), frattini_quotient_dimension(U));
}

TEST(Perfect, Examples)
{
	auto const G = std::make_shared<MatrixGroup const>(2, FiniteField::of_order(4), 1);
	EXPECT_TRUE(is_perfect(special_linear_group(G)));
	EXPECT_FALSE(is_perfect(heisenberg(3)));
	EXPECT_FALSE(is_perfect(affine_sylow(2, 3, 2)));
	EXPECT_TRUE(is_perfect(closure(cyclic_product({3}), {})));
	auto const S3 = std::make_shared<MatrixGroup const>(2, FiniteField::of_order(3), 1);
	EXPECT_FALSE(is_perfect(special_linear_group(S3)));
}

TEST(Filtration, Examples)
{
	auto const G = std::make_shared<MatrixGroup const>(2, FiniteField::of_order(3), 3);
	auto const U = affine_sylow(2, 3, 3);
	std::vector<FiniteGroupTable> chain;
	for (std::uint32_t i = 1; i <= 3; ++i)
		chain.push_back(congruence_subgroup(G, i));

	auto const all = check_filtration_lemma(U, chain, U);
	EXPECT_TRUE(all.hypothesis);
	EXPECT_TRUE(all.conclusion_checked);
	EXPECT_TRUE(all.conclusion);

	auto const none = check_filtration_lemma(U, chain, closure(U.oracle_ptr(), {}));
	EXPECT_FALSE(none.hypothesis);
	EXPECT_FALSE(none.conclusion_checked);

	auto const r = affine_filtration_check(2, FiniteField::of_order(3), 4);
	EXPECT_TRUE(r.hypothesis && r.conclusion_checked && r.conclusion);

	std::vector<FiniteGroupTable> reversed(chain.rbegin(), chain.rend());
	EXPECT_THROW(check_filtration_lemma(U, reversed, U), Error);
}

TEST(Tits, SpecialLinearExamples)
{
	for (auto [m, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}})
	{
		auto const s = sl_tits_setup(m, FiniteField::of_order(q));
		auto const r = verify_tits_axioms(s.G, s.B, s.N, s.S);
		EXPECT_TRUE(r.all()) << m << " " << q;
		EXPECT_TRUE(r.bruhat_partition);
	}
}

TEST(Tits, Trivial)
{
	auto const o = cyclic_product({2});
	auto const T = closure(o, {});
	auto const r = verify_tits_axioms(T, T, T, {});
	EXPECT_TRUE(r.t1);
	EXPECT_TRUE(r.t2);
	EXPECT_TRUE(r.t3);
	EXPECT_TRUE(r.t4);
	EXPECT_TRUE(r.bruhat_partition);
}

// N = B does not reach G
TEST(Tits, BrokenSetupDetected)
{
	auto const s = sl_tits_setup(2, FiniteField::of_order(3));
	auto const r = verify_tits_axioms(s.G, s.B, s.B, {});
	EXPECT_FALSE(r.all());
}
