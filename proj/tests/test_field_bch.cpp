#include "kmp/bch.hpp"
#include "kmp/field.hpp"
#include "kmp/truncated_poly.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kmp;

TEST(PrimeField, Arithmetic)
{
	PrimeField const F(7);
	for (std::uint32_t a = 1; a < 7; ++a)
		EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
	EXPECT_EQ(F.from_int(-1), 6u);
	EXPECT_EQ(F.from_rational(mpq_class(1, 2)), 4u);
	EXPECT_THROW(F.from_rational(mpq_class(1, 7)), Error);
	EXPECT_THROW(PrimeField(6), Error);
}

TEST(FiniteField, AxiomsExhaustive)
{
	for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u})
	{
		auto const F = FiniteField::of_order(q);
		EXPECT_EQ(F.basis(1), F.one());
		for (std::uint32_t a = 0; a < q; ++a)
		{
			auto const x = static_cast<FiniteField::Element>(a);
			EXPECT_EQ(F.add(x, F.neg(x)), 0);
			if (a)
				EXPECT_EQ(F.mul(x, F.inv(x)), 1);
			for (std::uint32_t b = 0; b < q; ++b)
			{
				auto const y = static_cast<FiniteField::Element>(b);
				ASSERT_EQ(F.mul(x, y), F.mul(y, x));
				if (a && b)
					ASSERT_NE(F.mul(x, y), 0);
				for (std::uint32_t c = 0; c < q; c += 1 + q / 9)
				{
					auto const z = static_cast<FiniteField::Element>(c);
					ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
					ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
					ASSERT_EQ(F.add(F.add(x, y), z), F.add(x, F.add(y, z)));
				}
			}
		}
	}
}

TEST(FiniteField, BasisAndDigits)
{
	auto const F = FiniteField::of_order(25);
	EXPECT_EQ(F.p(), 5u);
	EXPECT_EQ(F.r(), 2u);
	EXPECT_EQ(F.digits(F.basis(2)), (std::vector<std::uint32_t>{0, 1}));
	for (std::uint32_t a = 0; a < 25; ++a)
		EXPECT_EQ(F.from_digits(F.digits(static_cast<FiniteField::Element>(a))), a);
	EXPECT_TRUE(F.modulus_is_primitive());
	EXPECT_THROW(FiniteField::of_order(12), Error);
}

TEST(FiniteField, LargerOrdersSampled)
{
	std::mt19937_64 rng(9);
	for (std::uint32_t q : {32u, 49u, 64u, 81u, 121u, 125u, 128u, 169u, 243u, 256u})
	{
		auto const F = FiniteField::of_order(q);
		std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
		for (int i = 0; i < 2000; ++i)
		{
			auto const x = static_cast<FiniteField::Element>(pick(rng));
			auto const y = static_cast<FiniteField::Element>(pick(rng));
			auto const z = static_cast<FiniteField::Element>(pick(rng));
			ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
			ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
			if (x)
				ASSERT_EQ(F.mul(x, F.inv(x)), 1);
		}
	}
}

TEST(TruncatedPoly, RingAxioms)
{
	TruncatedPolyRing const R(FiniteField::of_order(9), 4);
	std::mt19937_64 rng(2);
	auto rnd = [&] {
		auto p = R.zero();
		for (auto &c : p)
			c = static_cast<FiniteField::Element>(rng() % 9);
		return p;
	};
	for (int i = 0; i < 1000; ++i)
	{
		auto const a = rnd(), b = rnd(), c = rnd();
		ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
		ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
		ASSERT_EQ(R.mul(a, b), R.mul(b, a));
		if (R.is_unit(a))
			ASSERT_EQ(R.mul(a, R.inv(a)), R.one());
	}
	auto const t = R.monomial(1, 1);
	EXPECT_TRUE(R.is_zero(R.mul(R.mul(t, t), R.mul(t, t))));
	EXPECT_FALSE(R.is_zero(R.mul(t, R.mul(t, t))));
	EXPECT_EQ(R.valuation(R.mul(t, t)), 2u);
}

namespace {

oracle::QMat random_strict_upper(std::size_t n, std::mt19937_64 &rng)
{
	auto m = oracle::qzero(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			m[i][j] = static_cast<long>(rng() % 7) - 3;
	return m;
}

} // namespace

// log(exp X exp Y) on nilpotent rational matrices of class <= H
TEST(Bch, MatchesMatrixLogExp)
{
	std::mt19937_64 rng(17);
	for (int H : {2, 3, 4, 5, 6})
	{
		BchPlan const plan(H);
		std::vector<mpq_class> coeffs;
		for (auto const &t : plan.terms())
			coeffs.push_back(t.coefficient);
		std::vector<oracle::QMat> scratch;
		int const cases = H <= 4 ? 1000 : 200;
		for (int i = 0; i < cases; ++i)
		{
			auto const n = static_cast<std::size_t>(H + 1);
			auto const X = random_strict_upper(n, rng);
			auto const Y = random_strict_upper(n, rng);
			auto out = oracle::qzero(n);
			plan.evaluate(
			    X, Y, std::span<mpq_class const>(coeffs), scratch, out,
			    [n](oracle::QMat &m) { m = oracle::qzero(n); },
			    [](oracle::QMat const &a, oracle::QMat const &b, oracle::QMat &o) { o = oracle::qbracket(a, b); },
			    [](mpq_class const &c, oracle::QMat const &v, oracle::QMat &acc) { acc = oracle::qadd(acc, v, c); });
			ASSERT_EQ(out, oracle::qlog(oracle::qmul(oracle::qexp(X), oracle::qexp(Y)))) << "H=" << H;
		}
	}
}

TEST(Bch, LowOrderCoefficients)
{
	BchPlan const plan(3);
	EXPECT_EQ(plan.coefficient({0}), 1);
	EXPECT_EQ(plan.coefficient({1}), 1);
	// X + Y + [X,Y]/2 + [X,[X,Y]]/12 - [Y,[X,Y]]/12, collected from Dynkin words
	// ([Y,X] = -[X,Y], [X,[Y,X]] = -[X,[X,Y]], [Y,[Y,X]] = -[Y,[X,Y]])
	EXPECT_EQ(plan.coefficient({0, 1}) - plan.coefficient({1, 0}), mpq_class(1, 2));
	EXPECT_EQ(plan.coefficient({0, 0, 1}) - plan.coefficient({0, 1, 0}), mpq_class(1, 12));
	EXPECT_EQ(plan.coefficient({1, 0, 1}) - plan.coefficient({1, 1, 0}), mpq_class(-1, 12));
}

TEST(Bch, DenominatorPrimesBoundedByWeight)
{
	for (int H = 1; H <= 8; ++H)
		EXPECT_LE(BchPlan(H).largest_denominator_prime(), static_cast<unsigned long>(H));
}
