#include "kmp/root_system.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace kmp;

namespace {

RootVector rv(std::vector<std::int64_t> const &c)
{
	RootVector v(c.size());
	for (std::size_t i = 0; i < c.size(); ++i)
		v(i) = c[i];
	return v;
}

oracle::Vec ov(RootVector const &v)
{
	return oracle::Vec(v.begin(), v.end());
}

std::vector<std::vector<std::int64_t>> rows_of(GeneralizedCartanMatrix const &A)
{
	std::vector<std::vector<std::int64_t>> r(A.size(), std::vector<std::int64_t>(A.size()));
	for (Index i = 0; i < A.size(); ++i)
		for (Index j = 0; j < A.size(); ++j)
			r[i][j] = A(i, j);
	return r;
}

auto const A2 = make_gcm({{2, -1}, {-1, 2}});
auto const B2 = make_gcm({{2, -1}, {-2, 2}});
auto const G2 = make_gcm({{2, -1}, {-3, 2}});
auto const Aff = make_gcm({{2, -2}, {-2, 2}});
auto const A1xA1 = make_gcm({{2, 0}, {0, 2}});

} // namespace

TEST(Reflection, Examples)
{
	EXPECT_EQ(simple_reflection(A2, 0, simple_root(A2, 1)), rv({1, 1}));
	EXPECT_EQ(simple_reflection(A2, "1", simple_root(A2, "2")), rv({1, 1}));
	for (auto const *A : {&A2, &B2, &G2, &Aff})
		for (Index s = 0; s < 2; ++s)
			EXPECT_EQ(simple_reflection(*A, s, simple_root(*A, s)), -simple_root(*A, s));
	EXPECT_THROW(simple_reflection(A2, "7", simple_root(A2, 0)), Error);
}

TEST(Reflection, InvolutionAndCoordinateRule)
{
	std::mt19937_64 rng(1);
	std::uniform_int_distribution<int> c(-5, 5);
	for (int i = 0; i < 1000; ++i)
	{
		auto const &A = i % 2 ? G2 : Aff;
		RootVector a = rv({c(rng), c(rng)});
		Index const s = i % 2;
		auto const b = simple_reflection(A, s, a);
		ASSERT_EQ(simple_reflection(A, s, b), a);
		ASSERT_EQ(ov(b), oracle::reflect(rows_of(A), s, ov(a)));
		ASSERT_EQ(b(1 - s), a(1 - s));
	}
}

TEST(WeylApply, Examples)
{
	EXPECT_EQ(weyl_apply(A2, WeylWord{}, rv({3, -2})), rv({3, -2}));
	// (s1 s2)(alpha_1) = s1(alpha_1 + alpha_2) = alpha_2
	EXPECT_EQ(weyl_apply(A2, parse_word(A2, {"1", "2"}), simple_root(A2, 0)), simple_root(A2, 1));
	std::mt19937_64 rng(2);
	for (int i = 0; i < 1000; ++i)
	{
		WeylWord w;
		for (int k = 0; k < 8; ++k)
			w.letters.push_back(static_cast<Index>(rng() % 2));
		RootVector a = rv({static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3});
		ASSERT_EQ(weyl_apply(B2, w.reversed(), weyl_apply(B2, w, a)), a);
	}
	EXPECT_THROW(parse_word(A2, {"1", "x"}), Error);
}

TEST(Height, Examples)
{
	EXPECT_EQ(height(rv({1, 0})), 1);
	EXPECT_EQ(height(rv({1, 2})), 3);
	EXPECT_EQ(height(rv({-1, -1})), -2);
}

TEST(RootStatus, Examples)
{
	auto const s = root_status(A2, simple_root(A2, 0));
	EXPECT_EQ(s.kind, RootKind::Real);
	EXPECT_TRUE(s.witness.empty());
	EXPECT_EQ(root_status(Aff, rv({1, 1})).kind, RootKind::Imaginary);
	EXPECT_EQ(root_status(A1xA1, rv({1, 1})).kind, RootKind::NotRoot);
	EXPECT_EQ(root_status(A2, rv({1, -1})).kind, RootKind::NotRoot);
	EXPECT_THROW(root_status(A2, rv({0, 0})), Error);
}

TEST(RootStatus, WitnessReplays)
{
	for (auto const *A : {&A2, &B2, &G2, &Aff})
		for (auto const &a : positive_real_roots_up_to_height(*A, 9))
		{
			for (auto const &v : {a, RootVector(-a)})
			{
				auto const st = root_status(*A, v);
				ASSERT_EQ(st.kind, RootKind::Real);
				ASSERT_EQ(weyl_apply(*A, st.witness, simple_root(*A, st.simple)), v);
			}
		}
}

TEST(RootStatus, SignSymmetry)
{
	for (auto const *A : {&B2, &Aff})
		for (std::int64_t x = -6; x <= 6; ++x)
			for (std::int64_t y = -6; y <= 6; ++y)
			{
				if (x == 0 && y == 0)
					continue;
				ASSERT_EQ(root_status(*A, rv({x, y})).kind, root_status(*A, rv({-x, -y})).kind);
			}
}

// root status is W-invariant; >= 10^3 random (w, alpha), |w| <= 8, ht(alpha) <= 6
TEST(RootStatus, WeylInvariance)
{
	std::mt19937_64 rng(4);
	auto const A3 = make_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
	auto const H3 = make_gcm({{2, -3, 0}, {-1, 2, -1}, {0, -2, 2}});
	for (auto const *A : {&A2, &B2, &G2, &Aff, &A3, &H3})
	{
		auto const n = A->size();
		int cases = 0;
		while (cases < 1000)
		{
			RootVector a(n);
			for (Index i = 0; i < n; ++i)
				a(i) = static_cast<std::int64_t>(rng() % 4);
			if (height(a) == 0 || height(a) > 6)
				continue;
			WeylWord w;
			auto const len = rng() % 9;
			for (std::size_t k = 0; k < len; ++k)
				w.letters.push_back(static_cast<Index>(rng() % n));
			ASSERT_EQ(root_status(*A, weyl_apply(*A, w, a)).kind, root_status(*A, a).kind);
			++cases;
		}
	}
}

TEST(RealRoots, Examples)
{
	EXPECT_EQ(positive_real_roots_up_to_height(A2, 3).size(), 3u);
	auto const aff = positive_real_roots_up_to_height(Aff, 5);
	EXPECT_EQ(aff.size(), 6u);
	for (auto const &a : aff)
	{
		EXPECT_EQ(height(a) % 2, 1);
		EXPECT_EQ(root_status(Aff, a).kind, RootKind::Real);
	}
	EXPECT_EQ(positive_real_roots_up_to_height(make_gcm({{2}}), 7).size(), 1u);
}

TEST(PositiveRoots, Examples)
{
	auto const a2 = positive_roots_up_to_height(A2, 4);
	EXPECT_EQ(a2.size(), 3u);
	for (auto const &t : a2)
		EXPECT_EQ(t.kind, RootKind::Real);

	auto const aff = positive_roots_up_to_height(Aff, 4);
	std::map<oracle::Vec, RootKind> got;
	for (auto const &t : aff)
		got[ov(t.root)] = t.kind;
	std::map<oracle::Vec, RootKind> const want{{{1, 0}, RootKind::Real},      {{0, 1}, RootKind::Real},
	                                           {{1, 1}, RootKind::Imaginary}, {{2, 2}, RootKind::Imaginary},
	                                           {{2, 1}, RootKind::Real},      {{1, 2}, RootKind::Real}};
	EXPECT_EQ(got, want);

	EXPECT_EQ(positive_roots_up_to_height(A1xA1, 4).size(), 2u);
}

TEST(PositiveRoots, SortedByHeightThenLex)
{
	auto const r = positive_roots_up_to_height(Aff, 9);
	for (std::size_t i = 1; i < r.size(); ++i)
		EXPECT_TRUE(height_then_lex(r[i - 1].root, r[i].root));
}

// both enumerations against the orbit oracles
TEST(PositiveRoots, AgreeWithOrbitOracle)
{
	auto const A3 = make_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
	auto const hyp = make_gcm({{2, -3}, {-3, 2}});
	for (auto const *A : {&A2, &B2, &G2, &Aff, &A3, &hyp})
	{
		std::int64_t const H = 7;
		auto const rows = rows_of(*A);
		auto const real_o = oracle::real_roots(rows, H, 24);
		auto const imag_o = oracle::imaginary_roots(rows, H, H, 24);
		std::set<oracle::Vec> real_bfs, real_f, imag_f;
		for (auto const &a : positive_real_roots_up_to_height(*A, H))
			real_bfs.insert(ov(a));
		for (auto const &t : positive_roots_up_to_height(*A, H))
			(t.kind == RootKind::Real ? real_f : imag_f).insert(ov(t.root));
		EXPECT_EQ(real_bfs, real_o);
		EXPECT_EQ(real_f, real_o);
		EXPECT_EQ(imag_f, imag_o);
	}
}

TEST(PositiveRoots, FiniteTypeCounts)
{
	for (std::int64_t H : {6, 10})
	{
		EXPECT_EQ(positive_roots_up_to_height(A2, H).size(), 3u);
		EXPECT_EQ(positive_roots_up_to_height(B2, H).size(), 4u);
		EXPECT_EQ(positive_roots_up_to_height(G2, H).size(), 6u);
	}
}

TEST(Prenilpotent, A2SimplePair)
{
	auto const r = is_prenilpotent_pair(A2, simple_root(A2, 0), simple_root(A2, 1));
	EXPECT_EQ(r.decision, Decision::True);
	ASSERT_TRUE(r.positive_witness && r.negative_witness);
	EXPECT_TRUE(r.positive_witness->empty());
	EXPECT_EQ(r.negative_witness->length(), 3u);
	auto const a = weyl_apply(A2, *r.negative_witness, simple_root(A2, 0));
	auto const b = weyl_apply(A2, *r.negative_witness, simple_root(A2, 1));
	EXPECT_TRUE(is_negative(a) && is_negative(b));
}

TEST(Prenilpotent, OppositeRootsNever)
{
	for (auto const *A : {&A2, &G2, &Aff})
		for (auto const &a : positive_real_roots_up_to_height(*A, 5))
			EXPECT_EQ(is_prenilpotent_pair(*A, a, -a).decision, Decision::False);
}

TEST(Prenilpotent, AffineMixedPair)
{
	auto const a1 = simple_root(Aff, 0);
	auto const a2 = simple_root(Aff, 1);
	auto const r = is_prenilpotent_pair(Aff, a1, -a2);
	EXPECT_EQ(r.decision, Decision::True);
	EXPECT_EQ(root_status(Aff, a1 - a2).kind, RootKind::NotRoot);
	auto const w = *r.positive_witness;
	EXPECT_TRUE(is_positive(weyl_apply(Aff, w, a1)) && is_positive(weyl_apply(Aff, w, -a2)));
	auto const v = *r.negative_witness;
	EXPECT_TRUE(is_negative(weyl_apply(Aff, v, a1)) && is_negative(weyl_apply(Aff, v, -a2)));
}

TEST(Prenilpotent, RejectsNonReal)
{
	EXPECT_THROW(is_prenilpotent_pair(Aff, rv({1, 1}), rv({1, 0})), Error);
}

TEST(RootsJson, Format)
{
	auto const j = roots_to_json(positive_roots_up_to_height(Aff, 2));
	ASSERT_EQ(j.size(), 3u);
	EXPECT_EQ(j[0]["coords"], nlohmann::json({0, 1}));
	EXPECT_EQ(j[2]["status"], "imaginary");
	EXPECT_EQ(j[2]["height"], 2);
}
