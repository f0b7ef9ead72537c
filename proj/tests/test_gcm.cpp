#include "kmp/gcm.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kmp;

namespace {

IntMatrix mat(std::vector<std::vector<std::int64_t>> const &rows)
{
	IntMatrix m(rows.size(), rows.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < rows.size(); ++j)
			m(i, j) = rows[i][j];
	return m;
}

template <class F>
ErrorKind kind_of(F &&f)
{
	try
	{
		f();
	}
	catch (Error const &e)
	{
		return e.kind();
	}
	ADD_FAILURE() << "no error raised";
	return ErrorKind::InvalidArgument;
}

} // namespace

TEST(Validate, AcceptsA2)
{
	auto const A = validate_gcm(mat({{2, -1}, {-1, 2}}));
	EXPECT_EQ(A.size(), 2);
	EXPECT_EQ(A(0, 1), -1);
	EXPECT_EQ(A.labels(), (std::vector<std::string>{"1", "2"}));
}

TEST(Validate, AsymmetricZeroNamesEntry)
{
	try
	{
		validate_gcm(mat({{2, -1}, {0, 2}}));
		FAIL();
	}
	catch (GcmError const &e)
	{
		EXPECT_EQ(e.kind(), ErrorKind::AsymmetricZero);
		EXPECT_EQ(e.s(), 1);
		EXPECT_EQ(e.t(), 0);
	}
}

TEST(Validate, RankTwoFamilyValid)
{
	for (int m = 1; m <= 6; ++m)
		for (int n = 1; n <= 6; ++n)
			EXPECT_NO_THROW(validate_gcm(mat({{2, -m}, {-n, 2}})));
}

TEST(Validate, OtherErrors)
{
	EXPECT_EQ(kind_of([] { validate_gcm(mat({{2, -1}, {-1, 3}})); }), ErrorKind::DiagonalNotTwo);
	EXPECT_EQ(kind_of([] { validate_gcm(mat({{2, 1}, {-1, 2}})); }), ErrorKind::PositiveOffDiagonal);
	EXPECT_EQ(kind_of([] { validate_gcm(IntMatrix(2, 3)); }), ErrorKind::NotSquare);
	EXPECT_EQ(kind_of([] { validate_gcm(mat({{2, -1}, {-1, 2}}), {"a", "a"}); }), ErrorKind::DuplicateLabel);
	EXPECT_EQ(kind_of([] { validate_gcm(mat({{2, -1}, {-1, 2}}), {"a", "b"}).index_of("c"); }),
	          ErrorKind::UnknownLabel);
}

TEST(Validate, EntriesPreserved)
{
	auto const raw = mat({{2, -3, 0}, {-1, 2, -2}, {0, -5, 2}});
	EXPECT_EQ(validate_gcm(raw).entries(), raw);
}

TEST(Classify, Examples)
{
	EXPECT_EQ(classify(make_gcm({{2}})).single(), GcmClass::Finite);
	EXPECT_EQ(classify(make_gcm({{2, -2}, {-2, 2}})).single(), GcmClass::Affine);
	EXPECT_EQ(classify(make_gcm({{2, -1}, {-5, 2}})).single(), GcmClass::Indefinite);
	EXPECT_EQ(classify(make_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})).single(), GcmClass::Affine);
	EXPECT_EQ(classify(make_gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).single(), GcmClass::Finite);
	EXPECT_EQ(classify(make_gcm({{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}})).single(), GcmClass::Affine);
}

// 2x2 trichotomy against the Leibniz-minor oracle
TEST(Classify, RankTwoAgainstMinorOracle)
{
	for (int m = 1; m <= 6; ++m)
		for (int n = 1; n <= 6; ++n)
		{
			std::vector<std::vector<std::int64_t>> rows{{2, -m}, {-n, 2}};
			auto const got = std::string(to_string(classify(make_gcm(rows)).single()));
			EXPECT_EQ(got, oracle::minor_class(rows)) << m << "," << n;
			EXPECT_EQ(got, m * n <= 3 ? "finite" : m * n == 4 ? "affine" : "indefinite");
		}
}

// random indecomposable 3x3 and 4x4 matrices against the oracle; permutation invariance
TEST(Classify, RandomAgainstMinorOracleAndRelabeling)
{
	std::mt19937_64 rng(11);
	std::uniform_int_distribution<int> entry(0, 3);
	int checked = 0;
	while (checked < 1000)
	{
		std::size_t const n = 3 + rng() % 2;
		std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
		for (std::size_t i = 0; i < n; ++i)
		{
			rows[i][i] = 2;
			for (std::size_t j = i + 1; j < n; ++j)
			{
				int const a = entry(rng);
				int const b = a == 0 ? 0 : 1 + entry(rng) % 3;
				rows[i][j] = -a;
				rows[j][i] = -b;
			}
		}
		auto const A = make_gcm(rows);
		if (!is_indecomposable(A))
			continue;
		++checked;
		auto const tag = classify(A).single();
		ASSERT_EQ(std::string(to_string(tag)), oracle::minor_class(rows));
		std::vector<Index> perm(n);
		std::iota(perm.begin(), perm.end(), 0);
		std::shuffle(perm.begin(), perm.end(), rng);
		ASSERT_EQ(classify(A.permuted(perm)).single(), tag);
	}
}

TEST(Classify, Decomposable)
{
	auto const A = make_gcm({{2, 0, 0}, {0, 2, -2}, {0, -2, 2}});
	auto const t = classify(A);
	ASSERT_EQ(t.blocks.size(), 2u);
	EXPECT_EQ(t.blocks[0].indices, std::vector<Index>{0});
	EXPECT_EQ(t.blocks[0].type, GcmClass::Finite);
	EXPECT_EQ(t.blocks[1].indices, (std::vector<Index>{1, 2}));
	EXPECT_EQ(t.blocks[1].type, GcmClass::Affine);
	EXPECT_THROW(t.single(), Error);
}

TEST(Indecomposable, Examples)
{
	EXPECT_TRUE(is_indecomposable(make_gcm({{2, -1}, {-1, 2}})));
	EXPECT_FALSE(is_indecomposable(make_gcm({{2, 0}, {0, 2}})));
	EXPECT_FALSE(is_indecomposable(make_gcm({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}})));
}

TEST(Bareiss, MatchesLeibniz)
{
	std::mt19937_64 rng(3);
	std::uniform_int_distribution<int> entry(-4, 4);
	for (int trial = 0; trial < 500; ++trial)
	{
		std::size_t const n = 1 + trial % 5;
		std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
		for (auto &r : rows)
			for (auto &x : r)
				x = entry(rng);
		ASSERT_EQ(bareiss_determinant(mat(rows)), oracle::leibniz(rows));
	}
}

TEST(Datum, SimplyConnected)
{
	auto const d1 = simply_connected_datum(make_gcm({{2}}));
	EXPECT_EQ(d1.lattice_rank, 1);
	EXPECT_EQ(d1.c(0, 0), 2);
	EXPECT_EQ(d1.h(0, 0), 1);

	auto d = simply_connected_datum(make_gcm({{2, -1}, {-1, 2}}));
	EXPECT_EQ(d.c.col(0), (IntVector(2) << 2, -1).finished());
	EXPECT_EQ(d.c.col(1), (IntVector(2) << -1, 2).finished());
	EXPECT_EQ(d.h, IntMatrix::Identity(2, 2));
	EXPECT_TRUE(check_datum(d));

	d.c(1, 0) += 1;
	EXPECT_FALSE(check_datum(d));
}

TEST(Datum, NonSymmetricPairingConvention)
{
	auto const A = make_gcm({{2, -1}, {-3, 2}});
	auto const d = simply_connected_datum(A);
	EXPECT_TRUE(check_datum(d));
	for (Index s = 0; s < 2; ++s)
		for (Index t = 0; t < 2; ++t)
			EXPECT_EQ(d.c.col(s).dot(d.h.col(t)), A(t, s));
}

TEST(Datum, Empty)
{
	auto const A = validate_gcm(IntMatrix(0, 0));
	EXPECT_TRUE(check_datum(KacMoodyRootDatum{A, 0, IntMatrix(0, 0), IntMatrix(0, 0)}));
}

TEST(Datum, AlwaysValidOnRandomGcms)
{
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 200; ++trial)
	{
		std::size_t const n = 1 + trial % 4;
		std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
		for (std::size_t i = 0; i < n; ++i)
		{
			rows[i][i] = 2;
			for (std::size_t j = i + 1; j < n; ++j)
				if (rng() % 2)
				{
					rows[i][j] = -static_cast<std::int64_t>(1 + rng() % 4);
					rows[j][i] = -static_cast<std::int64_t>(1 + rng() % 4);
				}
		}
		EXPECT_TRUE(check_datum(simply_connected_datum(make_gcm(rows))));
	}
}

TEST(Json, RoundTrip)
{
	auto const j = nlohmann::json::parse(R"({"matrix": [[2,-2],[-2,2]], "labels": ["x", "y"]})");
	auto const A = gcm_from_json(j);
	EXPECT_EQ(A.label(1), "y");
	EXPECT_EQ(gcm_from_json(to_json(A)), A);
	EXPECT_EQ(gcm_from_json(nlohmann::json::parse("[[2,-1],[-1,2]]")).size(), 2);
	EXPECT_THROW(gcm_from_json(nlohmann::json::parse("[[2,-1],[0,2]]")), Error);
}
