#include "kmp/affine_matrix.hpp"

#include <chrono>
#include <limits>

#include <fmt/format.h>

namespace kmp {

MatrixGroup::MatrixGroup(std::uint32_t m, FiniteField fq, std::uint32_t k) : m_(m), ring_(std::move(fq), k)
{
	if (m < 1)
		throw Error(ErrorKind::InvalidArgument, "matrix size must be positive");
}

MatrixGroup::Matrix MatrixGroup::identity() const
{
	Matrix out = zero();
	for (std::uint32_t i = 0; i < m_; ++i)
		out[(i * m_ + i) * k()] = 1;
	return out;
}

MatrixGroup::Poly MatrixGroup::entry(Matrix const &a, std::uint32_t i, std::uint32_t j) const
{
	auto const off = (i * m_ + j) * k();
	return Poly(a.begin() + off, a.begin() + off + k());
}

void MatrixGroup::set_entry(Matrix &a, std::uint32_t i, std::uint32_t j, Poly const &v) const
{
	std::copy(v.begin(), v.end(), a.begin() + (i * m_ + j) * k());
}

MatrixGroup::Matrix MatrixGroup::from_rows(std::vector<std::vector<Poly>> const &rows) const
{
	if (rows.size() != m_)
		throw Error(ErrorKind::InvalidArgument, "wrong number of rows");
	Matrix out = zero();
	for (std::uint32_t i = 0; i < m_; ++i)
	{
		if (rows[i].size() != m_)
			throw Error(ErrorKind::InvalidArgument, "wrong number of columns");
		for (std::uint32_t j = 0; j < m_; ++j)
		{
			auto v = rows[i][j];
			v.resize(k(), 0);
			set_entry(out, i, j, v);
		}
	}
	return out;
}

MatrixGroup::Matrix MatrixGroup::multiply(Matrix const &a, Matrix const &b) const
{
	Matrix out = zero();
	auto const K = k();
	for (std::uint32_t i = 0; i < m_; ++i)
		for (std::uint32_t l = 0; l < m_; ++l)
		{
			std::span<FiniteField::Element const> ail(a.data() + (i * m_ + l) * K, K);
			for (std::uint32_t j = 0; j < m_; ++j)
				ring_.mul_acc(ail, std::span<FiniteField::Element const>(b.data() + (l * m_ + j) * K, K),
				              std::span<FiniteField::Element>(out.data() + (i * m_ + j) * K, K));
		}
	return out;
}

MatrixGroup::Poly MatrixGroup::minor_det(Matrix const &a, std::vector<std::uint32_t> const &rows,
                                         std::vector<std::uint32_t> const &cols) const
{
	if (rows.empty())
		return ring_.one();
	if (rows.size() == 1)
		return entry(a, rows[0], cols[0]);
	// expand along the first row
	Poly det = ring_.zero();
	std::vector<std::uint32_t> sub_rows(rows.begin() + 1, rows.end());
	for (std::size_t c = 0; c < cols.size(); ++c)
	{
		auto const x = entry(a, rows[0], cols[c]);
		if (ring_.is_zero(x))
			continue;
		std::vector<std::uint32_t> sub_cols;
		for (std::size_t d = 0; d < cols.size(); ++d)
			if (d != c)
				sub_cols.push_back(cols[d]);
		auto const term = ring_.mul(x, minor_det(a, sub_rows, sub_cols));
		det = c % 2 == 0 ? ring_.add(det, term) : ring_.sub(det, term);
	}
	return det;
}

MatrixGroup::Poly MatrixGroup::determinant(Matrix const &a) const
{
	std::vector<std::uint32_t> all(m_);
	for (std::uint32_t i = 0; i < m_; ++i)
		all[i] = i;
	return minor_det(a, all, all);
}

MatrixGroup::Matrix MatrixGroup::inverse(Matrix const &a) const
{
	auto const dinv = ring_.inv(determinant(a));
	Matrix out = zero();
	for (std::uint32_t i = 0; i < m_; ++i)
		for (std::uint32_t j = 0; j < m_; ++j)
		{
			// (a^-1)_{ij} = (-1)^{i+j} det(a without row j, column i) / det a
			std::vector<std::uint32_t> rows, cols;
			for (std::uint32_t x = 0; x < m_; ++x)
			{
				if (x != j)
					rows.push_back(x);
				if (x != i)
					cols.push_back(x);
			}
			auto c = ring_.mul(minor_det(a, rows, cols), dinv);
			if ((i + j) % 2 == 1)
				c = ring_.neg(c);
			set_entry(out, i, j, c);
		}
	return out;
}

MatrixGroup::Matrix MatrixGroup::commutator(Matrix const &a, Matrix const &b) const
{
	return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

MatrixGroup::Matrix MatrixGroup::elementary(std::uint32_t i, std::uint32_t j, Poly const &c) const
{
	if (i == j)
		throw Error(ErrorKind::InvalidArgument, "elementary matrix needs i != j");
	Matrix out = identity();
	set_entry(out, i, j, c);
	return out;
}

MatrixGroup::Matrix MatrixGroup::diagonal(std::vector<Poly> const &d) const
{
	if (d.size() != m_)
		throw Error(ErrorKind::InvalidArgument, "wrong diagonal length");
	Matrix out = zero();
	for (std::uint32_t i = 0; i < m_; ++i)
		set_entry(out, i, i, d[i]);
	return out;
}

bool MatrixGroup::congruent_to_identity(Matrix const &a, std::uint32_t i) const
{
	auto const id = identity();
	for (std::size_t x = 0; x < a.size(); ++x)
		if (x % k() < i && a[x] != id[x])
			return false;
	return true;
}

OraclePtr MatrixGroup::oracle(std::shared_ptr<MatrixGroup const> group)
{
	auto g = std::make_shared<GroupOracle>();
	g->identity = group->key(group->identity());
	g->multiply = [group](Key const &a, Key const &b) {
		return group->key(group->multiply(group->from_key(a), group->from_key(b)));
	};
	g->inverse = [group](Key const &a) { return group->key(group->inverse(group->from_key(a))); };
	return g;
}

GeneralizedCartanMatrix affine_cartan_matrix(std::uint32_t m)
{
	if (m < 2)
		throw Error(ErrorKind::InvalidArgument, "affine type needs m >= 2");
	if (m == 2)
		return make_gcm({{2, -2}, {-2, 2}});
	std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(m, 0));
	for (std::uint32_t i = 0; i < m; ++i)
	{
		rows[i][i] = 2;
		rows[i][(i + 1) % m] = -1;
		rows[(i + 1) % m][i] = -1;
	}
	return make_gcm(rows);
}

bool iwahori_sylow_membership(MatrixGroup const &G, MatrixGroup::Matrix const &g)
{
	auto const &R = G.ring();
	if (G.determinant(g) != R.one())
		return false;
	auto const K = G.k();
	for (std::uint32_t i = 0; i < G.m(); ++i)
		for (std::uint32_t j = 0; j < G.m(); ++j)
		{
			auto const c0 = g[(i * G.m() + j) * K];
			if (i == j && c0 != 1)
				return false;
			if (i > j && c0 != 0)
				return false;
		}
	return true;
}

std::vector<MatrixGroup::Matrix> sylow_generators(MatrixGroup const &G, bool include_affine)
{
	auto const &R = G.ring();
	auto const &F = G.field();
	std::vector<MatrixGroup::Matrix> out;
	for (std::uint32_t i = 0; i + 1 < G.m(); ++i)
		for (std::uint32_t l = 1; l <= F.r(); ++l)
			out.push_back(G.elementary(i, i + 1, R.constant(F.basis(l))));
	if (include_affine)
		for (std::uint32_t l = 1; l <= F.r(); ++l)
			out.push_back(G.elementary(G.m() - 1, 0, R.monomial(F.basis(l), 1)));
	return out;
}

std::uint64_t sylow_order(std::uint32_t m, std::uint32_t q, std::uint32_t k)
{
	if (m < 2 || k < 1)
		throw Error(ErrorKind::InvalidArgument, "sylow_order needs m >= 2 and k >= 1");
	std::uint64_t const e = std::uint64_t{m} * (m - 1) / 2 + (std::uint64_t{m} * m - 1) * (k - 1);
	std::uint64_t out = 1;
	for (std::uint64_t i = 0; i < e; ++i)
	{
		if (out > std::numeric_limits<std::uint64_t>::max() / q)
			throw Error(ErrorKind::InvalidArgument, "Sylow order overflows 64 bits");
		out *= q;
	}
	return out;
}

MatrixGroup::Matrix random_sylow_member(MatrixGroup const &G, std::mt19937_64 &rng)
{
	auto const &R = G.ring();
	std::uniform_int_distribution<std::uint32_t> coeff(0, G.field().q() - 1);
	auto g = G.zero();
	auto const K = G.k();
	for (std::uint32_t i = 0; i < G.m(); ++i)
		for (std::uint32_t j = 0; j < G.m(); ++j)
			for (std::uint32_t d = 0; d < K; ++d)
			{
				auto &x = g[(i * G.m() + j) * K + d];
				if (d == 0 && i == j)
					x = 1;
				else if (d == 0 && i > j)
					x = 0;
				else
					x = static_cast<FiniteField::Element>(coeff(rng));
			}
	auto const dinv = R.inv(G.determinant(g));
	for (std::uint32_t j = 0; j < G.m(); ++j)
		G.set_entry(g, 0, j, R.mul(dinv, G.entry(g, 0, j)));
	return g;
}

namespace {

std::vector<Key> keys_of(MatrixGroup const &G, std::vector<MatrixGroup::Matrix> const &xs)
{
	std::vector<Key> out;
	for (auto const &x : xs)
		out.push_back(G.key(x));
	return out;
}

} // namespace

bool verify_generation(std::uint32_t m, FiniteField const &fq, std::uint32_t k, std::size_t cap,
                       bool include_affine, std::uint64_t seed, std::size_t samples)
{
	auto const G = std::make_shared<MatrixGroup const>(m, fq, k);
	auto const U = closure(MatrixGroup::oracle(G), keys_of(*G, sylow_generators(*G, include_affine)), cap);
	if (U.order() != sylow_order(m, fq.q(), k))
		return false;
	for (auto const &x : U.elements())
		if (!iwahori_sylow_membership(*G, G->from_key(x)))
			return false;
	std::mt19937_64 rng(seed);
	for (std::size_t i = 0; i < samples; ++i)
		if (!U.contains(G->key(random_sylow_member(*G, rng))))
			return false;
	return true;
}

std::uint32_t frattini_dimension_affine(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                                        std::size_t cap)
{
	auto const G = std::make_shared<MatrixGroup const>(m, fq, k);
	FiniteGroupTable U(MatrixGroup::oracle(G), keys_of(*G, sylow_generators(*G)), fq.p());
	return frattini_quotient(U, cap).dimension;
}

bool commutator_identity_check(FiniteField const &fq, FiniteField::Element r, FiniteField::Element s,
                               std::uint32_t mx, std::uint32_t nx, std::uint32_t K)
{
	if (K <= 3 * std::max(mx, nx))
		throw Error(ErrorKind::TruncationTooShallow,
		            fmt::format("K = {} must exceed 3 max(m, n) = {}", K, 3 * std::max(mx, nx)));
	MatrixGroup const G(2, fq, K);
	auto const &R = G.ring();
	auto const a = G.elementary(0, 1, R.monomial(r, mx));
	auto const b = G.elementary(1, 0, R.monomial(s, nx));
	auto const c = G.commutator(a, b);

	auto const rs = fq.mul(r, s);
	auto const u = R.monomial(rs, mx + nx);
	auto const expected = G.from_rows({
	    {R.add(R.add(R.one(), u), R.mul(u, u)), R.monomial(fq.neg(fq.mul(r, rs)), 2 * mx + nx)},
	    {R.monomial(fq.mul(rs, s), mx + 2 * nx), R.sub(R.one(), u)},
	});
	return c == expected;
}

std::vector<MatrixGroup::Matrix> congruence_generators(MatrixGroup const &G, std::uint32_t i)
{
	auto const &R = G.ring();
	auto const &F = G.field();
	std::vector<MatrixGroup::Matrix> out;
	for (std::uint32_t j = std::max(i, 1u); j < G.k(); ++j)
		for (std::uint32_t l = 1; l <= F.r(); ++l)
		{
			auto const c = R.monomial(F.basis(l), j);
			for (std::uint32_t a = 0; a < G.m(); ++a)
				for (std::uint32_t b = 0; b < G.m(); ++b)
					if (a != b)
						out.push_back(G.elementary(a, b, c));
			auto const unit = R.add(R.one(), c);
			for (std::uint32_t a = 0; a + 1 < G.m(); ++a)
			{
				std::vector<MatrixGroup::Poly> d(G.m(), R.one());
				d[a] = unit;
				d[a + 1] = R.inv(unit);
				out.push_back(G.diagonal(d));
			}
		}
	return out;
}

FiniteGroupTable congruence_subgroup(std::shared_ptr<MatrixGroup const> const &G, std::uint32_t i,
                                     std::size_t cap)
{
	if (i < 1 || i > G->k())
		throw Error(ErrorKind::InvalidArgument, fmt::format("congruence level {} outside [1, {}]", i, G->k()));
	return closure(MatrixGroup::oracle(G), keys_of(*G, congruence_generators(*G, i)), cap);
}

std::vector<MatrixGroup::Matrix> non_simple_real_root_generators(MatrixGroup const &G)
{
	auto const &R = G.ring();
	auto const &F = G.field();
	auto const m = G.m();
	std::vector<MatrixGroup::Matrix> out;
	for (std::uint32_t n = 0; n < G.k(); ++n)
		for (std::uint32_t a = 0; a < m; ++a)
			for (std::uint32_t b = 0; b < m; ++b)
			{
				if (a == b)
					continue;
				// alpha + n delta (a < b) or -alpha + n delta (a > b, n >= 1)
				if (a > b && n == 0)
					continue;
				bool const simple = (a < b && b == a + 1 && n == 0) || (a == m - 1 && b == 0 && n == 1);
				if (simple)
					continue;
				for (std::uint32_t l = 1; l <= F.r(); ++l)
					out.push_back(G.elementary(a, b, R.monomial(F.basis(l), n)));
			}
	return out;
}

MatrixGroup::Matrix reduce_truncation(MatrixGroup const &from, MatrixGroup const &to,
                                      MatrixGroup::Matrix const &g)
{
	if (from.m() != to.m() || to.k() > from.k())
		throw Error(ErrorKind::InvalidArgument, "reduction needs equal size and smaller truncation");
	auto out = to.zero();
	for (std::uint32_t i = 0; i < to.m(); ++i)
		for (std::uint32_t j = 0; j < to.m(); ++j)
		{
			auto e = from.entry(g, i, j);
			e.resize(to.k());
			to.set_entry(out, i, j, e);
		}
	return out;
}

VerificationReport verify_theorem1_affine(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                                          std::size_t cap)
{
	auto const start = std::chrono::steady_clock::now();
	auto const A = affine_cartan_matrix(m);
	if (fq.p() <= A.max_off_diagonal())
		throw Error(ErrorKind::HypothesisViolated,
		            fmt::format("p = {} is not greater than max |A(s,t)| = {}", fq.p(), A.max_off_diagonal()));
	if (k < 1)
		throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");

	auto const G = std::make_shared<MatrixGroup const>(m, fq, k);
	auto const oracle = MatrixGroup::oracle(G);

	VerificationReport report;
	report.model = "affine_matrix";
	report.caveat = "finite model: Iwahori pro-p Sylow of SL_m over F_q[t]/(t^k)";
	report.gcm = to_json(A);
	report.q = fq.q();
	report.m = m;
	report.k = k;

	FiniteGroupTable U(oracle, keys_of(*G, sylow_generators(*G)), fq.p());
	auto quotient = frattini_quotient(U, cap);
	auto const derived = derived_subgroup(U, cap);
	report.h1_blackbox = quotient.dimension;
	report.h1_predicted = m * fq.r();
	report.frattini_order = quotient.phi.order();
	report.derived_order = derived.order();
	report.frattini_eq_derived = same_elements(quotient.phi, derived);
	report.generators_generate = quotient.group_order == sylow_order(m, fq.q(), k);

	auto const thm_ii = closure(oracle, keys_of(*G, non_simple_real_root_generators(*G)), cap);
	report.thm_ii_lhs_order = quotient.phi.order();
	report.thm_ii_rhs_order = thm_ii.order();
	report.thm_ii_equal = same_elements(quotient.phi, thm_ii);

	report.elapsed_ms =
	    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return report;
}

FiltrationReport affine_filtration_check(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                                         std::size_t cap)
{
	auto const G = std::make_shared<MatrixGroup const>(m, fq, k);
	auto U = closure(MatrixGroup::oracle(G), keys_of(*G, sylow_generators(*G)), cap);
	auto V = derived_subgroup(U, cap);
	V.enumerate(cap);
	std::vector<FiniteGroupTable> chain;
	for (std::uint32_t i = std::min(2u, k); i <= k; ++i)
		chain.push_back(congruence_subgroup(G, i, cap));
	return check_filtration_lemma(U, chain, V, cap);
}

FiniteField::Element multiplicative_generator(FiniteField const &fq)
{
	auto const n = fq.q() - 1;
	for (std::uint32_t g = 1; g < fq.q(); ++g)
	{
		auto x = static_cast<FiniteField::Element>(g);
		std::uint32_t order = 1;
		for (auto y = x; y != 1; y = fq.mul(y, x))
			++order;
		if (order == n)
			return x;
	}
	throw std::logic_error("F_q^* has no generator");
}

FiniteGroupTable special_linear_group(std::shared_ptr<MatrixGroup const> const &G, std::size_t cap)
{
	auto const &R = G->ring();
	auto const &F = G->field();
	std::vector<MatrixGroup::Matrix> gens;
	for (std::uint32_t a = 0; a < G->m(); ++a)
		for (std::uint32_t b = 0; b < G->m(); ++b)
			if (a != b)
				for (std::uint32_t l = 1; l <= F.r(); ++l)
					gens.push_back(G->elementary(a, b, R.constant(F.basis(l))));
	return closure(MatrixGroup::oracle(G), keys_of(*G, gens), cap);
}

TitsSetup sl_tits_setup(std::uint32_t m, FiniteField const &fq, std::size_t cap)
{
	auto const G = std::make_shared<MatrixGroup const>(m, fq, 1);
	auto const oracle = MatrixGroup::oracle(G);
	auto const &R = G->ring();
	auto const &F = G->field();

	std::vector<MatrixGroup::Matrix> torus;
	auto const g = multiplicative_generator(F);
	for (std::uint32_t a = 0; a + 1 < m; ++a)
	{
		std::vector<MatrixGroup::Poly> d(m, R.one());
		d[a] = R.constant(g);
		d[a + 1] = R.constant(F.inv(g));
		torus.push_back(G->diagonal(d));
	}

	auto b_gens = torus;
	for (std::uint32_t a = 0; a < m; ++a)
		for (std::uint32_t b = a + 1; b < m; ++b)
			for (std::uint32_t l = 1; l <= F.r(); ++l)
				b_gens.push_back(G->elementary(a, b, R.constant(F.basis(l))));

	std::vector<MatrixGroup::Matrix> s_mats;
	for (std::uint32_t a = 0; a + 1 < m; ++a)
	{
		auto s = G->identity();
		G->set_entry(s, a, a, R.zero());
		G->set_entry(s, a + 1, a + 1, R.zero());
		G->set_entry(s, a, a + 1, R.one());
		G->set_entry(s, a + 1, a, R.neg(R.one()));
		s_mats.push_back(s);
	}
	auto n_gens = torus;
	n_gens.insert(n_gens.end(), s_mats.begin(), s_mats.end());

	return TitsSetup{G, special_linear_group(G, cap), closure(oracle, keys_of(*G, b_gens), cap),
	                 closure(oracle, keys_of(*G, n_gens), cap), keys_of(*G, s_mats)};
}

} // namespace kmp
