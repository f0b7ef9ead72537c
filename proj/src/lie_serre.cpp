#include "kmp/lie_serre.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace kmp {

namespace {

using Word = std::basic_string<std::uint8_t>;
using DegreeKey = std::vector<std::int64_t>;

DegreeKey key_of(RootVector const &v) { return {v.begin(), v.end()}; }

nlohmann::json scalar_json(mpq_class const &v) { return v.get_str(); }
nlohmann::json scalar_json(std::uint32_t v) { return v; }

std::vector<Word> words_of_degree(DegreeKey const &degree)
{
	std::vector<Word> out;
	DegreeKey remaining = degree;
	Word current;
	std::int64_t total = 0;
	for (auto c : degree)
		total += c;
	auto rec = [&](auto &&self) -> void {
		if (static_cast<std::int64_t>(current.size()) == total)
		{
			out.push_back(current);
			return;
		}
		for (std::size_t s = 0; s < remaining.size(); ++s)
			if (remaining[s] > 0)
			{
				--remaining[s];
				current.push_back(static_cast<std::uint8_t>(s));
				self(self);
				current.pop_back();
				++remaining[s];
			}
	};
	rec(rec);
	return out;
}

// Row-echelon form over a field with, for each row, the combination of
// Lie basis elements that the row represents modulo the Serre ideal.
template <class Field>
class AugmentedEchelon
{
  public:
	using Scalar = typename Field::Element;
	using Vector = std::vector<Scalar>;
	using Coords = std::map<std::size_t, Scalar>;

	AugmentedEchelon(Field const &field, std::size_t width)
	    : field_(&field), pivot_row_(width, -1), width_(width)
	{}

	// Reduces v in place; accumulates the coordinates of the rows subtracted.
	void reduce(Vector &v, Coords &coords) const
	{
		auto const &F = *field_;
		for (std::size_t i = 0; i < width_; ++i)
		{
			if (F.is_zero(v[i]) || pivot_row_[i] < 0)
				continue;
			auto const &row = rows_[pivot_row_[i]];
			Scalar const f = v[i];
			for (std::size_t k = i; k < width_; ++k)
				if (!F.is_zero(row.v[k]))
					v[k] = F.sub(v[k], F.mul(f, row.v[k]));
			for (auto const &[idx, c] : row.coords)
				add_to(coords, idx, F.mul(f, c));
		}
	}

	// Inserts v (representing `coords`); false if v reduced to zero.
	bool insert(Vector v, Coords coords)
	{
		auto const &F = *field_;
		Coords used;
		reduce(v, used);
		auto lead = std::find_if(v.begin(), v.end(), [&](Scalar const &x) { return !F.is_zero(x); });
		if (lead == v.end())
			return false;
		std::size_t const pivot = lead - v.begin();
		Scalar const scale = F.inv(v[pivot]);
		for (auto &x : v)
			x = F.mul(x, scale);
		for (auto const &[idx, c] : used)
			add_to(coords, idx, F.neg(c));
		for (auto &[idx, c] : coords)
			c = F.mul(c, scale);
		pivot_row_[pivot] = static_cast<long>(rows_.size());
		rows_.push_back({std::move(v), std::move(coords)});
		return true;
	}

	std::size_t rank() const { return rows_.size(); }
	Vector const &row(std::size_t i) const { return rows_[i].v; }

	void add_to(Coords &coords, std::size_t idx, Scalar const &c) const
	{
		auto const &F = *field_;
		auto [it, inserted] = coords.emplace(idx, c);
		if (!inserted)
		{
			it->second = F.add(it->second, c);
			if (F.is_zero(it->second))
				coords.erase(it);
		}
		else if (F.is_zero(c))
			coords.erase(it);
	}

  private:
	struct Row
	{
		Vector v;
		Coords coords;
	};
	Field const *field_;
	std::vector<Row> rows_;
	std::vector<long> pivot_row_;
	std::size_t width_;
};

template <class Field>
struct DegreeData
{
	using Scalar = typename Field::Element;
	std::vector<Word> words;
	std::map<Word, std::size_t> word_index;
	std::vector<std::vector<Scalar>> serre_ideal; // echelon rows of J_alpha
	AugmentedEchelon<Field> echelon;              // J_alpha + L_alpha
	std::vector<std::size_t> basis;               // global basis indices
	std::vector<std::vector<Scalar>> reps;        // representatives in T_alpha

	DegreeData(Field const &field, std::vector<Word> w)
	    : words(std::move(w)), echelon(field, words.size())
	{
		for (std::size_t i = 0; i < words.size(); ++i)
			word_index.emplace(words[i], i);
	}
};

} // namespace

template <class Field>
typename GradedLieAlgebra<Field>::Vector GradedLieAlgebra<Field>::unit(std::size_t i) const
{
	auto v = zero();
	v.at(i) = field_.one();
	return v;
}

template <class Field>
std::vector<std::size_t> GradedLieAlgebra<Field>::dimensions_by_height() const
{
	std::vector<std::size_t> dims(cutoff_, 0);
	for (auto const &b : basis_)
		++dims[b.height - 1];
	return dims;
}

template <class Field>
std::vector<std::size_t> GradedLieAlgebra<Field>::basis_of_degree(RootVector const &degree) const
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < basis_.size(); ++i)
		if (basis_[i].degree == degree)
			out.push_back(i);
	return out;
}

template <class Field>
typename GradedLieAlgebra<Field>::Vector GradedLieAlgebra<Field>::bracket(Vector const &x,
                                                                         Vector const &y) const
{
	auto z = zero();
	std::size_t const n = dimension();
	for (std::size_t i = 0; i < n; ++i)
	{
		if (field_.is_zero(x[i]))
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (field_.is_zero(y[j]))
				continue;
			auto const xy = field_.mul(x[i], y[j]);
			for (auto const &[k, c] : structure(i, j))
				z[k] = field_.add(z[k], field_.mul(xy, c));
		}
	}
	return z;
}

template <class Field>
bool GradedLieAlgebra<Field>::antisymmetric() const
{
	std::size_t const n = dimension();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto a = bracket(unit(i), unit(j));
			auto b = bracket(unit(j), unit(i));
			for (std::size_t k = 0; k < n; ++k)
				if (!field_.is_zero(field_.add(a[k], b[k])))
					return false;
		}
	return true;
}

template <class Field>
bool GradedLieAlgebra<Field>::jacobi() const
{
	std::size_t const n = dimension();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				if (basis_[i].height + basis_[j].height + basis_[k].height > cutoff_)
					continue;
				auto const x = unit(i), y = unit(j), z = unit(k);
				auto const a = bracket(x, bracket(y, z));
				auto const b = bracket(y, bracket(z, x));
				auto const c = bracket(z, bracket(x, y));
				for (std::size_t m = 0; m < n; ++m)
					if (!field_.is_zero(field_.add(field_.add(a[m], b[m]), c[m])))
						return false;
			}
	return true;
}

template <class Field>
nlohmann::json GradedLieAlgebra<Field>::to_json() const
{
	nlohmann::json heights = nlohmann::json::object();
	for (std::size_t i = 0; i < basis_.size(); ++i)
	{
		std::vector<std::int64_t> root(basis_[i].degree.begin(), basis_[i].degree.end());
		heights[std::to_string(basis_[i].height)].push_back({{"root", root}, {"basis_index", i}});
	}
	nlohmann::json brackets = nlohmann::json::array();
	for (std::size_t i = 0; i < basis_.size(); ++i)
		for (std::size_t j = i + 1; j < basis_.size(); ++j)
			for (auto const &[k, c] : structure(i, j))
				brackets.push_back({i, j, k, scalar_json(c)});
	return {{"field", field_.name()},
	        {"cutoff", cutoff_},
	        {"gcm", kmp::to_json(gcm_)},
	        {"height", heights},
	        {"brackets", brackets}};
}

template <class Field>
GradedLieAlgebra<Field> build_positive_part(GeneralizedCartanMatrix const &gcm,
                                            std::int64_t max_height, Field field)
{
	if (max_height < 1)
		throw Error(ErrorKind::InvalidArgument, "height cutoff must be >= 1");
	auto const p = field.characteristic();
	if (p != 0 && static_cast<std::int64_t>(p) <= max_height)
		throw Error(ErrorKind::CharacteristicTooSmall,
		            fmt::format("characteristic {} <= height cutoff {}", p, max_height));

	using Scalar = typename Field::Element;
	using Vector = std::vector<Scalar>;
	Index const rank = gcm.size();
	GradedLieAlgebra<Field> algebra(gcm, max_height, field);
	auto const &F = algebra.field_;

	// every degree in the simplex, ordered by (height, lex)
	std::vector<RootVector> degrees;
	{
		RootVector v = RootVector::Zero(rank);
		auto rec = [&](auto &&self, Index i, std::int64_t remaining) -> void {
			if (i == rank)
			{
				if (!v.isZero())
					degrees.push_back(v);
				return;
			}
			for (std::int64_t c = 0; c <= remaining; ++c)
			{
				v(i) = c;
				self(self, i + 1, remaining - c);
			}
			v(i) = 0;
		};
		rec(rec, 0, max_height);
		std::sort(degrees.begin(), degrees.end(), height_then_lex);
	}

	std::map<DegreeKey, DegreeData<Field>> data;

	// Serre element (ad e_s)^N e_t, N = 1 - A(s,t), expanded in T
	auto serre_vector = [&](Index s, Index t, DegreeData<Field> const &d) {
		std::int64_t const N = 1 - gcm(s, t);
		Vector v(d.words.size(), F.zero());
		mpz_class binom = 1;
		for (std::int64_t k = 0; k <= N; ++k)
		{
			Word w(static_cast<std::size_t>(N - k), static_cast<std::uint8_t>(s));
			w.push_back(static_cast<std::uint8_t>(t));
			w.append(static_cast<std::size_t>(k), static_cast<std::uint8_t>(s));
			mpq_class c(binom);
			if (k % 2)
				c = -c;
			auto const idx = d.word_index.at(w);
			v[idx] = F.add(v[idx], F.from_rational(c));
			binom = binom * (N - k) / (k + 1);
		}
		return v;
	};

	for (auto const &degree : degrees)
	{
		auto const key = key_of(degree);
		auto &d = data.emplace(key, DegreeData<Field>(F, words_of_degree(key))).first->second;
		std::int64_t const ht = height(degree);

		// J_alpha = sum_s e_s J_{alpha - alpha_s} + J_{alpha - alpha_s} e_s + R_alpha
		std::vector<Vector> spanning;
		for (Index s = 0; s < rank; ++s)
		{
			if (degree(s) == 0 || ht == 1)
				continue;
			RootVector lower = degree;
			lower(s) -= 1;
			auto const &ld = data.at(key_of(lower));
			for (auto const &row : ld.serre_ideal)
			{
				Vector left(d.words.size(), F.zero()), right(d.words.size(), F.zero());
				for (std::size_t i = 0; i < row.size(); ++i)
				{
					if (F.is_zero(row[i]))
						continue;
					Word const &w = ld.words[i];
					left[d.word_index.at(Word(1, static_cast<std::uint8_t>(s)) + w)] = row[i];
					right[d.word_index.at(w + Word(1, static_cast<std::uint8_t>(s)))] = row[i];
				}
				spanning.push_back(std::move(left));
				spanning.push_back(std::move(right));
			}
		}
		for (Index s = 0; s < rank; ++s)
			for (Index t = 0; t < rank; ++t)
			{
				if (s == t)
					continue;
				std::int64_t const N = 1 - gcm(s, t);
				RootVector rel = RootVector::Zero(rank);
				rel(s) = N;
				rel(t) = 1;
				if (rel == degree)
					spanning.push_back(serre_vector(s, t, d));
			}
		for (auto &v : spanning)
			if (d.echelon.insert(v, {}))
				d.serre_ideal.push_back(d.echelon.row(d.echelon.rank() - 1));

		// L_alpha = span [e_s, b], b in L_{alpha - alpha_s}
		auto accept = [&](Vector rep) {
			std::size_t const idx = algebra.basis_.size();
			typename AugmentedEchelon<Field>::Coords coords{{idx, F.one()}};
			if (!d.echelon.insert(rep, coords))
				return;
			algebra.basis_.push_back({degree, ht});
			d.basis.push_back(idx);
			d.reps.push_back(std::move(rep));
		};
		if (ht == 1)
		{
			Vector rep(1, F.one());
			accept(rep);
			continue;
		}
		for (Index s = 0; s < rank; ++s)
		{
			if (degree(s) == 0)
				continue;
			RootVector lower = degree;
			lower(s) -= 1;
			auto const &ld = data.at(key_of(lower));
			for (auto const &rep : ld.reps)
			{
				Vector cand(d.words.size(), F.zero());
				for (std::size_t i = 0; i < rep.size(); ++i)
				{
					if (F.is_zero(rep[i]))
						continue;
					Word const &w = ld.words[i];
					auto const a = d.word_index.at(Word(1, static_cast<std::uint8_t>(s)) + w);
					auto const b = d.word_index.at(w + Word(1, static_cast<std::uint8_t>(s)));
					cand[a] = F.add(cand[a], rep[i]);
					cand[b] = F.sub(cand[b], rep[i]);
				}
				accept(std::move(cand));
			}
		}
	}

	algebra.generators_.assign(rank, 0);
	for (std::size_t i = 0; i < algebra.basis_.size(); ++i)
		if (algebra.basis_[i].height == 1)
		{
			Index s = 0;
			algebra.basis_[i].degree.maxCoeff(&s);
			algebra.generators_[s] = i;
		}

	// structure constants from commutators of representatives
	std::size_t const n = algebra.basis_.size();
	algebra.structure_.assign(n * n, {});
	std::vector<std::pair<DegreeData<Field> const *, std::size_t>> where(n);
	for (auto const &[key, d] : data)
		for (std::size_t k = 0; k < d.basis.size(); ++k)
			where[d.basis[k]] = {&d, k};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			auto const &bi = algebra.basis_[i];
			auto const &bj = algebra.basis_[j];
			if (bi.height + bj.height > max_height)
				continue;
			auto const &[di, ki] = where[i];
			auto const &[dj, kj] = where[j];
			auto &target = data.at(key_of(bi.degree + bj.degree));
			Vector v(target.words.size(), F.zero());
			auto const &ri = di->reps[ki];
			auto const &rj = dj->reps[kj];
			for (std::size_t a = 0; a < ri.size(); ++a)
			{
				if (F.is_zero(ri[a]))
					continue;
				for (std::size_t b = 0; b < rj.size(); ++b)
				{
					if (F.is_zero(rj[b]))
						continue;
					auto const c = F.mul(ri[a], rj[b]);
					auto const ab = target.word_index.at(di->words[a] + dj->words[b]);
					auto const ba = target.word_index.at(dj->words[b] + di->words[a]);
					v[ab] = F.add(v[ab], c);
					v[ba] = F.sub(v[ba], c);
				}
			}
			typename AugmentedEchelon<Field>::Coords coords;
			target.echelon.reduce(v, coords);
			if (!std::all_of(v.begin(), v.end(), [&](Scalar const &x) { return F.is_zero(x); }))
				throw std::logic_error("bracket of basis elements left the generated subalgebra");
			for (auto const &[k, c] : coords)
			{
				algebra.structure_[i * n + j].emplace_back(k, c);
				algebra.structure_[j * n + i].emplace_back(k, F.neg(c));
			}
		}
	return algebra;
}

template <class Field>
std::size_t root_multiplicity(GradedLieAlgebra<Field> const &algebra, RootVector const &alpha)
{
	if (height(alpha) > algebra.cutoff())
		throw Error(ErrorKind::HeightExceedsCutoff,
		            fmt::format("height {} above cutoff {}", height(alpha), algebra.cutoff()));
	return algebra.basis_of_degree(alpha).size();
}

template class GradedLieAlgebra<RationalField>;
template class GradedLieAlgebra<PrimeField>;
template GradedLieAlgebra<RationalField> build_positive_part(GeneralizedCartanMatrix const &,
                                                             std::int64_t, RationalField);
template GradedLieAlgebra<PrimeField> build_positive_part(GeneralizedCartanMatrix const &,
                                                          std::int64_t, PrimeField);
template std::size_t root_multiplicity(GradedLieAlgebra<RationalField> const &, RootVector const &);
template std::size_t root_multiplicity(GradedLieAlgebra<PrimeField> const &, RootVector const &);

} // namespace kmp
