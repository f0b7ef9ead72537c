#pragma once

#include "kmp/field.hpp"
#include "kmp/gcm.hpp"
#include "kmp/root_system.hpp"

#include <map>
#include <vector>

namespace kmp {

/// Positive part n+ of the Kac-Moody algebra of a GCM, truncated at height H,
/// over `Field` (RationalField or PrimeField).
///
/// The basis is ordered by height, then by degree (lexicographic), then by
/// construction order. Basis element i carries its degree in Q+. Structure
/// constants are stored for every ordered pair whose heights sum to <= H;
/// brackets landing above H are zero by truncation.
template <class Field>
class GradedLieAlgebra
{
  public:
	using Scalar = typename Field::Element;
	using Vector = std::vector<Scalar>;
	using Term = std::pair<std::size_t, Scalar>;

	struct BasisElement
	{
		RootVector degree;
		std::int64_t height;
	};

	GeneralizedCartanMatrix const &gcm() const { return gcm_; }
	std::int64_t cutoff() const { return cutoff_; }
	Field const &field() const { return field_; }

	std::size_t dimension() const { return basis_.size(); }
	BasisElement const &basis(std::size_t i) const { return basis_[i]; }
	/// dims[h - 1] = dimension of the height-h component, h = 1..H.
	std::vector<std::size_t> dimensions_by_height() const;
	/// Basis index of e_s.
	std::size_t generator(Index s) const { return generators_.at(s); }
	/// Basis indices of the given degree (empty if not a root up to H).
	std::vector<std::size_t> basis_of_degree(RootVector const &degree) const;

	/// [b_i, b_j] as a sparse combination of basis elements.
	std::vector<Term> const &structure(std::size_t i, std::size_t j) const
	{
		return structure_[i * basis_.size() + j];
	}

	Vector zero() const { return Vector(dimension(), field_.zero()); }
	Vector unit(std::size_t i) const;
	Vector bracket(Vector const &x, Vector const &y) const;

	/// Exhaustive checks over basis pairs/triples with total height <= H.
	bool antisymmetric() const;
	bool jacobi() const;

	nlohmann::json to_json() const;

  private:
	template <class F>
	friend GradedLieAlgebra<F> build_positive_part(GeneralizedCartanMatrix const &, std::int64_t, F);

	GradedLieAlgebra(GeneralizedCartanMatrix gcm, std::int64_t cutoff, Field field)
	    : gcm_(std::move(gcm)), cutoff_(cutoff), field_(std::move(field))
	{}

	GeneralizedCartanMatrix gcm_;
	std::int64_t cutoff_;
	Field field_;
	std::vector<BasisElement> basis_;
	std::vector<std::size_t> generators_;
	std::vector<std::vector<Term>> structure_;
};

/// Builds n+ as the Lie subalgebra generated by the e_s inside
/// T(e_s) / (Serre ideal), degree by degree. Requires p > H when the field
/// has characteristic p > 0 (CharacteristicTooSmall otherwise).
template <class Field>
GradedLieAlgebra<Field> build_positive_part(GeneralizedCartanMatrix const &gcm,
                                            std::int64_t max_height, Field field);

/// dim of the degree-alpha component; HeightExceedsCutoff if ht(alpha) > H.
template <class Field>
std::size_t root_multiplicity(GradedLieAlgebra<Field> const &algebra, RootVector const &alpha);

extern template class GradedLieAlgebra<RationalField>;
extern template class GradedLieAlgebra<PrimeField>;

} // namespace kmp
