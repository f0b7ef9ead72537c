#pragma once

#include "kmp/bch.hpp"
#include "kmp/field.hpp"
#include "kmp/lie_serre.hpp"
#include "kmp/pgroup.hpp"
#include "kmp/report.hpp"

#include <memory>
#include <random>

namespace kmp {

using FqConfig = FiniteField;

/// exp(n+ (x) F_q) truncated at height H with the BCH group law, a finite
/// model of U^{ma+} / U_{H+1}. Needs p > H so that every BCH denominator is
/// invertible; then x^p = 1 for every element.
///
/// Elements are coefficient vectors on the graded basis of the underlying
/// algebra (structure constants in F_p, coefficients in F_q).
class UnipotentGroup
{
  public:
	using Element = std::vector<FiniteField::Element>;

	UnipotentGroup(GradedLieAlgebra<PrimeField> algebra, FiniteField fq);

	GradedLieAlgebra<PrimeField> const &algebra() const { return algebra_; }
	FiniteField const &field() const { return fq_; }
	std::size_t dimension() const { return algebra_.dimension(); }
	std::int64_t cutoff() const { return algebra_.cutoff(); }
	/// log_p of the group order: r * dim n.
	std::uint32_t log_order() const { return static_cast<std::uint32_t>(fq_.r() * dimension()); }

	Element identity() const { return Element(dimension(), 0); }
	Element multiply(Element const &x, Element const &y) const;
	Element inverse(Element const &x) const;
	Element commutator(Element const &x, Element const &y) const;
	Element lie_bracket(Element const &x, Element const &y) const;
	Element add(Element const &x, Element const &y) const;
	Element scale(FiniteField::Element a, Element const &x) const;

	/// Element with coefficient `a` on the basis vector of degree gamma.
	/// Throws NotPositiveRealRoot unless gamma is a positive real root of
	/// height <= H.
	Element root_group_element(RootVector const &gamma, FiniteField::Element a) const;

	/// u_{alpha_s}(v_l), ordered by s then l.
	std::vector<Element> simple_generators() const;
	/// u_gamma(v_l) for non-simple positive real gamma of height <= H.
	std::vector<Element> non_simple_real_root_generators() const;

	/// Lowest height carrying a nonzero coordinate (H + 1 for the identity).
	std::int64_t filtration_level(Element const &x) const;
	Element random(std::mt19937_64 &rng) const;
	/// Random element of U_i (coordinates of height < i vanish).
	Element random_in_filtration(std::int64_t i, std::mt19937_64 &rng) const;

	Key key(Element const &x) const { return Key(x.begin(), x.end()); }
	Element from_key(Key const &k) const { return Element(k.begin(), k.end()); }
	/// Oracle on keys; keeps a reference to this model alive.
	static OraclePtr oracle(std::shared_ptr<UnipotentGroup const> group);

  private:
	void bracket_into(Element const &a, Element const &b, Element &out) const;

	GradedLieAlgebra<PrimeField> algebra_;
	FiniteField fq_;
	std::shared_ptr<BchPlan const> plan_;
	std::vector<FiniteField::Element> bch_coefficients_;
	struct PairTerms
	{
		std::uint16_t i, j;
		std::uint32_t begin, end; // into triples_
	};
	std::vector<PairTerms> pairs_;
	std::vector<std::pair<std::uint16_t, FiniteField::Element>> triples_;
};

UnipotentGroup::Element bch_multiply(UnipotentGroup const &group, UnipotentGroup::Element const &x,
                                     UnipotentGroup::Element const &y);

UnipotentGroup::Element root_group_element(UnipotentGroup const &group, RootVector const &gamma,
                                           FiniteField::Element a);

/// r * dim_{F_q}(n / [n, n]) by linear algebra over F_p.
std::uint32_t frattini_dimension_linear(GradedLieAlgebra<PrimeField> const &algebra, std::uint32_t r);

/// Builds the model; CharacteristicTooSmall when p <= H.
std::shared_ptr<UnipotentGroup const> make_unipotent_group(GeneralizedCartanMatrix const &gcm,
                                                           FiniteField const &fq, std::int64_t H);

/// Black-box and linear Frattini computations on the truncated model.
/// Errors: CharacteristicTooSmall (p <= H), HypothesisViolated
/// (p <= max |A(s,t)|, or H < 2), EnumerationCapExceeded.
VerificationReport verify_theorem1(GeneralizedCartanMatrix const &gcm, FiniteField const &fq,
                                   std::int64_t H, std::size_t cap = default_enumeration_cap);

} // namespace kmp
