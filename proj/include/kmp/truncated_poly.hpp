#pragma once

#include "kmp/field.hpp"

#include <span>
#include <vector>

namespace kmp {

/// F_q[t]/(t^k). Elements are dense coefficient arrays of length k, lowest
/// degree first.
class TruncatedPolyRing
{
  public:
	using Coeff = FiniteField::Element;
	using Poly = std::vector<Coeff>;

	TruncatedPolyRing(FiniteField fq, std::uint32_t k);

	FiniteField const &field() const { return fq_; }
	std::uint32_t k() const { return k_; }

	Poly zero() const { return Poly(k_, 0); }
	Poly one() const;
	Poly constant(Coeff c) const;
	/// c t^d (zero when d >= k).
	Poly monomial(Coeff c, std::uint32_t d) const;

	Poly add(Poly const &a, Poly const &b) const;
	Poly sub(Poly const &a, Poly const &b) const;
	Poly neg(Poly const &a) const;
	Poly mul(Poly const &a, Poly const &b) const;
	Poly scale(Coeff c, Poly const &a) const;
	/// Units are exactly the polynomials with nonzero constant term.
	bool is_unit(Poly const &a) const { return a[0] != 0; }
	Poly inv(Poly const &a) const;
	bool is_zero(Poly const &a) const;
	/// Lowest degree with a nonzero coefficient (k for zero).
	std::uint32_t valuation(Poly const &a) const;

	// In-place kernels on raw spans of length k.
	void add_into(std::span<Coeff const> a, std::span<Coeff const> b, std::span<Coeff> out) const;
	void mul_acc(std::span<Coeff const> a, std::span<Coeff const> b, std::span<Coeff> acc) const;

  private:
	FiniteField fq_;
	std::uint32_t k_;
};

} // namespace kmp
