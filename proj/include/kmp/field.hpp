#pragma once

#include "kmp/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kmp {

bool is_prime(std::uint64_t n);

/// Q with exact GMP rationals.
class RationalField
{
  public:
	using Element = mpq_class;

	std::uint32_t characteristic() const { return 0; }
	std::string name() const { return "Q"; }

	Element zero() const { return 0; }
	Element one() const { return 1; }
	Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
	Element from_rational(mpq_class const &v) const { return v; }

	Element add(Element const &a, Element const &b) const { return a + b; }
	Element sub(Element const &a, Element const &b) const { return a - b; }
	Element mul(Element const &a, Element const &b) const { return a * b; }
	Element neg(Element const &a) const { return -a; }
	Element inv(Element const &a) const { return 1 / a; }
	bool is_zero(Element const &a) const { return sgn(a) == 0; }
};

/// Z/pZ with canonical representatives in [0, p).
class PrimeField
{
  public:
	using Element = std::uint32_t;

	explicit PrimeField(std::uint32_t p);

	std::uint32_t characteristic() const { return p_; }
	std::string name() const { return "F_" + std::to_string(p_); }

	Element zero() const { return 0; }
	Element one() const { return 1; }
	Element from_int(std::int64_t v) const;
	/// Throws if the denominator is divisible by p.
	Element from_rational(mpq_class const &v) const;

	Element add(Element a, Element b) const { return (a + b) % p_; }
	Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
	Element mul(Element a, Element b) const
	{
		return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
	}
	Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
	Element inv(Element a) const;
	bool is_zero(Element a) const { return a == 0; }

  private:
	std::uint32_t p_;
};

/// F_q with q = p^r <= 256, elements encoded as integers in [0, q) whose
/// base-p digits are the coordinates on the basis v_1 = 1, v_2 = x, ...,
/// v_r = x^(r-1) of F_p[x]/(f). Arithmetic is table driven.
class FiniteField
{
  public:
	using Element = std::uint8_t;

	FiniteField(std::uint32_t p, std::uint32_t r);

	/// q must be a prime power.
	static FiniteField of_order(std::uint32_t q);

	std::uint32_t p() const { return p_; }
	std::uint32_t r() const { return r_; }
	std::uint32_t q() const { return q_; }
	std::uint32_t characteristic() const { return p_; }
	std::string name() const { return "F_" + std::to_string(q_); }

	/// Coefficients of the monic modulus, lowest degree first (length r + 1).
	std::vector<std::uint32_t> const &modulus() const { return modulus_; }

	/// The basis element v_l, 1 <= l <= r.
	Element basis(std::uint32_t l) const;
	/// Embedding of Z/pZ as constants.
	Element from_prime(std::uint32_t c) const { return static_cast<Element>(c % p_); }
	Element from_int(std::int64_t v) const;
	/// Coordinates on v_1..v_r.
	std::vector<std::uint32_t> digits(Element a) const;
	Element from_digits(std::vector<std::uint32_t> const &digits) const;

	Element zero() const { return 0; }
	Element one() const { return 1; }
	Element add(Element a, Element b) const { return add_[a * q_ + b]; }
	Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
	Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
	Element neg(Element a) const { return neg_[a]; }
	Element inv(Element a) const;
	bool is_zero(Element a) const { return a == 0; }

	/// Multiplicative order of x modulo f is q - 1.
	bool modulus_is_primitive() const;

  private:
	std::uint32_t p_, r_, q_;
	std::vector<std::uint32_t> modulus_;
	std::vector<Element> add_, mul_, neg_, inv_;
};

} // namespace kmp
