#include "kmp/field.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <fmt/format.h>

namespace kmp {

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
	if (!is_prime(p))
		throw Error(ErrorKind::InvalidArgument, fmt::format("{} is not prime", p));
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const
{
	auto m = v % static_cast<std::int64_t>(p_);
	return static_cast<Element>(m < 0 ? m + p_ : m);
}

PrimeField::Element PrimeField::from_rational(mpq_class const &v) const
{
	mpz_class const p(static_cast<unsigned long>(p_));
	mpz_class num = v.get_num() % p;
	mpz_class den = v.get_den() % p;
	if (den == 0)
		throw Error(ErrorKind::CharacteristicTooSmall,
		            fmt::format("denominator of {} vanishes mod {}", v.get_str(), p_));
	if (num < 0)
		num += p;
	if (den < 0)
		den += p;
	return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
}

PrimeField::Element PrimeField::inv(Element a) const
{
	if (a == 0)
		throw Error(ErrorKind::InvalidArgument, "inverse of zero");
	// Fermat
	std::uint64_t result = 1, base = a, e = p_ - 2;
	while (e)
	{
		if (e & 1)
			result = result * base % p_;
		base = base * base % p_;
		e >>= 1;
	}
	return static_cast<Element>(result);
}

namespace {

// Conway polynomials, coefficients lowest degree first, leading 1 included.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> const conway = {
    {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
    {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
    {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}}, {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
    {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{7, 2}, {3, 6, 1}},
    {{11, 2}, {2, 7, 1}},      {{13, 2}, {2, 12, 1}},
};

// Multiplication of digit vectors modulo the monic polynomial f.
std::vector<std::uint32_t> poly_mulmod(std::vector<std::uint32_t> const &a,
                                       std::vector<std::uint32_t> const &b,
                                       std::vector<std::uint32_t> const &f, std::uint32_t p)
{
	std::size_t const r = f.size() - 1;
	std::vector<std::uint32_t> prod(2 * r, 0);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < r; ++j)
			prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
	for (std::size_t d = 2 * r - 1; d >= r && d < 2 * r; --d)
	{
		auto const c = prod[d];
		if (c == 0)
			continue;
		prod[d] = 0;
		for (std::size_t i = 0; i < r; ++i)
			prod[d - r + i] = (prod[d - r + i] + (p - c) * f[i]) % p;
	}
	prod.resize(r);
	return prod;
}

std::vector<std::uint32_t> to_digits(std::uint32_t a, std::uint32_t p, std::uint32_t r)
{
	std::vector<std::uint32_t> d(r);
	for (auto &x : d)
	{
		x = a % p;
		a /= p;
	}
	return d;
}

std::uint32_t from_digit_vector(std::vector<std::uint32_t> const &d, std::uint32_t p)
{
	std::uint32_t a = 0;
	for (auto it = d.rbegin(); it != d.rend(); ++it)
		a = a * p + *it;
	return a;
}

bool primitive(std::vector<std::uint32_t> const &f, std::uint32_t p)
{
	std::uint32_t const r = static_cast<std::uint32_t>(f.size() - 1);
	std::uint32_t q = 1;
	for (std::uint32_t i = 0; i < r; ++i)
		q *= p;
	if (r == 1)
		return true;
	std::vector<std::uint32_t> x(r, 0), power(r, 0);
	x[1] = 1;
	power[0] = 1;
	for (std::uint32_t k = 1; k <= q - 1; ++k)
	{
		power = poly_mulmod(power, x, f, p);
		bool const is_one = power[0] == 1 && std::all_of(power.begin() + 1, power.end(),
		                                                 [](std::uint32_t c) { return c == 0; });
		if (is_one)
			return k == q - 1;
	}
	return false;
}

} // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t r) : p_(p), r_(r), q_(1)
{
	if (!is_prime(p))
		throw Error(ErrorKind::InvalidArgument, fmt::format("characteristic {} is not prime", p));
	if (r < 1)
		throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
	for (std::uint32_t i = 0; i < r; ++i)
	{
		q_ *= p;
		if (q_ > 256)
			throw Error(ErrorKind::InvalidArgument, "field order above 256 is not supported");
	}

	if (r == 1)
		modulus_ = {0, 1};
	else if (auto it = conway.find({p, r}); it != conway.end())
		modulus_ = it->second;
	else
	{
		// first primitive monic polynomial in digit order of its lower coefficients
		for (std::uint32_t code = 1; code < q_; ++code)
		{
			auto f = to_digits(code, p, r);
			f.push_back(1);
			if (f[0] != 0 && primitive(f, p))
			{
				modulus_ = std::move(f);
				break;
			}
		}
	}

	add_.resize(q_ * q_);
	mul_.resize(q_ * q_);
	neg_.resize(q_);
	inv_.assign(q_, 0);
	for (std::uint32_t a = 0; a < q_; ++a)
	{
		auto const da = to_digits(a, p, r);
		std::vector<std::uint32_t> dn(r);
		for (std::uint32_t i = 0; i < r; ++i)
			dn[i] = (p - da[i]) % p;
		neg_[a] = static_cast<Element>(from_digit_vector(dn, p));
		for (std::uint32_t b = 0; b < q_; ++b)
		{
			auto const db = to_digits(b, p, r);
			std::vector<std::uint32_t> ds(r);
			for (std::uint32_t i = 0; i < r; ++i)
				ds[i] = (da[i] + db[i]) % p;
			add_[a * q_ + b] = static_cast<Element>(from_digit_vector(ds, p));
			auto const prod = r == 1 ? std::vector<std::uint32_t>{da[0] * db[0] % p}
			                         : poly_mulmod(da, db, modulus_, p);
			mul_[a * q_ + b] = static_cast<Element>(from_digit_vector(prod, p));
		}
	}
	for (std::uint32_t a = 1; a < q_; ++a)
		for (std::uint32_t b = 1; b < q_; ++b)
			if (mul_[a * q_ + b] == 1)
			{
				inv_[a] = static_cast<Element>(b);
				break;
			}
	for (std::uint32_t a = 1; a < q_; ++a)
		if (inv_[a] == 0)
			throw Error(ErrorKind::InvalidArgument,
			            fmt::format("modulus for F_{} is reducible", q_));
}

FiniteField FiniteField::of_order(std::uint32_t q)
{
	for (std::uint32_t p = 2; p <= q; ++p)
	{
		if (q % p != 0)
			continue;
		if (!is_prime(p))
			break;
		std::uint32_t r = 0, rest = q;
		while (rest % p == 0)
		{
			rest /= p;
			++r;
		}
		if (rest != 1)
			break;
		return FiniteField(p, r);
	}
	throw Error(ErrorKind::InvalidArgument, fmt::format("{} is not a prime power", q));
}

FiniteField::Element FiniteField::basis(std::uint32_t l) const
{
	if (l < 1 || l > r_)
		throw Error(ErrorKind::InvalidArgument, fmt::format("basis index {} outside 1..{}", l, r_));
	std::uint32_t e = 1;
	for (std::uint32_t i = 1; i < l; ++i)
		e *= p_;
	return static_cast<Element>(e);
}

FiniteField::Element FiniteField::from_int(std::int64_t v) const
{
	auto m = v % static_cast<std::int64_t>(p_);
	return static_cast<Element>(m < 0 ? m + p_ : m);
}

std::vector<std::uint32_t> FiniteField::digits(Element a) const { return to_digits(a, p_, r_); }

FiniteField::Element FiniteField::from_digits(std::vector<std::uint32_t> const &d) const
{
	std::vector<std::uint32_t> reduced(r_, 0);
	for (std::size_t i = 0; i < d.size() && i < r_; ++i)
		reduced[i] = d[i] % p_;
	return static_cast<Element>(from_digit_vector(reduced, p_));
}

FiniteField::Element FiniteField::inv(Element a) const
{
	if (a == 0)
		throw Error(ErrorKind::InvalidArgument, "inverse of zero");
	return inv_[a];
}

bool FiniteField::modulus_is_primitive() const
{
	return r_ == 1 || primitive(modulus_, p_);
}

} // namespace kmp
