#include "kmp/truncated_poly.hpp"

namespace kmp {

TruncatedPolyRing::TruncatedPolyRing(FiniteField fq, std::uint32_t k) : fq_(std::move(fq)), k_(k)
{
	if (k == 0)
		throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
}

TruncatedPolyRing::Poly TruncatedPolyRing::one() const
{
	return constant(1);
}

TruncatedPolyRing::Poly TruncatedPolyRing::constant(Coeff c) const
{
	return monomial(c, 0);
}

TruncatedPolyRing::Poly TruncatedPolyRing::monomial(Coeff c, std::uint32_t d) const
{
	Poly out = zero();
	if (d < k_)
		out[d] = c;
	return out;
}

TruncatedPolyRing::Poly TruncatedPolyRing::add(Poly const &a, Poly const &b) const
{
	Poly out(k_);
	add_into(a, b, out);
	return out;
}

TruncatedPolyRing::Poly TruncatedPolyRing::sub(Poly const &a, Poly const &b) const
{
	return add(a, neg(b));
}

TruncatedPolyRing::Poly TruncatedPolyRing::neg(Poly const &a) const
{
	Poly out(k_);
	for (std::uint32_t d = 0; d < k_; ++d)
		out[d] = fq_.neg(a[d]);
	return out;
}

TruncatedPolyRing::Poly TruncatedPolyRing::mul(Poly const &a, Poly const &b) const
{
	Poly out = zero();
	mul_acc(a, b, out);
	return out;
}

TruncatedPolyRing::Poly TruncatedPolyRing::scale(Coeff c, Poly const &a) const
{
	Poly out(k_);
	for (std::uint32_t d = 0; d < k_; ++d)
		out[d] = fq_.mul(c, a[d]);
	return out;
}

TruncatedPolyRing::Poly TruncatedPolyRing::inv(Poly const &a) const
{
	if (!is_unit(a))
		throw Error(ErrorKind::InvalidArgument, "not a unit in the truncated ring");
	// b_0 = a_0^-1, b_n = -a_0^-1 sum_{j=1..n} a_j b_{n-j}
	Poly b = zero();
	auto const a0inv = fq_.inv(a[0]);
	b[0] = a0inv;
	for (std::uint32_t n = 1; n < k_; ++n)
	{
		Coeff s = 0;
		for (std::uint32_t j = 1; j <= n; ++j)
			s = fq_.add(s, fq_.mul(a[j], b[n - j]));
		b[n] = fq_.neg(fq_.mul(a0inv, s));
	}
	return b;
}

bool TruncatedPolyRing::is_zero(Poly const &a) const
{
	return valuation(a) == k_;
}

std::uint32_t TruncatedPolyRing::valuation(Poly const &a) const
{
	for (std::uint32_t d = 0; d < k_; ++d)
		if (a[d] != 0)
			return d;
	return k_;
}

void TruncatedPolyRing::add_into(std::span<Coeff const> a, std::span<Coeff const> b,
                                 std::span<Coeff> out) const
{
	for (std::uint32_t d = 0; d < k_; ++d)
		out[d] = fq_.add(a[d], b[d]);
}

void TruncatedPolyRing::mul_acc(std::span<Coeff const> a, std::span<Coeff const> b,
                                std::span<Coeff> acc) const
{
	for (std::uint32_t i = 0; i < k_; ++i)
	{
		if (a[i] == 0)
			continue;
		for (std::uint32_t j = 0; i + j < k_; ++j)
			if (b[j] != 0)
				acc[i + j] = fq_.add(acc[i + j], fq_.mul(a[i], b[j]));
	}
}

} // namespace kmp
