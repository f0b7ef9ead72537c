#include "kmp/bch.hpp"

#include "kmp/error.hpp"

#include <algorithm>
#include <map>

namespace kmp {

namespace {

using Word = std::vector<std::uint8_t>;

mpz_class factorial(int n)
{
	mpz_class f = 1;
	for (int i = 2; i <= n; ++i)
		f *= i;
	return f;
}

// Dynkin: sum_n (-1)^(n-1)/n sum over (r_i, s_i), r_i + s_i >= 1, of
// [X^r1 Y^s1 ... X^rn Y^sn] / ((sum r_i + s_i) prod r_i! s_i!).
std::map<Word, mpq_class> dynkin_coefficients(int max_weight)
{
	std::map<Word, mpq_class> out;
	Word word;
	auto rec = [&](auto &&self, int n, int pairs, mpz_class const &denominator) -> void {
		if (pairs == n)
		{
			int const m = static_cast<int>(word.size());
			mpq_class c(n % 2 == 1 ? 1 : -1, 1);
			c /= mpq_class(mpz_class(n) * m * denominator);
			out[word] += c;
			return;
		}
		int const used = static_cast<int>(word.size());
		int const left = max_weight - used - (n - pairs - 1);
		for (int r = 0; r <= left; ++r)
			for (int s = 0; r + s <= left; ++s)
			{
				if (r + s == 0)
					continue;
				word.insert(word.end(), r, 0);
				word.insert(word.end(), s, 1);
				self(self, n, pairs + 1, denominator * factorial(r) * factorial(s));
				word.resize(used);
			}
	};
	for (int n = 1; n <= max_weight; ++n)
		rec(rec, n, 0, mpz_class(1));
	return out;
}

} // namespace

BchPlan::BchPlan(int max_weight) : max_weight_(max_weight)
{
	if (max_weight < 1)
		throw Error(ErrorKind::InvalidArgument, "BCH weight must be >= 1");

	std::vector<std::pair<Word, mpq_class>> kept;
	for (auto &[word, c] : dynkin_coefficients(max_weight))
	{
		if (sgn(c) == 0)
			continue;
		auto const len = word.size();
		if (len >= 2 && word[len - 1] == word[len - 2])
			continue; // innermost bracket [a, a] vanishes
		kept.emplace_back(word, c);
	}
	std::stable_sort(kept.begin(), kept.end(),
	                 [](auto const &a, auto const &b) { return a.first.size() < b.first.size(); });

	std::map<Word, int> node_of;
	auto node_for = [&](auto &&self, Word const &w) -> int {
		if (auto it = node_of.find(w); it != node_of.end())
			return it->second;
		int child = -1;
		if (w.size() > 1)
			child = self(self, Word(w.begin() + 1, w.end()));
		nodes_.push_back({w.front(), child, static_cast<int>(w.size())});
		int const id = static_cast<int>(nodes_.size()) - 1;
		node_of.emplace(w, id);
		return id;
	};
	for (auto &[word, c] : kept)
	{
		terms_.push_back({node_for(node_for, word), c});
		words_.push_back(word);
	}
}

mpq_class BchPlan::coefficient(std::vector<std::uint8_t> const &word) const
{
	for (std::size_t i = 0; i < words_.size(); ++i)
		if (words_[i] == word)
			return terms_[i].coefficient;
	return 0;
}

unsigned long BchPlan::largest_denominator_prime() const
{
	unsigned long best = 1;
	for (auto const &t : terms_)
	{
		mpz_class d = t.coefficient.get_den();
		for (unsigned long f = 2; d > 1; ++f)
			while (mpz_divisible_ui_p(d.get_mpz_t(), f))
			{
				d /= f;
				best = std::max(best, f);
			}
	}
	return best;
}

} // namespace kmp
