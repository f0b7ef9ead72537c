#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace kmp {

/// Truncated Baker-Campbell-Hausdorff series log(exp X exp Y) in Dynkin's
/// right-nested form: a sum of c_w [w_1, [w_2, ... [w_{k-1}, w_k]]] over
/// words w in {X = 0, Y = 1} of length <= max_weight.
///
/// Words sharing a suffix share the nested bracket, so evaluation walks a
/// suffix tree: node i stands for the right-nested bracket of some suffix,
/// built from its first letter and the node of the remaining suffix.
class BchPlan
{
  public:
	struct Node
	{
		std::uint8_t letter; // 0 = X, 1 = Y
		int child;           // node of the rest of the word, -1 for a single letter
		int length;
	};
	struct Term
	{
		int node;
		mpq_class coefficient;
	};

	explicit BchPlan(int max_weight);

	int max_weight() const { return max_weight_; }
	std::vector<Node> const &nodes() const { return nodes_; }
	std::vector<Term> const &terms() const { return terms_; }
	/// Aggregated coefficient of a word (zero if absent).
	mpq_class coefficient(std::vector<std::uint8_t> const &word) const;

	/// Largest prime dividing some coefficient denominator.
	unsigned long largest_denominator_prime() const;

	/// Evaluates the series. `scratch` holds one value per node and is
	/// reused across calls; values must be resettable by `clear`.
	///   bracket(a, b, out): out = [a, b]
	///   axpy(c, v, acc):    acc += c v
	template <class T, class C, class Clear, class Bracket, class Axpy>
	void evaluate(T const &x, T const &y, std::span<C const> coefficients, std::vector<T> &scratch,
	              T &out, Clear &&clear, Bracket &&bracket, Axpy &&axpy) const
	{
		if (scratch.size() < nodes_.size())
			scratch.resize(nodes_.size(), out);
		for (std::size_t i = 0; i < nodes_.size(); ++i)
		{
			auto const &node = nodes_[i];
			T const &head = node.letter == 0 ? x : y;
			if (node.child < 0)
				scratch[i] = head;
			else
			{
				clear(scratch[i]);
				bracket(head, scratch[node.child], scratch[i]);
			}
		}
		clear(out);
		for (std::size_t t = 0; t < terms_.size(); ++t)
			axpy(coefficients[t], scratch[terms_[t].node], out);
	}

  private:
	int max_weight_;
	std::vector<Node> nodes_;
	std::vector<Term> terms_;
	std::vector<std::vector<std::uint8_t>> words_; // parallel to terms_
};

} // namespace kmp
