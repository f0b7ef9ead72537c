#include "kmp/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <fmt/format.h>

namespace kmp {

namespace {

void check_index(GeneralizedCartanMatrix const &gcm, Index s)
{
	if (s < 0 || s >= gcm.size())
		throw Error(ErrorKind::UnknownLabel, fmt::format("generator index {} outside S", s));
}

void check_dimension(GeneralizedCartanMatrix const &gcm, RootVector const &alpha)
{
	if (alpha.size() != gcm.size())
		throw Error(ErrorKind::InvalidArgument,
		            fmt::format("root vector has {} coordinates, |S| = {}", alpha.size(), gcm.size()));
}

// <alpha, alpha_s^vee>
std::int64_t coroot_pairing(GeneralizedCartanMatrix const &gcm, Index s, RootVector const &alpha)
{
	return gcm.entries().row(s).dot(alpha);
}

bool support_connected(GeneralizedCartanMatrix const &gcm, RootVector const &alpha)
{
	std::vector<Index> support;
	for (Index i = 0; i < alpha.size(); ++i)
		if (alpha(i) != 0)
			support.push_back(i);
	return !support.empty() && is_indecomposable(gcm.principal_submatrix(support));
}

RootStatus positive_status(GeneralizedCartanMatrix const &gcm, RootVector alpha)
{
	WeylWord descent;
	for (;;)
	{
		if (height(alpha) == 1)
		{
			Index s = 0;
			alpha.maxCoeff(&s);
			return {RootKind::Real, descent, s};
		}
		Index lowering = -1;
		std::int64_t pairing = 0;
		for (Index s = 0; s < gcm.size(); ++s)
		{
			pairing = coroot_pairing(gcm, s, alpha);
			if (pairing > 0)
			{
				lowering = s;
				break;
			}
		}
		if (lowering < 0)
		{
			// dominant for the coroots: imaginary iff the support is connected
			if (support_connected(gcm, alpha))
				return {RootKind::Imaginary, {}, -1};
			return {RootKind::NotRoot, {}, -1};
		}
		alpha(lowering) -= pairing;
		descent.letters.push_back(lowering);
		if (!is_positive(alpha))
			return {RootKind::NotRoot, {}, -1};
	}
}

} // namespace

WeylWord parse_word(GeneralizedCartanMatrix const &gcm, std::vector<std::string> const &labels)
{
	WeylWord w;
	for (auto const &l : labels)
		w.letters.push_back(gcm.index_of(l));
	return w;
}

std::vector<std::string> word_labels(GeneralizedCartanMatrix const &gcm, WeylWord const &w)
{
	std::vector<std::string> out;
	for (auto s : w.letters)
		out.push_back(gcm.label(s));
	return out;
}

RootVector simple_root(GeneralizedCartanMatrix const &gcm, Index s)
{
	check_index(gcm, s);
	return RootVector::Unit(gcm.size(), s);
}

RootVector simple_root(GeneralizedCartanMatrix const &gcm, std::string const &label)
{
	return simple_root(gcm, gcm.index_of(label));
}

RootVector simple_reflection(GeneralizedCartanMatrix const &gcm, Index s, RootVector const &alpha)
{
	check_index(gcm, s);
	check_dimension(gcm, alpha);
	RootVector out = alpha;
	out(s) -= coroot_pairing(gcm, s, alpha);
	return out;
}

RootVector simple_reflection(GeneralizedCartanMatrix const &gcm, std::string const &label,
                             RootVector const &alpha)
{
	return simple_reflection(gcm, gcm.index_of(label), alpha);
}

RootVector weyl_apply(GeneralizedCartanMatrix const &gcm, WeylWord const &w, RootVector const &alpha)
{
	for (auto s : w.letters)
		check_index(gcm, s);
	RootVector out = alpha;
	for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
		out = simple_reflection(gcm, *it, out);
	return out;
}

IntMatrix weyl_matrix(GeneralizedCartanMatrix const &gcm, WeylWord const &w)
{
	Index const n = gcm.size();
	IntMatrix m = IntMatrix::Identity(n, n);
	for (auto s : w.letters)
	{
		check_index(gcm, s);
		IntMatrix reflection = IntMatrix::Identity(n, n);
		reflection.row(s) -= gcm.entries().row(s);
		m = m * reflection;
	}
	return m;
}

bool is_positive(RootVector const &alpha)
{
	return alpha.size() > 0 && alpha.minCoeff() >= 0 && alpha.maxCoeff() > 0;
}

bool is_negative(RootVector const &alpha)
{
	return alpha.size() > 0 && alpha.maxCoeff() <= 0 && alpha.minCoeff() < 0;
}

bool RootLess::operator()(RootVector const &a, RootVector const &b) const
{
	return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool height_then_lex(RootVector const &a, RootVector const &b)
{
	if (height(a) != height(b))
		return height(a) < height(b);
	return RootLess{}(a, b);
}

std::string_view to_string(RootKind kind)
{
	switch (kind)
	{
	case RootKind::Real: return "real";
	case RootKind::Imaginary: return "imaginary";
	case RootKind::NotRoot: return "not_root";
	}
	return "?";
}

std::string_view to_string(Decision d)
{
	switch (d)
	{
	case Decision::True: return "true";
	case Decision::False: return "false";
	case Decision::NotDecided: return "not_decided";
	}
	return "?";
}

RootStatus root_status(GeneralizedCartanMatrix const &gcm, RootVector const &alpha)
{
	check_dimension(gcm, alpha);
	if (alpha.isZero())
		throw Error(ErrorKind::ZeroVector, "root_status of the zero vector");
	if (is_positive(alpha))
		return positive_status(gcm, alpha);
	if (!is_negative(alpha))
		return {RootKind::NotRoot, {}, -1};
	// -alpha = w(alpha_s) gives alpha = w s (alpha_s)
	auto status = positive_status(gcm, -alpha);
	if (status.kind == RootKind::Real)
		status.witness.letters.push_back(status.simple);
	return status;
}

std::vector<RootVector> positive_real_roots_up_to_height(GeneralizedCartanMatrix const &gcm,
                                                         std::int64_t max_height)
{
	if (max_height < 1)
		throw Error(ErrorKind::InvalidArgument, "height bound must be >= 1");
	std::set<RootVector, RootLess> seen;
	std::deque<RootVector> queue;
	for (Index s = 0; s < gcm.size(); ++s)
	{
		queue.push_back(simple_root(gcm, s));
		seen.insert(queue.back());
	}
	while (!queue.empty())
	{
		RootVector const alpha = queue.front();
		queue.pop_front();
		for (Index s = 0; s < gcm.size(); ++s)
		{
			RootVector next = simple_reflection(gcm, s, alpha);
			if (!is_positive(next) || height(next) > max_height)
				continue;
			if (seen.insert(next).second)
				queue.push_back(std::move(next));
		}
	}
	std::vector<RootVector> out(seen.begin(), seen.end());
	std::sort(out.begin(), out.end(), height_then_lex);
	return out;
}

namespace {

template <class Visit>
void for_each_in_simplex(Index n, std::int64_t max_height, Visit &&visit)
{
	RootVector v = RootVector::Zero(n);
	auto rec = [&](auto &&self, Index i, std::int64_t remaining) -> void {
		if (i == n)
		{
			if (!v.isZero())
				visit(v);
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
}

} // namespace

std::vector<TaggedRoot> positive_roots_up_to_height(GeneralizedCartanMatrix const &gcm,
                                                    std::int64_t max_height)
{
	if (max_height < 1)
		throw Error(ErrorKind::InvalidArgument, "height bound must be >= 1");
	std::vector<TaggedRoot> out;
	for_each_in_simplex(gcm.size(), max_height, [&](RootVector const &v) {
		auto const kind = root_status(gcm, v).kind;
		if (kind != RootKind::NotRoot)
			out.push_back({v, kind});
	});
	std::sort(out.begin(), out.end(),
	          [](TaggedRoot const &a, TaggedRoot const &b) { return height_then_lex(a.root, b.root); });
	return out;
}

std::int64_t default_prenilpotent_bound(GeneralizedCartanMatrix const &gcm, RootVector const &alpha,
                                        RootVector const &beta)
{
	return alpha.cwiseAbs().sum() + beta.cwiseAbs().sum() + 2 * gcm.size();
}

PrenilpotentResult is_prenilpotent_pair(GeneralizedCartanMatrix const &gcm, RootVector const &alpha,
                                        RootVector const &beta,
                                        std::optional<std::int64_t> search_bound)
{
	check_dimension(gcm, alpha);
	check_dimension(gcm, beta);
	for (auto const *r : {&alpha, &beta})
		if (r->isZero() || root_status(gcm, *r).kind != RootKind::Real)
			throw Error(ErrorKind::NotRealRoot, "prenilpotency is defined for real roots");

	PrenilpotentResult result{Decision::NotDecided, std::nullopt, std::nullopt, 0, {}};
	if (alpha == -beta)
	{
		result.decision = Decision::False;
		result.certificate = "opposite roots: w(alpha) and w(-alpha) never share a sign";
		return result;
	}

	std::int64_t const bound = search_bound.value_or(default_prenilpotent_bound(gcm, alpha, beta));
	using Pair = std::pair<RootVector, RootVector>;
	auto pair_less = [](Pair const &a, Pair const &b) {
		RootLess less;
		if (less(a.first, b.first))
			return true;
		if (less(b.first, a.first))
			return false;
		return less(a.second, b.second);
	};
	std::set<Pair, decltype(pair_less)> visited(pair_less);
	struct Node
	{
		Pair pair;
		WeylWord word;
	};
	std::deque<Node> queue;
	queue.push_back({{alpha, beta}, {}});
	visited.insert(queue.back().pair);
	bool truncated = false;

	while (!queue.empty())
	{
		Node node = std::move(queue.front());
		queue.pop_front();
		auto const &[a, b] = node.pair;
		if (!result.positive_witness && is_positive(a) && is_positive(b))
			result.positive_witness = node.word;
		if (!result.negative_witness && is_negative(a) && is_negative(b))
			result.negative_witness = node.word;
		if (result.positive_witness && result.negative_witness)
		{
			result.decision = Decision::True;
			result.orbit_size = visited.size();
			result.certificate = "witness words found";
			return result;
		}
		if (static_cast<std::int64_t>(node.word.length()) >= bound)
		{
			truncated = true;
			continue;
		}
		for (Index s = 0; s < gcm.size(); ++s)
		{
			Pair next{simple_reflection(gcm, s, a), simple_reflection(gcm, s, b)};
			if (!visited.insert(next).second)
				continue;
			WeylWord w;
			w.letters.reserve(node.word.length() + 1);
			w.letters.push_back(s);
			w.letters.insert(w.letters.end(), node.word.letters.begin(), node.word.letters.end());
			queue.push_back({std::move(next), std::move(w)});
		}
	}
	result.orbit_size = visited.size();
	if (truncated)
	{
		result.certificate = fmt::format("search bound {} exhausted", bound);
		return result;
	}
	result.decision = Decision::False;
	result.certificate = fmt::format("closed pair orbit of size {} lacks a witness", visited.size());
	return result;
}

nlohmann::json roots_to_json(std::vector<TaggedRoot> const &roots)
{
	nlohmann::json out = nlohmann::json::array();
	for (auto const &r : roots)
	{
		std::vector<std::int64_t> coords(r.root.begin(), r.root.end());
		out.push_back({{"coords", coords}, {"height", height(r.root)},
		               {"status", std::string(to_string(r.kind))}});
	}
	return out;
}

} // namespace kmp
