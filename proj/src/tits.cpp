#include "kmp/pgroup.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace kmp {

namespace {

using KeySet = std::unordered_set<Key>;

KeySet double_coset(GroupOracle const &g, FiniteGroupTable const &B, Key const &w)
{
	KeySet out;
	for (auto const &b1 : B.elements())
	{
		Key const left = g.multiply(b1, w);
		for (auto const &b2 : B.elements())
			out.insert(g.multiply(left, b2));
	}
	return out;
}

} // namespace

TitsReport verify_tits_axioms(FiniteGroupTable const &G, FiniteGroupTable const &B,
                              FiniteGroupTable const &N, std::vector<Key> const &S, std::size_t cap)
{
	auto const &g = G.oracle();
	TitsReport report;

	// T = B n N
	std::vector<Key> torus_elems;
	for (auto const &n : N.elements())
		if (B.contains(n))
			torus_elems.push_back(n);
	KeySet const T(torus_elems.begin(), torus_elems.end());
	auto in_T = [&](Key const &k) { return T.count(k) != 0; };

	bool T_normal = true;
	for (auto const &n : N.generators())
		for (auto const &t : torus_elems)
			if (!in_T(conjugate(g, t, n)))
				T_normal = false;

	{
		auto gens = B.generators();
		gens.insert(gens.end(), N.generators().begin(), N.generators().end());
		auto const BN = closure(G.oracle_ptr(), gens, cap);
		report.t1 = T_normal && BN.order() == G.order() && is_subgroup_of(BN, G);
	}

	// W = N / T, cosets labelled by their smallest key
	auto coset_label = [&](Key const &n) {
		Key best = n;
		for (auto const &t : torus_elems)
			best = std::min(best, g.multiply(n, t));
		return best;
	};
	std::map<Key, Key> weyl; // label -> representative
	for (auto const &n : N.elements())
		weyl.emplace(coset_label(n), n);
	report.weyl_order = weyl.size();

	{
		bool involutions = true;
		for (auto const &s : S)
			if (!N.contains(s) || in_T(s) || !in_T(g.multiply(s, s)))
				involutions = false;
		auto gens = S;
		gens.insert(gens.end(), torus_elems.begin(), torus_elems.end());
		auto const generated = closure(G.oracle_ptr(), gens, cap);
		report.t2 = involutions && generated.order() == N.order();
	}

	std::map<Key, KeySet> cells; // BwB by Weyl label
	for (auto const &[label, rep] : weyl)
		cells.emplace(label, double_coset(g, B, rep));

	report.t3 = true;
	for (auto const &s : S)
		for (auto const &[label, w] : weyl)
		{
			auto const &BwB = cells.at(label);
			auto const &BswB = cells.at(coset_label(g.multiply(s, w)));
			for (auto const &b : B.elements())
			{
				Key const x = g.multiply(g.multiply(s, b), w);
				if (!BwB.count(x) && !BswB.count(x))
					report.t3 = false;
			}
		}

	report.t4 = true;
	for (auto const &s : S)
	{
		Key const s_inv = g.inverse(s);
		bool escapes = std::any_of(B.elements().begin(), B.elements().end(), [&](Key const &b) {
			return !B.contains(g.multiply(g.multiply(s, b), s_inv));
		});
		report.t4 = report.t4 && escapes;
	}

	std::size_t total = 0;
	KeySet seen;
	bool disjoint = true;
	for (auto const &[label, cell] : cells)
	{
		total += cell.size();
		for (auto const &x : cell)
			if (!seen.insert(x).second)
				disjoint = false;
	}
	report.bruhat_partition = disjoint && total == G.order() &&
	                          std::all_of(seen.begin(), seen.end(), [&](Key const &x) { return G.contains(x); });
	return report;
}

} // namespace kmp
