#include "kmp/unipotent.hpp"

#include <chrono>
#include <map>
#include <mutex>

#include <fmt/format.h>

namespace kmp {

namespace {

std::shared_ptr<BchPlan const> cached_plan(int weight)
{
	static std::mutex mutex;
	static std::map<int, std::shared_ptr<BchPlan const>> plans;
	std::lock_guard lock(mutex);
	auto &slot = plans[weight];
	if (!slot)
		slot = std::make_shared<BchPlan const>(weight);
	return slot;
}

} // namespace

UnipotentGroup::UnipotentGroup(GradedLieAlgebra<PrimeField> algebra, FiniteField fq)
    : algebra_(std::move(algebra)), fq_(std::move(fq))
{
	auto const p = algebra_.field().characteristic();
	if (p != fq_.p())
		throw Error(ErrorKind::InvalidArgument,
		            fmt::format("algebra over F_{} but coefficients in {}", p, fq_.name()));
	if (static_cast<std::int64_t>(p) <= algebra_.cutoff())
		throw Error(ErrorKind::CharacteristicTooSmall,
		            fmt::format("p = {} <= H = {}", p, algebra_.cutoff()));

	plan_ = cached_plan(static_cast<int>(algebra_.cutoff()));
	for (auto const &t : plan_->terms())
		bch_coefficients_.push_back(fq_.from_prime(algebra_.field().from_rational(t.coefficient)));

	std::size_t const n = dimension();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto const &terms = algebra_.structure(i, j);
			if (terms.empty())
				continue;
			auto const begin = static_cast<std::uint32_t>(triples_.size());
			for (auto const &[k, c] : terms)
				triples_.emplace_back(static_cast<std::uint16_t>(k), fq_.from_prime(c));
			pairs_.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), begin,
			                  static_cast<std::uint32_t>(triples_.size())});
		}
}

void UnipotentGroup::bracket_into(Element const &a, Element const &b, Element &out) const
{
	for (auto const &pt : pairs_)
	{
		auto const ai = a[pt.i];
		auto const bj = b[pt.j];
		if (ai == 0 || bj == 0)
			continue;
		auto const prod = fq_.mul(ai, bj);
		for (auto t = pt.begin; t < pt.end; ++t)
		{
			auto const &[k, c] = triples_[t];
			out[k] = fq_.add(out[k], fq_.mul(prod, c));
		}
	}
}

UnipotentGroup::Element UnipotentGroup::multiply(Element const &x, Element const &y) const
{
	thread_local std::vector<Element> scratch;
	Element out(dimension(), 0);
	plan_->evaluate(
	    x, y, std::span<FiniteField::Element const>(bch_coefficients_), scratch, out,
	    [n = dimension()](Element &v) { v.assign(n, 0); },
	    [this](Element const &a, Element const &b, Element &o) { bracket_into(a, b, o); },
	    [this](FiniteField::Element c, Element const &v, Element &acc) {
		    if (c == 0)
			    return;
		    for (std::size_t k = 0; k < acc.size(); ++k)
			    if (v[k] != 0)
				    acc[k] = fq_.add(acc[k], fq_.mul(c, v[k]));
	    });
	return out;
}

UnipotentGroup::Element UnipotentGroup::inverse(Element const &x) const
{
	Element out(x.size());
	for (std::size_t k = 0; k < x.size(); ++k)
		out[k] = fq_.neg(x[k]);
	return out;
}

UnipotentGroup::Element UnipotentGroup::commutator(Element const &x, Element const &y) const
{
	return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

UnipotentGroup::Element UnipotentGroup::lie_bracket(Element const &x, Element const &y) const
{
	Element out(dimension(), 0);
	bracket_into(x, y, out);
	return out;
}

UnipotentGroup::Element UnipotentGroup::add(Element const &x, Element const &y) const
{
	Element out(x.size());
	for (std::size_t k = 0; k < x.size(); ++k)
		out[k] = fq_.add(x[k], y[k]);
	return out;
}

UnipotentGroup::Element UnipotentGroup::scale(FiniteField::Element a, Element const &x) const
{
	Element out(x.size());
	for (std::size_t k = 0; k < x.size(); ++k)
		out[k] = fq_.mul(a, x[k]);
	return out;
}

UnipotentGroup::Element UnipotentGroup::root_group_element(RootVector const &gamma,
                                                           FiniteField::Element a) const
{
	auto const &gcm = algebra_.gcm();
	if (gamma.size() != gcm.size() || !is_positive(gamma) || height(gamma) > cutoff() ||
	    root_status(gcm, gamma).kind != RootKind::Real)
		throw Error(ErrorKind::NotPositiveRealRoot,
		            "root groups are indexed by positive real roots of height <= H");
	auto const idx = algebra_.basis_of_degree(gamma);
	if (idx.size() != 1)
		throw std::logic_error("real root space is not one-dimensional");
	Element x = identity();
	x[idx.front()] = a;
	return x;
}

std::vector<UnipotentGroup::Element> UnipotentGroup::simple_generators() const
{
	std::vector<Element> out;
	for (Index s = 0; s < algebra_.gcm().size(); ++s)
		for (std::uint32_t l = 1; l <= fq_.r(); ++l)
			out.push_back(root_group_element(simple_root(algebra_.gcm(), s), fq_.basis(l)));
	return out;
}

std::vector<UnipotentGroup::Element> UnipotentGroup::non_simple_real_root_generators() const
{
	std::vector<Element> out;
	for (auto const &gamma : positive_real_roots_up_to_height(algebra_.gcm(), cutoff()))
	{
		if (height(gamma) == 1)
			continue;
		for (std::uint32_t l = 1; l <= fq_.r(); ++l)
			out.push_back(root_group_element(gamma, fq_.basis(l)));
	}
	return out;
}

std::int64_t UnipotentGroup::filtration_level(Element const &x) const
{
	std::int64_t level = cutoff() + 1;
	for (std::size_t k = 0; k < x.size(); ++k)
		if (x[k] != 0)
			level = std::min(level, algebra_.basis(k).height);
	return level;
}

UnipotentGroup::Element UnipotentGroup::random(std::mt19937_64 &rng) const
{
	return random_in_filtration(1, rng);
}

UnipotentGroup::Element UnipotentGroup::random_in_filtration(std::int64_t i, std::mt19937_64 &rng) const
{
	std::uniform_int_distribution<std::uint32_t> coeff(0, fq_.q() - 1);
	Element x = identity();
	for (std::size_t k = 0; k < x.size(); ++k)
		if (algebra_.basis(k).height >= i)
			x[k] = static_cast<FiniteField::Element>(coeff(rng));
	return x;
}

OraclePtr UnipotentGroup::oracle(std::shared_ptr<UnipotentGroup const> group)
{
	auto g = std::make_shared<GroupOracle>();
	g->identity = group->key(group->identity());
	g->multiply = [group](Key const &a, Key const &b) {
		return group->key(group->multiply(group->from_key(a), group->from_key(b)));
	};
	g->inverse = [group](Key const &a) { return group->key(group->inverse(group->from_key(a))); };
	return g;
}

UnipotentGroup::Element bch_multiply(UnipotentGroup const &group, UnipotentGroup::Element const &x,
                                     UnipotentGroup::Element const &y)
{
	return group.multiply(x, y);
}

UnipotentGroup::Element root_group_element(UnipotentGroup const &group, RootVector const &gamma,
                                           FiniteField::Element a)
{
	return group.root_group_element(gamma, a);
}

std::uint32_t frattini_dimension_linear(GradedLieAlgebra<PrimeField> const &algebra, std::uint32_t r)
{
	auto const &F = algebra.field();
	std::size_t const n = algebra.dimension();
	// echelon basis of span{[b_i, b_j]}
	std::vector<std::vector<std::uint32_t>> rows;
	std::vector<long> pivot_row(n, -1);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			std::vector<std::uint32_t> v(n, 0);
			for (auto const &[k, c] : algebra.structure(i, j))
				v[k] = c;
			for (std::size_t c = 0; c < n; ++c)
			{
				if (v[c] == 0 || pivot_row[c] < 0)
					continue;
				auto const f = v[c];
				auto const &row = rows[pivot_row[c]];
				for (std::size_t k = c; k < n; ++k)
					v[k] = F.sub(v[k], F.mul(f, row[k]));
			}
			auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
			if (lead == v.end())
				continue;
			auto const inv = F.inv(*lead);
			for (auto &x : v)
				x = F.mul(x, inv);
			pivot_row[lead - v.begin()] = static_cast<long>(rows.size());
			rows.push_back(std::move(v));
		}
	return static_cast<std::uint32_t>((n - rows.size()) * r);
}

std::shared_ptr<UnipotentGroup const> make_unipotent_group(GeneralizedCartanMatrix const &gcm,
                                                           FiniteField const &fq, std::int64_t H)
{
	if (static_cast<std::int64_t>(fq.p()) <= H)
		throw Error(ErrorKind::CharacteristicTooSmall, fmt::format("p = {} <= H = {}", fq.p(), H));
	return std::make_shared<UnipotentGroup const>(build_positive_part(gcm, H, PrimeField(fq.p())), fq);
}

VerificationReport verify_theorem1(GeneralizedCartanMatrix const &gcm, FiniteField const &fq,
                                   std::int64_t H, std::size_t cap)
{
	auto const start = std::chrono::steady_clock::now();
	if (H < 2)
		throw Error(ErrorKind::InvalidArgument, "height cutoff must be >= 2");
	if (static_cast<std::int64_t>(fq.p()) <= gcm.max_off_diagonal())
		throw Error(ErrorKind::HypothesisViolated,
		            fmt::format("p = {} is not greater than max |A(s,t)| = {}", fq.p(),
		                        gcm.max_off_diagonal()));
	auto const group = make_unipotent_group(gcm, fq, H);
	auto const oracle = UnipotentGroup::oracle(group);

	auto keys = [&](std::vector<UnipotentGroup::Element> const &xs) {
		std::vector<Key> out;
		for (auto const &x : xs)
			out.push_back(group->key(x));
		return out;
	};

	VerificationReport report;
	report.model = "bch";
	report.caveat = "finite model: exp(n+ (x) F_q) truncated at height H with the BCH law (p > H), "
	                "standing in for U^{ma+}/U_{H+1}";
	report.gcm = to_json(gcm);
	report.q = fq.q();
	report.H = H;

	FiniteGroupTable U(oracle, keys(group->simple_generators()), fq.p());
	auto quotient = frattini_quotient(U, cap);
	auto const derived = derived_subgroup(U, cap);

	report.h1_blackbox = quotient.dimension;
	report.h1_linear = frattini_dimension_linear(group->algebra(), fq.r());
	report.h1_predicted = static_cast<std::uint32_t>(gcm.size() * fq.r());
	report.frattini_order = quotient.phi.order();
	report.derived_order = derived.order();
	report.frattini_eq_derived = same_elements(quotient.phi, derived);

	std::uint64_t model_order = 1;
	for (std::uint32_t i = 0; i < group->log_order(); ++i)
		model_order *= fq.p();
	report.generators_generate = quotient.group_order == model_order;

	auto const thm_ii = closure(oracle, keys(group->non_simple_real_root_generators()), cap);
	report.thm_ii_lhs_order = quotient.phi.order();
	report.thm_ii_rhs_order = thm_ii.order();
	report.thm_ii_equal = same_elements(quotient.phi, thm_ii);

	report.elapsed_ms =
	    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return report;
}

} // namespace kmp
