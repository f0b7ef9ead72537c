#pragma once

#include "kmp/gcm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kmp {

/// Element of the root lattice Q in the simple-root basis, indexed by label
/// position of the owning GCM.
using RootVector = IntVector;

/// Sequence of simple reflections by label index. Composition is
/// left-to-right, so the rightmost letter acts first.
struct WeylWord
{
	std::vector<Index> letters;

	bool empty() const { return letters.empty(); }
	std::size_t length() const { return letters.size(); }
	WeylWord reversed() const { return {{letters.rbegin(), letters.rend()}}; }
	friend bool operator==(WeylWord const &, WeylWord const &) = default;
};

WeylWord parse_word(GeneralizedCartanMatrix const &gcm, std::vector<std::string> const &labels);
std::vector<std::string> word_labels(GeneralizedCartanMatrix const &gcm, WeylWord const &w);

RootVector simple_root(GeneralizedCartanMatrix const &gcm, Index s);
RootVector simple_root(GeneralizedCartanMatrix const &gcm, std::string const &label);

/// s.alpha = alpha - <alpha, alpha_s^vee> alpha_s with <alpha, alpha_s^vee> = sum_t n_t A(s,t).
RootVector simple_reflection(GeneralizedCartanMatrix const &gcm, Index s, RootVector const &alpha);
RootVector simple_reflection(GeneralizedCartanMatrix const &gcm, std::string const &label,
                             RootVector const &alpha);

RootVector weyl_apply(GeneralizedCartanMatrix const &gcm, WeylWord const &w, RootVector const &alpha);

/// Integer matrix of w acting on coordinate vectors.
IntMatrix weyl_matrix(GeneralizedCartanMatrix const &gcm, WeylWord const &w);

inline std::int64_t height(RootVector const &alpha) { return alpha.sum(); }

bool is_positive(RootVector const &alpha); // nonzero, all coordinates >= 0
bool is_negative(RootVector const &alpha); // nonzero, all coordinates <= 0

/// Lexicographic order on coordinates; total order for use as map keys.
struct RootLess
{
	bool operator()(RootVector const &a, RootVector const &b) const;
};

/// Sort key used by dumps: (height, coordinates).
bool height_then_lex(RootVector const &a, RootVector const &b);

enum class RootKind
{
	Real,
	Imaginary,
	NotRoot
};

std::string_view to_string(RootKind kind);

/// For real roots, alpha == weyl_apply(witness, simple_root(simple)).
struct RootStatus
{
	RootKind kind;
	WeylWord witness;
	Index simple = -1;
};

/// Height-descent decision. Throws ZeroVector on alpha = 0.
RootStatus root_status(GeneralizedCartanMatrix const &gcm, RootVector const &alpha);

/// Positive real roots of height <= H, by orbit closure of the simple roots.
/// Sorted by (height, coordinates).
std::vector<RootVector> positive_real_roots_up_to_height(GeneralizedCartanMatrix const &gcm,
                                                         std::int64_t max_height);

struct TaggedRoot
{
	RootVector root;
	RootKind kind;
};

/// All positive roots of height <= H, by filtering the simplex through
/// `root_status`. Sorted by (height, coordinates).
std::vector<TaggedRoot> positive_roots_up_to_height(GeneralizedCartanMatrix const &gcm,
                                                    std::int64_t max_height);

enum class Decision
{
	True,
	False,
	NotDecided
};

std::string_view to_string(Decision d);

struct PrenilpotentResult
{
	Decision decision;
	std::optional<WeylWord> positive_witness; // w(alpha), w(beta) both positive
	std::optional<WeylWord> negative_witness; // both negative
	std::size_t orbit_size = 0;               // pairs visited
	std::string certificate;
};

std::int64_t default_prenilpotent_bound(GeneralizedCartanMatrix const &gcm, RootVector const &alpha,
                                        RootVector const &beta);

/// Breadth-first search over Weyl words of length <= search_bound acting on
/// the pair. `False` is only returned with a refutation (opposite roots or a
/// closed finite pair orbit); an exhausted bound yields NotDecided.
PrenilpotentResult is_prenilpotent_pair(GeneralizedCartanMatrix const &gcm, RootVector const &alpha,
                                        RootVector const &beta,
                                        std::optional<std::int64_t> search_bound = std::nullopt);

/// Root-set dump: [{"coords", "height", "status"}], already sorted.
nlohmann::json roots_to_json(std::vector<TaggedRoot> const &roots);

} // namespace kmp
