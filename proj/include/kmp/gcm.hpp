#pragma once

#include "kmp/error.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace kmp {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Validation failure naming the offending entry (0-based indices).
class GcmError : public Error
{
  public:
	GcmError(ErrorKind kind, Index s, Index t, std::string const &what)
	    : Error(kind, what), s_(s), t_(t)
	{}
	Index s() const { return s_; }
	Index t() const { return t_; }

  private:
	Index s_, t_;
};

/// Generalized Cartan matrix over an ordered, labelled index set S.
///
/// Instances only exist in validated form: A(s,s) = 2, A(s,t) <= 0 off the
/// diagonal, and A(s,t) == 0 exactly when A(t,s) == 0.
class GeneralizedCartanMatrix
{
  public:
	/// Checks the sign constraints and returns the matrix unchanged, or throws
	/// `Error` naming the first offending (s,t) in row-major order.
	/// Empty `labels` means "1", "2", ..., "n".
	static GeneralizedCartanMatrix validate(IntMatrix const &entries,
	                                        std::vector<std::string> labels = {});

	Index size() const { return entries_.rows(); }
	std::int64_t operator()(Index s, Index t) const { return entries_(s, t); }
	IntMatrix const &entries() const { return entries_; }

	std::vector<std::string> const &labels() const { return labels_; }
	std::string const &label(Index s) const { return labels_.at(s); }
	Index index_of(std::string const &label) const; // throws UnknownLabel

	/// Largest |A(s,t)| over s != t; zero for rank <= 1.
	std::int64_t max_off_diagonal() const;

	/// Principal submatrix on the given (sorted) indices, labels carried over.
	GeneralizedCartanMatrix principal_submatrix(std::vector<Index> const &indices) const;

	/// Simultaneous row/column permutation: result(i,j) = A(perm[i], perm[j]).
	GeneralizedCartanMatrix permuted(std::vector<Index> const &perm) const;

	friend bool operator==(GeneralizedCartanMatrix const &a, GeneralizedCartanMatrix const &b)
	{
		return a.entries_ == b.entries_ && a.labels_ == b.labels_;
	}

  private:
	GeneralizedCartanMatrix(IntMatrix entries, std::vector<std::string> labels)
	    : entries_(std::move(entries)), labels_(std::move(labels))
	{}

	IntMatrix entries_;
	std::vector<std::string> labels_;
};

inline GeneralizedCartanMatrix validate_gcm(IntMatrix const &raw,
                                            std::vector<std::string> labels = {})
{
	return GeneralizedCartanMatrix::validate(raw, std::move(labels));
}

/// Convenience constructor from nested initializer lists, validated.
GeneralizedCartanMatrix make_gcm(std::vector<std::vector<std::int64_t>> const &rows);

enum class GcmClass
{
	Finite,
	Affine,
	Indefinite
};

std::string_view to_string(GcmClass c);

struct GcmBlock
{
	std::vector<Index> indices; // sorted, connected in the Dynkin graph
	GcmClass type;
};

/// Block decomposition into indecomposable components, each tagged.
/// Blocks are ordered by their smallest index.
struct GcmType
{
	std::vector<GcmBlock> blocks;

	bool indecomposable() const { return blocks.size() == 1; }
	/// Tag of the whole matrix when indecomposable; throws otherwise.
	GcmClass single() const;
};

GcmType classify(GeneralizedCartanMatrix const &gcm);
bool is_indecomposable(GeneralizedCartanMatrix const &gcm);

/// Connected components of the graph s ~ t iff A(s,t) != 0.
std::vector<std::vector<Index>> connected_components(GeneralizedCartanMatrix const &gcm);

/// Exact determinant by fraction-free (Bareiss) elimination.
template <class Derived>
typename Derived::Scalar bareiss_determinant(Eigen::MatrixBase<Derived> const &input)
{
	using Scalar = typename Derived::Scalar;
	Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
	Index const n = m.rows();
	if (n == 0)
		return Scalar(1);
	Scalar sign(1);
	Scalar prev(1);
	for (Index k = 0; k + 1 < n; ++k)
	{
		if (m(k, k) == Scalar(0))
		{
			Index swap = k + 1;
			while (swap < n && m(swap, k) == Scalar(0))
				++swap;
			if (swap == n)
				return Scalar(0);
			m.row(k).swap(m.row(swap));
			sign = -sign;
		}
		for (Index i = k + 1; i < n; ++i)
			for (Index j = k + 1; j < n; ++j)
				m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
		prev = m(k, k);
	}
	return sign * m(n - 1, n - 1);
}

/// Kac-Moody root datum with Lambda = Z^d; c_s and h_s are the columns of
/// `c` and `h` (both d x |S|).
struct KacMoodyRootDatum
{
	GeneralizedCartanMatrix gcm;
	Index lattice_rank;
	IntMatrix c;
	IntMatrix h;
};

KacMoodyRootDatum simply_connected_datum(GeneralizedCartanMatrix const &gcm);

/// True iff c_s . h_t == A(t,s) for all s, t.
bool check_datum(KacMoodyRootDatum const &datum);

/// Accepts either a bare array of integer rows or
/// {"matrix": [[...]], "labels": [...]}; validated.
GeneralizedCartanMatrix gcm_from_json(nlohmann::json const &j);
nlohmann::json to_json(GeneralizedCartanMatrix const &gcm);
nlohmann::json to_json(GcmType const &type, GeneralizedCartanMatrix const &gcm);

} // namespace kmp
