#pragma once

#include "kmp/gcm.hpp"
#include "kmp/pgroup.hpp"
#include "kmp/report.hpp"
#include "kmp/truncated_poly.hpp"

#include <memory>
#include <random>

namespace kmp {

/// m x m matrices over F_q[t]/(t^k). Entry (i, j), coefficient d is stored at
/// (i * m + j) * k + d; indices are 0-based throughout.
class MatrixGroup
{
  public:
	using Poly = TruncatedPolyRing::Poly;
	using Matrix = std::vector<FiniteField::Element>;

	MatrixGroup(std::uint32_t m, FiniteField fq, std::uint32_t k);

	std::uint32_t m() const { return m_; }
	std::uint32_t k() const { return ring_.k(); }
	TruncatedPolyRing const &ring() const { return ring_; }
	FiniteField const &field() const { return ring_.field(); }

	Matrix zero() const { return Matrix(m_ * m_ * k(), 0); }
	Matrix identity() const;
	Poly entry(Matrix const &a, std::uint32_t i, std::uint32_t j) const;
	void set_entry(Matrix &a, std::uint32_t i, std::uint32_t j, Poly const &v) const;
	Matrix from_rows(std::vector<std::vector<Poly>> const &rows) const;

	Matrix multiply(Matrix const &a, Matrix const &b) const;
	/// Adjugate divided by the determinant; throws unless det is a unit.
	Matrix inverse(Matrix const &a) const;
	Poly determinant(Matrix const &a) const;
	Matrix commutator(Matrix const &a, Matrix const &b) const; // a b a^-1 b^-1

	/// 1 + c E_{i,j}, i != j.
	Matrix elementary(std::uint32_t i, std::uint32_t j, Poly const &c) const;
	Matrix diagonal(std::vector<Poly> const &d) const;

	/// a == 1 mod t^i.
	bool congruent_to_identity(Matrix const &a, std::uint32_t i) const;

	Key key(Matrix const &a) const { return Key(a.begin(), a.end()); }
	Matrix from_key(Key const &k) const { return Matrix(k.begin(), k.end()); }
	static OraclePtr oracle(std::shared_ptr<MatrixGroup const> group);

  private:
	Poly minor_det(Matrix const &a, std::vector<std::uint32_t> const &rows,
	               std::vector<std::uint32_t> const &cols) const;

	std::uint32_t m_;
	TruncatedPolyRing ring_;
};

/// The affine Cartan matrix of SL_m over a Laurent polynomial ring: [[2,-2],[-2,2]]
/// for m = 2, the m-cycle for m >= 3.
GeneralizedCartanMatrix affine_cartan_matrix(std::uint32_t m);

/// Unipotent upper triangular modulo t (and det = 1).
bool iwahori_sylow_membership(MatrixGroup const &G, MatrixGroup::Matrix const &g);

/// 1 + v_l E_{i,i+1} then 1 + v_l t E_{m,1}; the latter omitted when
/// `include_affine` is false.
std::vector<MatrixGroup::Matrix> sylow_generators(MatrixGroup const &G, bool include_affine = true);

/// q^{m(m-1)/2} q^{(m^2-1)(k-1)}; throws InvalidArgument on 64-bit overflow.
std::uint64_t sylow_order(std::uint32_t m, std::uint32_t q, std::uint32_t k);

/// Random Sylow member: random entries with the right constant terms, first
/// row rescaled by det^-1.
MatrixGroup::Matrix random_sylow_member(MatrixGroup const &G, std::mt19937_64 &rng);

/// Closure of the generators has the Sylow order, consists of members, and
/// contains `samples` random members.
bool verify_generation(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                       std::size_t cap = default_enumeration_cap, bool include_affine = true,
                       std::uint64_t seed = 1, std::size_t samples = 1000);

/// dim_{F_p} of the Frattini quotient of the closure of sylow_generators.
std::uint32_t frattini_dimension_affine(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                                        std::size_t cap = default_enumeration_cap);

/// [1 + r t^mx E_12, 1 + s t^nx E_21] against the closed form
/// diag(1 + u + u^2, 1 - u), off-diagonal (-r^2 s t^{2mx+nx}, r s^2 t^{mx+2nx}),
/// u = r s t^{mx+nx}. TruncationTooShallow unless K > 3 max(mx, nx).
bool commutator_identity_check(FiniteField const &fq, FiniteField::Element r, FiniteField::Element s,
                               std::uint32_t mx, std::uint32_t nx, std::uint32_t K);

/// Generators of K_i = {g == 1 mod t^i} in the Sylow: 1 + v_l t^j E_{a,b}
/// (a != b) and diag(.., 1 + v_l t^j, (1 + v_l t^j)^-1, ..) for i <= j < k.
std::vector<MatrixGroup::Matrix> congruence_generators(MatrixGroup const &G, std::uint32_t i);
FiniteGroupTable congruence_subgroup(std::shared_ptr<MatrixGroup const> const &G, std::uint32_t i,
                                     std::size_t cap = default_enumeration_cap);

/// Root groups 1 + v_l t^n E_{a,b} of the non-simple positive real affine roots
/// surviving truncation.
std::vector<MatrixGroup::Matrix> non_simple_real_root_generators(MatrixGroup const &G);

/// Entrywise truncation t^{k'} -> t^k, k <= k'.
MatrixGroup::Matrix reduce_truncation(MatrixGroup const &from, MatrixGroup const &to,
                                      MatrixGroup::Matrix const &g);

/// Affine counterpart of verify_theorem1. HypothesisViolated when p does not
/// exceed the largest off-diagonal entry of the affine Cartan matrix.
VerificationReport verify_theorem1_affine(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                                          std::size_t cap = default_enumeration_cap);

/// Filtration lemma on the Sylow with V = [U, U] and the congruence chain
/// K_2 >= ... >= K_k = {1}.
FiltrationReport affine_filtration_check(std::uint32_t m, FiniteField const &fq, std::uint32_t k,
                                         std::size_t cap = default_enumeration_cap);

/// Generator of the cyclic group F_q^*.
FiniteField::Element multiplicative_generator(FiniteField const &fq);

struct TitsSetup
{
	std::shared_ptr<MatrixGroup const> group;
	FiniteGroupTable G, B, N;
	std::vector<Key> S;
};

/// SL_m(F_q) with B upper triangular, N monomial and S the signed simple
/// transpositions.
TitsSetup sl_tits_setup(std::uint32_t m, FiniteField const &fq, std::size_t cap = default_enumeration_cap);

/// SL_m(F_q) generated by elementary matrices.
FiniteGroupTable special_linear_group(std::shared_ptr<MatrixGroup const> const &G,
                                      std::size_t cap = default_enumeration_cap);

} // namespace kmp
