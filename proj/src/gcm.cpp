#include "kmp/gcm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace kmp {

GeneralizedCartanMatrix GeneralizedCartanMatrix::validate(IntMatrix const &entries,
                                                          std::vector<std::string> labels)
{
	if (entries.rows() != entries.cols())
		throw Error(ErrorKind::NotSquare,
		            fmt::format("matrix is {}x{}", entries.rows(), entries.cols()));
	Index const n = entries.rows();
	if (labels.empty())
		for (Index s = 0; s < n; ++s)
			labels.push_back(std::to_string(s + 1));
	if (static_cast<Index>(labels.size()) != n)
		throw Error(ErrorKind::InvalidArgument,
		            fmt::format("{} labels for a matrix of size {}", labels.size(), n));
	if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
		throw Error(ErrorKind::DuplicateLabel, "labels must be distinct");

	for (Index s = 0; s < n; ++s)
		for (Index t = 0; t < n; ++t)
		{
			auto const at = fmt::format("({},{})", labels[s], labels[t]);
			if (s == t)
			{
				if (entries(s, t) != 2)
					throw GcmError(ErrorKind::DiagonalNotTwo, s, t, "at " + at);
				continue;
			}
			if (entries(s, t) > 0)
				throw GcmError(ErrorKind::PositiveOffDiagonal, s, t, "at " + at);
			if (entries(s, t) == 0 && entries(t, s) != 0)
				throw GcmError(ErrorKind::AsymmetricZero, s, t, "at " + at);
		}
	return GeneralizedCartanMatrix(entries, std::move(labels));
}

GeneralizedCartanMatrix make_gcm(std::vector<std::vector<std::int64_t>> const &rows)
{
	Index const n = static_cast<Index>(rows.size());
	IntMatrix m(n, n);
	for (Index i = 0; i < n; ++i)
	{
		if (static_cast<Index>(rows[i].size()) != n)
			throw Error(ErrorKind::NotSquare, fmt::format("row {} has {} entries", i, rows[i].size()));
		for (Index j = 0; j < n; ++j)
			m(i, j) = rows[i][j];
	}
	return GeneralizedCartanMatrix::validate(m);
}

Index GeneralizedCartanMatrix::index_of(std::string const &label) const
{
	auto it = std::find(labels_.begin(), labels_.end(), label);
	if (it == labels_.end())
		throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
	return it - labels_.begin();
}

std::int64_t GeneralizedCartanMatrix::max_off_diagonal() const
{
	std::int64_t best = 0;
	for (Index s = 0; s < size(); ++s)
		for (Index t = 0; t < size(); ++t)
			if (s != t)
				best = std::max(best, -entries_(s, t));
	return best;
}

GeneralizedCartanMatrix
GeneralizedCartanMatrix::principal_submatrix(std::vector<Index> const &indices) const
{
	Index const k = static_cast<Index>(indices.size());
	IntMatrix sub(k, k);
	std::vector<std::string> sub_labels;
	for (Index i = 0; i < k; ++i)
	{
		sub_labels.push_back(labels_[indices[i]]);
		for (Index j = 0; j < k; ++j)
			sub(i, j) = entries_(indices[i], indices[j]);
	}
	return GeneralizedCartanMatrix(std::move(sub), std::move(sub_labels));
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::permuted(std::vector<Index> const &perm) const
{
	return principal_submatrix(perm);
}

std::string_view to_string(GcmClass c)
{
	switch (c)
	{
	case GcmClass::Finite: return "finite";
	case GcmClass::Affine: return "affine";
	case GcmClass::Indefinite: return "indefinite";
	}
	return "?";
}

GcmClass GcmType::single() const
{
	if (blocks.size() != 1)
		throw Error(ErrorKind::InvalidArgument, "matrix is decomposable");
	return blocks.front().type;
}

std::vector<std::vector<Index>> connected_components(GeneralizedCartanMatrix const &gcm)
{
	Index const n = gcm.size();
	std::vector<Index> component(n, -1);
	std::vector<std::vector<Index>> result;
	for (Index root = 0; root < n; ++root)
	{
		if (component[root] >= 0)
			continue;
		std::vector<Index> members{root};
		component[root] = static_cast<Index>(result.size());
		for (std::size_t i = 0; i < members.size(); ++i)
			for (Index t = 0; t < n; ++t)
				if (component[t] < 0 && gcm(members[i], t) != 0)
				{
					component[t] = component[root];
					members.push_back(t);
				}
		std::sort(members.begin(), members.end());
		result.push_back(std::move(members));
	}
	return result;
}

bool is_indecomposable(GeneralizedCartanMatrix const &gcm)
{
	return connected_components(gcm).size() == 1;
}

namespace {

std::int64_t principal_minor(IntMatrix const &a, unsigned mask)
{
	std::vector<Index> idx;
	for (Index i = 0; i < a.rows(); ++i)
		if (mask & (1u << i))
			idx.push_back(i);
	IntMatrix sub(idx.size(), idx.size());
	for (std::size_t i = 0; i < idx.size(); ++i)
		for (std::size_t j = 0; j < idx.size(); ++j)
			sub(i, j) = a(idx[i], idx[j]);
	return bareiss_determinant(sub);
}

GcmClass classify_block(IntMatrix const &a)
{
	Index const n = a.rows();
	if (n > 20)
		throw Error(ErrorKind::InvalidArgument, "block too large for the principal-minor test");
	unsigned const full = (1u << n) - 1;
	bool proper_positive = true;
	for (unsigned mask = 1; mask < full; ++mask)
		if (principal_minor(a, mask) <= 0)
		{
			proper_positive = false;
			break;
		}
	std::int64_t const det = bareiss_determinant(a);
	if (proper_positive && det > 0)
		return GcmClass::Finite;
	if (proper_positive && det == 0)
		return GcmClass::Affine;
	return GcmClass::Indefinite;
}

} // namespace

GcmType classify(GeneralizedCartanMatrix const &gcm)
{
	GcmType result;
	for (auto &block : connected_components(gcm))
	{
		auto const type = classify_block(gcm.principal_submatrix(block).entries());
		result.blocks.push_back({std::move(block), type});
	}
	return result;
}

KacMoodyRootDatum simply_connected_datum(GeneralizedCartanMatrix const &gcm)
{
	Index const n = gcm.size();
	return {gcm, n, gcm.entries(), IntMatrix::Identity(n, n)};
}

bool check_datum(KacMoodyRootDatum const &datum)
{
	Index const n = datum.gcm.size();
	if (datum.c.cols() != n || datum.h.cols() != n)
		return false;
	if (n > 0 && (datum.c.rows() != datum.lattice_rank || datum.h.rows() != datum.lattice_rank))
		return false;
	IntMatrix const pairing = datum.c.transpose() * datum.h; // (s,t) -> c_s(h_t)
	return pairing == datum.gcm.entries().transpose();
}

GeneralizedCartanMatrix gcm_from_json(nlohmann::json const &j)
{
	nlohmann::json const *rows = &j;
	std::vector<std::string> labels;
	if (j.is_object())
	{
		if (!j.contains("matrix"))
			throw Error(ErrorKind::ConfigError, "GCM object needs a \"matrix\" field");
		rows = &j.at("matrix");
		if (j.contains("labels"))
			for (auto const &l : j.at("labels"))
				labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
	}
	if (!rows->is_array())
		throw Error(ErrorKind::ConfigError, "GCM must be an array of integer rows");
	Index const n = static_cast<Index>(rows->size());
	IntMatrix m(n, n);
	for (Index i = 0; i < n; ++i)
	{
		auto const &row = (*rows)[i];
		if (!row.is_array() || static_cast<Index>(row.size()) != n)
			throw Error(ErrorKind::NotSquare, fmt::format("row {} does not have {} entries", i, n));
		for (Index k = 0; k < n; ++k)
		{
			if (!row[k].is_number_integer())
				throw Error(ErrorKind::ConfigError, "GCM entries must be integers");
			m(i, k) = row[k].get<std::int64_t>();
		}
	}
	return GeneralizedCartanMatrix::validate(m, std::move(labels));
}

nlohmann::json to_json(GeneralizedCartanMatrix const &gcm)
{
	nlohmann::json rows = nlohmann::json::array();
	for (Index i = 0; i < gcm.size(); ++i)
	{
		nlohmann::json row = nlohmann::json::array();
		for (Index k = 0; k < gcm.size(); ++k)
			row.push_back(gcm(i, k));
		rows.push_back(row);
	}
	return {{"matrix", rows}, {"labels", gcm.labels()}};
}

nlohmann::json to_json(GcmType const &type, GeneralizedCartanMatrix const &gcm)
{
	nlohmann::json blocks = nlohmann::json::array();
	for (auto const &b : type.blocks)
	{
		std::vector<std::string> labels;
		for (auto i : b.indices)
			labels.push_back(gcm.label(i));
		blocks.push_back({{"labels", labels}, {"type", std::string(to_string(b.type))}});
	}
	nlohmann::json out = {{"blocks", blocks}, {"indecomposable", type.indecomposable()}};
	if (type.indecomposable())
		out["type"] = std::string(to_string(type.single()));
	return out;
}

} // namespace kmp
