#pragma once

#include "fgl/multipoly.hpp"

namespace fgl {

/// One genus value, indexed by its generator (Theta_n or CP^n).
struct GenusRow
{
	std::string generator; // e.g. "Theta2", "CP4"
	int index = 0;
	MultiPoly value;
};

/// Ordered list of genus values with coefficient-ring metadata.
struct GenusTable
{
	std::string genus; // "bc-theta", "bc-cp", "krichever", "witten"
	RingPtr coefficient_ring;
	std::vector<GenusRow> rows;

	const MultiPoly &value_of(int index) const
	{
		for (const auto &r : rows)
			if (r.index == index)
				return r.value;
		throw std::out_of_range("genus table has no index " +
		                        std::to_string(index));
	}
	bool has_index(int index) const
	{
		for (const auto &r : rows)
			if (r.index == index)
				return true;
		return false;
	}
};

} // namespace fgl
