#pragma once

#include <functional>
#include <vector>

namespace fgl {

/// Enumerates multisets of `count` nonnegative integers with the given sum
/// (weakly decreasing) and the number of distinct orderings of each.
inline void for_each_multiset(unsigned sum, unsigned count,
                              const std::function<void(
                                  const std::vector<unsigned> &parts,
                                  unsigned long arrangements)> &fn)
{
	std::vector<unsigned> parts(count);
	auto factorial_small = [](unsigned n)
	{
		unsigned long r = 1;
		for (unsigned i = 2; i <= n; ++i)
			r *= i;
		return r;
	};
	std::function<void(unsigned, unsigned, unsigned)> rec =
	    [&](unsigned pos, unsigned rest, unsigned cap)
	{
		if (pos == count)
		{
			if (rest != 0)
				return;
			unsigned long arr = factorial_small(count);
			unsigned run = 1;
			for (unsigned i = 1; i < count; ++i)
			{
				if (parts[i] == parts[i - 1])
					++run;
				else
				{
					arr /= factorial_small(run);
					run = 1;
				}
			}
			arr /= factorial_small(run);
			fn(parts, arr);
			return;
		}
		unsigned hi = std::min(rest, cap);
		for (unsigned p = hi + 1; p-- > 0;)
		{
			parts[pos] = p;
			rec(pos + 1, rest - p, p);
			if (p == 0)
				break;
		}
	};
	rec(0, sum, sum);
}

/// Integer partitions of n (weakly decreasing positive parts).
inline std::vector<std::vector<int>> partitions_of(int n)
{
	std::vector<std::vector<int>> out;
	std::vector<int> cur;
	std::function<void(int, int)> rec = [&](int rest, int cap)
	{
		if (rest == 0)
		{
			out.push_back(cur);
			return;
		}
		for (int p = std::min(rest, cap); p >= 1; --p)
		{
			cur.push_back(p);
			rec(rest - p, p);
			cur.pop_back();
		}
	};
	rec(n, n);
	return out;
}

} // namespace fgl
