#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sodcheck/equicore.hpp"

namespace sodcheck {

/// Number of monomials of total degree `a` whose weight (sum of exponent times
/// coordinate weight) equals `c`. Zero for a < 0.
std::uint64_t count_monomials(const WeightedSpace& space, long long a, Character c);

/// H^*(O(k) (x) chi^c) on the weighted projective space. Only degrees 0 and dim() can be nonzero.
ExtTable cohomology_projective(const WeightedSpace& space, long long k, Character c);

/// H^*(O_X(k) (x) chi^c) on the hypersurface X of degree d in P^{m+n-1}. Requires m + n >= 3.
ExtTable cohomology_hypersurface(const Config& cfg, long long k, Character c);

/// True iff every sample satisfies h^i(O_X(k)chi^c)^inv == h^{dim-i}(S(O_X(k)chi^c)^vee)^inv.
bool serre_check(const Config& cfg, const std::vector<std::pair<long long, long long>>& samples);

}  // namespace sodcheck
