#pragma once

#include <vector>

#include "zcheb/rational.hpp"

namespace zcheb {

/// Parameters of pFq(upper; lower; 1).
struct PfqParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
};

/// Number of the last nonzero term: min(-a) over the non-positive integer upper
/// parameters a. Throws std::domain_error if none exists (series does not terminate).
long termination_index(const PfqParams& params);

/// Exact value of a terminating pFq at unit argument.
///
/// Summed through the term ratio
///   t_{s+1} / t_s = prod(a_j + s) / (prod(b_j + s) * (s + 1)),
/// stopping at termination_index(params). Throws std::domain_error when a lower
/// parameter produces a zero factor before the series terminates.
Rational pfq_terminating(const PfqParams& params);

}  // namespace zcheb
