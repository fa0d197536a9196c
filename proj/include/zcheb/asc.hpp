#pragma once

// Line-oriented coefficient table: "n m i float exact", one index per line,
// ordered by n, then m, then i.

#include <ostream>
#include <string>

#include "zcheb/coupling.hpp"

namespace zcheb {

struct AscRecord {
    CouplingIndex index;
    std::string float_repr;  // shortest decimal that round-trips to the nearest double
    std::string exact_repr;  // "p/q", or "p" when q == 1

    std::string line() const;
};

/// Shortest decimal string that parses back to exactly this double.
std::string shortest_decimal(double value);

AscRecord make_asc_record(const CouplingIndex& idx, const Rational& value);

/// Writes every table entry; returns false if the stream went bad.
bool write_asc(const CouplingTable& table, std::ostream& os);

}  // namespace zcheb
