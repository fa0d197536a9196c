#include "zcheb/asc.hpp"

#include <charconv>
#include <system_error>

namespace zcheb {

std::string AscRecord::line() const {
    return std::to_string(index.n) + " " + std::to_string(index.m) + " " + std::to_string(index.i) + " " + float_repr
           + " " + exact_repr;
}

std::string shortest_decimal(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::system_error(std::make_error_code(ec), "shortest_decimal");
    return std::string(buf, end);
}

AscRecord make_asc_record(const CouplingIndex& idx, const Rational& value) {
    return {idx, shortest_decimal(value.to_double()), value.str()};
}

bool write_asc(const CouplingTable& table, std::ostream& os) {
    table.for_each([&](const CouplingIndex& idx, const Rational& v) {
        if (os) os << make_asc_record(idx, v).line() << '\n';
    });
    os.flush();
    return static_cast<bool>(os);
}

}  // namespace zcheb
