#include "pappus/field.hpp"

#include <charconv>
#include <cstdio>

namespace pappus {

std::string FieldTraits<Real>::to_string(Real a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

std::string FieldTraits<Complex>::to_string(const Complex& a) {
    return FieldTraits<Real>::to_string(a.real()) + (a.imag() < 0 ? "-" : "+") +
           FieldTraits<Real>::to_string(std::abs(a.imag())) + "i";
}

template <>
Real parse_scalar<Real>(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return Rational::parse(text).to_double();
    Real value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ArgumentError("not a real number: '" + std::string(text) + "'");
    return value;
}

} // namespace pappus
