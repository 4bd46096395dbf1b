#include "mensura/rational.hpp"

#include <cstdlib>

namespace mensura {

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t pos = 0;
    const std::int64_t n = std::stoll(text.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? text.size() : slash))
        throw std::invalid_argument("malformed rational: " + text);
    if (slash == std::string::npos) return Rational(n);
    const std::int64_t d = std::stoll(text.substr(slash + 1), &pos);
    if (pos != text.size() - slash - 1)
        throw std::invalid_argument("malformed rational: " + text);
    return Rational(n, d);
}

Rational Rational::pow(std::int64_t e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return Rational(den_, num_).pow(-e);
    Rational base = *this;
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace mensura
