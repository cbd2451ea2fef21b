#include "fpt/rational.hpp"

#include <cctype>
#include <sstream>

namespace fpt {

std::string to_fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.convert_to<double>();
    return os.str();
}

Rational parse_rational(const std::string& text, const std::string& where) {
    auto fail = [&](const std::string& why) -> Rational {
        throw ParseError("bad rational '" + text + "': " + why, where);
    };
    if (text.empty()) return fail("empty");
    const auto slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return fail("expected integer or p/q");
            return Rational(BigInt(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return fail("expected integer or p/q");
        BigInt d(den);
        if (d == 0) return fail("zero denominator");
        return Rational(BigInt(num), d);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

Rational rational_pow(const Rational& r, unsigned long e) {
    Rational acc(1);
    Rational base = r;
    while (e != 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

}  // namespace fpt
