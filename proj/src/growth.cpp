#include "fpt/growth.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

// ceil with a relative snap to the nearest integer, so representation noise
// in c, b (e.g. the double closest to 0.1) cannot bump an exact boundary.
std::uint64_t ceil_snap(long double x) {
    if (!(x > 0)) return 1;
    const long double r = std::roundl(x);
    if (std::fabs(x - r) <= 1e-9L * std::max<long double>(1.0L, std::fabs(x))) x = r;
    const long double c = std::ceil(x);
    if (c >= 9.223372036854775e18L) throw SizeError("growth value exceeds 64-bit range");
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c));
}

// exact ceil(base^e) with base taken bit-exactly from its double value
BigInt exact_pow_ceil(double base, std::uint64_t e) {
    if (e > 100000) throw SizeError("exact exponential growth value requested at index > 1e5");
    const Rational b(base);
    const Rational p = rational_pow(b, static_cast<unsigned long>(e));
    BigInt num = boost::multiprecision::numerator(p);
    BigInt den = boost::multiprecision::denominator(p);
    BigInt q = num / den;
    if (q * den != num) ++q;  // positive values only, so this is ceil
    if (q < 1) q = 1;
    return q;
}

std::uint64_t checked_u64(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw SizeError("growth value exceeds 64-bit range");
    return v.convert_to<std::uint64_t>();
}

}  // namespace

GrowthFunction::GrowthFunction(std::vector<std::uint64_t> prefix, GrowthTail tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    using K = GrowthTail::Kind;
    switch (tail_.kind) {
        case K::None:
            break;
        case K::Constant:
            if (tail_.constant_value < 1) throw ContractError("constant tail value must be >= 1");
            break;
        case K::Polynomial:
            if (!(tail_.poly_degree >= 0)) throw ContractError("polynomial tail degree must be >= 0");
            if (!(tail_.poly_scale > 0)) throw ContractError("polynomial tail scale must be > 0");
            break;
        case K::Exponential:
            if (!(tail_.exp_base > 0)) throw ContractError("exponential tail base must be > 0");
            break;
        case K::Alternating:
            if (tail_.alt_low < 1) throw ContractError("alternating tail low value must be >= 1");
            if (!(tail_.alt_base > 1))
                throw ContractError("alternating tail base must be > 1 (otherwise use a table)");
            break;
    }
    if (prefix_.empty()) {
        if (table_only()) throw ContractError("growth function needs a nonempty prefix or a tail rule");
        prefix_.push_back(value(1));  // seed f(1) from the tail formula
    }
    for (std::size_t i = 0; i < prefix_.size(); ++i)
        if (prefix_[i] < 1)
            throw ContractError("growth prefix entry " + std::to_string(i + 1) + " must be >= 1");
}

std::optional<std::uint64_t> GrowthFunction::max_index() const {
    if (table_only()) return prefix_.size();
    return std::nullopt;
}

std::uint64_t GrowthFunction::value(std::uint64_t n) const {
    if (n == 0) throw ContractError("growth index starts at 1");
    if (n <= prefix_.size()) return prefix_[n - 1];
    using K = GrowthTail::Kind;
    switch (tail_.kind) {
        case K::None:
            throw TableHorizonError("growth table has " + std::to_string(prefix_.size()) +
                                    " entries, index " + std::to_string(n) + " requested");
        case K::Constant:
            return tail_.constant_value;
        case K::Polynomial:
            return ceil_snap(tail_.poly_scale *
                             std::pow(static_cast<long double>(n), tail_.poly_degree));
        case K::Exponential: {
            const double lb = std::log2(tail_.exp_base);
            if (static_cast<double>(n) * lb > 63.9)
                throw SizeError("growth value exceeds 64-bit range at index " + std::to_string(n));
            return checked_u64(exact_pow_ceil(tail_.exp_base, n));
        }
        case K::Alternating: {
            if (n % 2 == 1) return tail_.alt_low;
            const std::uint64_t half = n / 2;
            if (static_cast<double>(half) * std::log2(tail_.alt_base) > 63.9)
                throw SizeError("growth value exceeds 64-bit range at index " + std::to_string(n));
            return checked_u64(exact_pow_ceil(tail_.alt_base, half));
        }
    }
    throw ContractError("unreachable growth tail kind");
}

BigInt GrowthFunction::value_int(std::uint64_t n) const {
    if (n == 0) throw ContractError("growth index starts at 1");
    if (n <= prefix_.size()) return BigInt(prefix_[n - 1]);
    using K = GrowthTail::Kind;
    switch (tail_.kind) {
        case K::None:
            throw TableHorizonError("growth table has " + std::to_string(prefix_.size()) +
                                    " entries, index " + std::to_string(n) + " requested");
        case K::Constant:
            return BigInt(tail_.constant_value);
        case K::Polynomial:
            return BigInt(value(n));  // 64-bit route; genuinely larger values are out of scope
        case K::Exponential:
            return exact_pow_ceil(tail_.exp_base, n);
        case K::Alternating:
            return n % 2 == 1 ? BigInt(tail_.alt_low) : exact_pow_ceil(tail_.alt_base, n / 2);
    }
    throw ContractError("unreachable growth tail kind");
}

double GrowthFunction::log_value(std::uint64_t n) const {
    if (n == 0) throw ContractError("growth index starts at 1");
    if (n <= prefix_.size()) return std::log(static_cast<double>(prefix_[n - 1]));
    using K = GrowthTail::Kind;
    switch (tail_.kind) {
        case K::None:
            throw TableHorizonError("growth table has " + std::to_string(prefix_.size()) +
                                    " entries, index " + std::to_string(n) + " requested");
        case K::Constant:
            return std::log(static_cast<double>(tail_.constant_value));
        case K::Polynomial: {
            const double est = std::log(tail_.poly_scale) +
                               tail_.poly_degree * std::log(static_cast<double>(n));
            if (est > 36.0) return est;  // beyond 2^52: ceil indistinguishable in double
            return std::log(static_cast<double>(value(n)));
        }
        case K::Exponential: {
            const double est = static_cast<double>(n) * std::log(tail_.exp_base);
            if (est > 36.0 || est < -1e-12) return std::max(0.0, est);
            return std::log(static_cast<double>(value(n)));
        }
        case K::Alternating: {
            if (n % 2 == 1) return std::log(static_cast<double>(tail_.alt_low));
            const double est = static_cast<double>(n / 2) * std::log(tail_.alt_base);
            if (est > 36.0) return est;
            return std::log(static_cast<double>(value(n)));
        }
    }
    throw ContractError("unreachable growth tail kind");
}

std::optional<double> GrowthFunction::constant_tail_log_slope() const {
    using K = GrowthTail::Kind;
    switch (tail_.kind) {
        case K::Constant:
            return std::log(static_cast<double>(tail_.constant_value));
        case K::Polynomial:
            if (tail_.poly_degree == 0)
                return std::log(static_cast<double>(ceil_snap(tail_.poly_scale)));
            return std::nullopt;
        case K::Exponential:
            if (tail_.exp_base <= 1) return 0.0;  // ceil(b^n) = 1 from the prefix end on
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::string GrowthFunction::describe() const {
    std::ostringstream os;
    using K = GrowthTail::Kind;
    switch (tail_.kind) {
        case K::None: {
            os << "table:";
            for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i ? "," : "") << prefix_[i];
            return os.str();
        }
        case K::Constant:
            os << "const:" << tail_.constant_value;
            break;
        case K::Polynomial:
            os << "poly:" << tail_.poly_degree;
            if (tail_.poly_scale != 1) os << "," << tail_.poly_scale;
            break;
        case K::Exponential:
            os << "exp:" << tail_.exp_base;
            break;
        case K::Alternating:
            os << "alt:" << tail_.alt_low << "," << tail_.alt_base;
            break;
    }
    if (prefix_.size() > 1 || (prefix_.size() == 1 && prefix_[0] != value_int(1))) {
        // prefix that genuinely overrides the formula; spell it out
        os << ";prefix=";
        for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i ? "," : "") << prefix_[i];
    }
    return os.str();
}

GrowthFunction GrowthFunction::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("growth spec '" + text + "' needs kind:args (table|const|poly|exp|alt)");
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);

    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            out.push_back(s.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return out;
    };
    auto to_u64 = [&](const std::string& s) -> std::uint64_t {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw ParseError("growth spec '" + text + "': bad integer '" + s + "'");
        }
    };
    auto to_dbl = [&](std::string s) -> double {
        // alt:1,2^n spelling: the ^n suffix marks the base of the even-index power
        if (s.size() > 2 && s.compare(s.size() - 2, 2, "^n") == 0) s.resize(s.size() - 2);
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw ParseError("growth spec '" + text + "': bad number '" + s + "'");
        }
    };

    const auto parts = split(args);
    if (kind == "table") {
        std::vector<std::uint64_t> table;
        table.reserve(parts.size());
        for (const auto& p : parts) table.push_back(to_u64(p));
        return GrowthFunction(std::move(table));
    }
    GrowthTail tail;
    if (kind == "const") {
        if (parts.size() != 1) throw ParseError("const tail takes one value: const:V");
        tail.kind = GrowthTail::Kind::Constant;
        tail.constant_value = to_u64(parts[0]);
    } else if (kind == "poly") {
        if (parts.empty() || parts.size() > 2)
            throw ParseError("poly tail takes degree and optional scale: poly:D[,C]");
        tail.kind = GrowthTail::Kind::Polynomial;
        tail.poly_degree = to_dbl(parts[0]);
        tail.poly_scale = parts.size() == 2 ? to_dbl(parts[1]) : 1.0;
    } else if (kind == "exp") {
        if (parts.size() != 1) throw ParseError("exp tail takes one base: exp:B");
        tail.kind = GrowthTail::Kind::Exponential;
        tail.exp_base = to_dbl(parts[0]);
    } else if (kind == "alt") {
        if (parts.size() != 2) throw ParseError("alt tail takes low value and base: alt:V,B");
        tail.kind = GrowthTail::Kind::Alternating;
        tail.alt_low = to_u64(parts[0]);
        tail.alt_base = to_dbl(parts[1]);
    } else {
        throw ParseError("unknown growth kind '" + kind + "' (table|const|poly|exp|alt)");
    }
    return GrowthFunction({}, tail);
}

}  // namespace fpt
