#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpt/rational.hpp"

namespace fpt {

// Symbolic rule for values beyond the explicit prefix. Formulas are in the
// global index n (the prefix overrides them for n <= prefix size):
//   Constant     f(n) = v
//   Polynomial   f(n) = ceil(c * n^d),        d >= 0, c > 0
//   Exponential  f(n) = ceil(b^n),            b > 0
//   Alternating  f(n) = v for odd n, ceil(b^(n/2)) for even n,  b > 1
struct GrowthTail {
    enum class Kind { None, Constant, Polynomial, Exponential, Alternating };
    Kind kind = Kind::None;
    std::uint64_t constant_value = 1;
    double poly_degree = 0;
    double poly_scale = 1;
    double exp_base = 1;
    std::uint64_t alt_low = 1;
    double alt_base = 2;
};

// Offspring-count sequence f(1), f(2), ... of a spherically symmetric tree:
// integer values >= 1, given as an explicit prefix plus an optional tail rule.
// Table-only functions are undefined beyond their table and say so loudly.
class GrowthFunction {
  public:
    GrowthFunction(std::vector<std::uint64_t> prefix, GrowthTail tail = {});

    // Mini-language:  table:1,2,3 | const:V | poly:D[,C] | exp:B | alt:V,B
    // (alt also accepts the B^n spelling for the base). For tail forms the
    // prefix is seeded with f(1) from the formula.
    static GrowthFunction parse(const std::string& text);

    bool table_only() const { return tail_.kind == GrowthTail::Kind::None; }
    const GrowthTail& tail() const { return tail_; }
    const std::vector<std::uint64_t>& prefix() const { return prefix_; }

    // Largest index with a defined value: prefix size for table-only,
    // unbounded otherwise.
    std::optional<std::uint64_t> max_index() const;

    // Exact value. Throws TableHorizonError beyond a table,
    // SizeError when the exact value cannot be represented (u64 overflow).
    std::uint64_t value(std::uint64_t n) const;

    // Exact value without the 64-bit ceiling; exponential and alternating
    // tails are evaluated as exact rational powers of the (bit-exact) base.
    BigInt value_int(std::uint64_t n) const;

    // ln f(n); exact where f(n) is representable, asymptotic formula beyond.
    // Defined for all n a tail covers, any n up to the table otherwise.
    double log_value(std::uint64_t n) const;

    // When the tail's log increments are exactly constant from some point on
    // (constant tail, polynomial of degree 0, exponential base <= 1), returns
    // that per-index slope; the increments hold for all n > prefix size.
    std::optional<double> constant_tail_log_slope() const;

    std::string describe() const;  // round-trippable mini-language form

  private:
    std::vector<std::uint64_t> prefix_;
    GrowthTail tail_;
};

}  // namespace fpt
