#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msym {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need; every
// identity in this library is an equality test on these.
using Rational = mpq_class;

// Thrown for malformed or mismatched inputs (dimensions, degrees,
// variances, unparsable text). The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a caller-supplied object violates a documented contract
// (e.g. a Hamiltonian pair that does not satisfy its defining equation).
// The CLI maps this to exit code 3.
class contract_violation : public std::runtime_error {
public:
    explicit contract_violation(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rational_of(long num, long den = 1)
{
    if (den == 0) throw input_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". No floating point literals.
inline std::optional<Rational> parse_rational(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(text);
            return Rational(num);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

// A point of the coordinate patch; length must match the dim of whatever
// it is evaluated against.
using Point = std::vector<Rational>;

inline Point parse_point(const std::string& text)
{
    Point p;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        // trim spaces
        std::size_t b = piece.find_first_not_of(" \t");
        std::size_t e = piece.find_last_not_of(" \t");
        if (b == std::string::npos) throw input_error("empty coordinate in point");
        auto r = parse_rational(piece.substr(b, e - b + 1));
        if (!r) throw input_error("bad coordinate '" + piece + "' in point");
        p.push_back(*r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return p;
}

} // namespace msym
