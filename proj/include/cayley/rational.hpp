#pragma once

// Exact rational scalars. All arithmetic in the library is carried out over Q.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

/// Always reduced, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational::backend_type,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int::backend_type,
                                              boost::multiprecision::et_off>;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string &what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

    [[nodiscard]] std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

inline bool is_zero(const Rational &q) { return q.is_zero(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &q) {
    const Integer &num = boost::multiprecision::numerator(q);
    const Integer &den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "[-]digits[/digits]". The denominator must be positive.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == start)
            throw parse_error("expected digits in rational '" + std::string(text) + "'", start);
        return j;
    };
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t end = digits(i);
    Integer num(std::string(text.substr(i, end - i)));
    Integer den = 1;
    if (end < text.size()) {
        if (text[end] != '/')
            throw parse_error("unexpected character in rational '" + std::string(text) + "'", end);
        std::size_t dstart = end + 1;
        std::size_t dend = digits(dstart);
        if (dend != text.size())
            throw parse_error("trailing characters in rational '" + std::string(text) + "'", dend);
        den = Integer(std::string(text.substr(dstart, dend - dstart)));
        if (den == 0)
            throw parse_error("zero denominator", dstart);
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

} // namespace cayley
