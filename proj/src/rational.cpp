#include "tribell/rational.hpp"

namespace tribell {

Rational rat(long num, long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Int parse_int(std::string_view text) {
    if (text.empty()) throw parse_error("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw parse_error("sign without digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw parse_error("invalid integer literal: " + std::string(text));
    }
    return Int(std::string(text), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw parse_error("rational literal with zero denominator: " + std::string(text));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_string(const Int& value) {
    return value.get_str();
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

Int to_int(const Rational& value) {
    if (!is_integer(value)) throw domain_error("non-integer rational: " + to_string(value));
    return value.get_num();
}

Int pow_int(const Int& value, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), value.get_mpz_t(), exp);
    return out;
}

Rational pow_rational(const Rational& value, long exp) {
    if (exp == 0) return Rational(1);
    bool invert = exp < 0;
    unsigned long mag = invert ? -static_cast<unsigned long>(exp) : static_cast<unsigned long>(exp);
    if (invert && value == 0) throw domain_error("negative power of zero");
    Int num = pow_int(Int(value.get_num()), mag);
    Int den = pow_int(Int(value.get_den()), mag);
    // num/den is already reduced because value was; a negative denominator
    // cannot arise since value's denominator is positive.
    Rational out = invert ? Rational(den, num) : Rational(num, den);
    out.canonicalize();
    return out;
}

Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace tribell
