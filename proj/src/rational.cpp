#include "sylv/rational.hpp"

#include <ostream>

namespace sylv {

Rat::Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DomainError("exact division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int parse_int(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer token");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw ParseError("sign without digits: '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw ParseError("invalid integer token: '" + text + "'");
    // mpz rejects a leading '+'.
    return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '+' || den_text[0] == '-')
        throw ParseError("denominator must be an unsigned positive integer: '" + text + "'");
    const Int den = parse_int(den_text);
    if (sgn(den) <= 0) throw ParseError("denominator must be positive: '" + text + "'");
    return Rat(num, den);
}

Rat pow(const Rat& base, unsigned long e) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rat(num, den);
}

std::size_t bit_length(const Int& n) {
    if (sgn(n) == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::size_t bit_length(const Rat& r) {
    const std::size_t a = bit_length(r.num());
    const std::size_t b = bit_length(r.den());
    return a > b ? a : b;
}

}  // namespace sylv
