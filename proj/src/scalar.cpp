#include "wq/scalar.hpp"

#include <cctype>
#include <ostream>

namespace wq {

namespace {

std::string rat_str(const Rational& r) { return r.get_str(); }

// Accepts INT or INT "/" POSINT. Throws on anything else.
Rational parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    bool seen_slash = false;
    for (std::size_t k = pos; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (seen_slash || k + 1 == s.size())
                throw std::invalid_argument("bad rational literal: '" + s + "'");
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
    Rational r;
    const std::string body = s[0] == '+' ? s.substr(1) : s;
    if (r.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat_str(im_) + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rat_str(re_) + "+" + imag;
    return rat_str(re_) + imag;  // imag already carries the '-'
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.str(); }

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    // Split at the last '+'/'-' that is not the leading sign; that separates
    // the real part from an imaginary tail, if any.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }

    auto parse_imag = [](std::string part) -> Rational {
        // part ends with 'i'; the coefficient may be empty or a signed RAT
        part.pop_back();
        if (part.empty() || part == "+") return Rational(1);
        if (part == "-") return Rational(-1);
        return parse_rat(part);
    };

    if (s.back() == 'i') {
        if (split == std::string::npos) return {Rational(0), parse_imag(s)};
        std::string head = s.substr(0, split);
        std::string tail = s.substr(split);  // keeps the sign
        return {parse_rat(head), parse_imag(tail)};
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
        throw std::invalid_argument("bad scalar literal: '" + text + "'");
    return {parse_rat(s), Rational(0)};
}

std::optional<Rational> exact_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    const mpz_class& num = v.get_num();
    const mpz_class& den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& v) {
    // (a+bi)^2 = c+di  <=>  a^2-b^2 = c, 2ab = d.
    const Rational& c = v.re();
    const Rational& d = v.im();
    if (d == 0) {
        if (c >= 0) {
            auto r = exact_sqrt(c);
            if (!r) return std::nullopt;
            return GaussianRational(*r);
        }
        auto r = exact_sqrt(Rational(-c));
        if (!r) return std::nullopt;
        return GaussianRational(Rational(0), *r);
    }
    // |v| = sqrt(c^2+d^2) must be rational, then a^2 = (c+|v|)/2.
    auto t = exact_sqrt(Rational(c * c + d * d));
    if (!t) return std::nullopt;
    auto a2 = Rational((c + *t) / 2);
    auto a = exact_sqrt(a2);
    if (!a || *a == 0) return std::nullopt;
    Rational b = d / (2 * (*a));
    GaussianRational root(*a, b);
    if (!(root * root == v)) return std::nullopt;
    if (GaussianRational::cmp(root, -root) < 0) root = -root;
    return root;
}

}  // namespace wq
