#include "nullcone/gaussian_rational.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace nullcone {

namespace {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') continue;
        if (c == '-' && k == 0) continue;
        throw ParseError("invalid character '" + std::string(1, c) + "' in rational literal '" +
                         text + "'");
    }
    try {
        Rational q(text);
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + text + "'");
    }
}

// One additive term: either a pure rational or a rational multiple of i.
struct Term {
    Rational value;
    bool imaginary = false;
};

Term parse_term(std::string text) {
    Term term;
    if (!text.empty() && (text.back() == 'i' || text.back() == 'I')) {
        term.imaginary = true;
        text.pop_back();
        if (!text.empty() && text.back() == '*') text.pop_back();
        if (text.empty() || text == "-") {
            term.value = Rational(text == "-" ? -1 : 1);
            return term;
        }
    }
    term.value = parse_rational(text);
    return term;
}

} // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty scalar");

    // Split into additive terms at '+'/'-' that are not leading signs.
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos = 1; pos < s.size(); ++pos) {
        if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '/' && s[pos - 1] != '*' &&
            s[pos - 1] != '+' && s[pos - 1] != '-') {
            parts.push_back(s.substr(start, pos - start));
            start = pos;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw ParseError("too many terms in scalar '" + text + "'");

    Rational re(0), im(0);
    bool saw_re = false, saw_im = false;
    for (auto& part : parts) {
        std::string body = part;
        bool negative = false;
        if (body[0] == '+' || body[0] == '-') {
            negative = body[0] == '-';
            body.erase(body.begin());
        }
        if (body.empty()) throw ParseError("dangling sign in scalar '" + text + "'");
        if (body[0] == '+' || body[0] == '-') {
            throw ParseError("doubled sign in scalar '" + text + "'");
        }
        Term term = parse_term(body);
        if (negative) term.value = -term.value;
        if (term.imaginary) {
            if (saw_im) throw ParseError("two imaginary terms in scalar '" + text + "'");
            im = term.value;
            saw_im = true;
        } else {
            if (saw_re) throw ParseError("two real terms in scalar '" + text + "'");
            re = term.value;
            saw_re = true;
        }
    }
    return {re, im};
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rational_str(re_);
    if (im_ != 0) {
        Rational a = abs(im_);
        if (im_ < 0) {
            out += "-";
        } else if (re_ != 0) {
            out += "+";
        }
        if (a != 1) {
            out += rational_str(a);
            out += "*";
        }
        out += "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

bool sqrt_exact(const Rational& value, Rational& root) {
    if (value < 0) return false;
    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

} // namespace nullcone
