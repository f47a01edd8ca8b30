#include "syzlab/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace syzlab {

namespace {

// parsing works in a mixed-degree polynomial; homogeneity is checked at the end
using RawPoly = std::map<Mono, Rational, MonoCmp>;

RawPoly raw_zero() { return {}; }

void raw_add(RawPoly& p, Mono m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

RawPoly raw_addp(const RawPoly& a, const RawPoly& b, int sign) {
    RawPoly out = a;
    for (const auto& [m, c] : b) raw_add(out, m, sign < 0 ? -c : c);
    return out;
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
    RawPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) raw_add(out, {ma.i + mb.i, ma.j + mb.j, ma.k + mb.k}, ca * cb);
    return out;
}

RawPoly raw_pow(const RawPoly& a, long e) {
    RawPoly out;
    raw_add(out, {0, 0, 0}, Rational(1));
    for (long i = 0; i < e; ++i) out = raw_mul(out, a);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    HPoly run() {
        RawPoly p = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected input");
        if (p.empty()) return HPoly(0);
        int degree = p.begin()->first.degree();
        for (const auto& [m, c] : p)
            if (m.degree() != degree)
                throw ParseError("polynomial is not homogeneous (degrees " +
                                     std::to_string(degree) + " and " + std::to_string(m.degree()) + ")",
                                 pos_);
        HPoly out(degree);
        for (const auto& [m, c] : p) out.add_term(m, c);
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' ||
               c == 'z';
    }

    RawPoly parse_expr() {
        bool negate = consume('-');
        RawPoly acc = parse_term();
        if (negate) acc = raw_addp(raw_zero(), acc, -1);
        while (true) {
            if (consume('+'))
                acc = raw_addp(acc, parse_term(), +1);
            else if (consume('-'))
                acc = raw_addp(acc, parse_term(), -1);
            else
                break;
        }
        return acc;
    }

    RawPoly parse_term() {
        RawPoly acc = parse_factor();
        while (true) {
            if (consume('*')) {
                acc = raw_mul(acc, parse_factor());
            } else if (at_factor_start()) {
                acc = raw_mul(acc, parse_factor());  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    RawPoly parse_factor() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected a factor");
        RawPoly base;
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            base = parse_expr();
            if (!consume(')')) fail("expected ')'");
        } else if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            Mono m;
            (c == 'x' ? m.i : c == 'y' ? m.j : m.k) = 1;
            raw_add(base, m, Rational(1));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            raw_add(base, {0, 0, 0}, parse_rational());
        } else {
            fail("expected a factor");
        }
        while (peek_is('^')) {
            ++pos_;
            long e = parse_nat();
            base = raw_pow(base, e);
        }
        return base;
    }

    long parse_nat() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an exponent");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    Rational parse_rational() {
        std::string digits = parse_digits();
        // '/' continues a rational literal only when digits follow
        if (pos_ < src_.size() && src_[pos_] == '/' && pos_ + 1 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            ++pos_;
            std::string den = parse_digits();
            return Rational(mpz_class(digits), mpz_class(den));
        }
        return Rational(mpz_class(digits), mpz_class(1));
    }

    std::string parse_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            out.push_back(src_[pos_++]);
        return out;
    }

    const std::string& src_;
    size_t pos_ = 0;
};

void print_mono(std::ostringstream& os, const Mono& m, bool leading_coeff_one) {
    bool first = leading_coeff_one;
    auto emit = [&](char v, int e) {
        if (e == 0) return;
        if (!first) os << "*";
        first = false;
        os << v;
        if (e > 1) os << "^" << e;
    };
    emit('x', m.i);
    emit('y', m.j);
    emit('z', m.k);
}

}  // namespace

HPoly parse_poly(const std::string& src) { return Parser(src).run(); }

std::string print_poly(const HPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool unit = a.is_one() && m.degree() > 0;
        if (!unit) os << a.str();
        print_mono(os, m, unit);
        first = false;
    }
    return os.str();
}

std::vector<HPoly> parse_curve_components(const std::string& text) {
    std::vector<HPoly> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        try {
            out.push_back(parse_poly(line));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")",
                             e.position());
        }
    }
    return out;
}

}  // namespace syzlab
