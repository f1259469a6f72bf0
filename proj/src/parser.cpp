#include "nqm/parser.hpp"

#include <cctype>

namespace nqm {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    KElement parse() {
        KElement e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool consume_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        // Reject prefixes of longer identifiers ("gamx" etc.).
        const size_t end = pos_ + w.size();
        if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    Integer parse_int() {
        skip_ws();
        const size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail("expected integer");
        }
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        Integer v(digits);
        return neg ? Integer(-v) : v;
    }

    int parse_small_int() {
        Integer v = parse_int();
        if (!v.fits_sint_p()) fail("integer out of range");
        return static_cast<int>(v.get_si());
    }

    Rational parse_rational() {
        Integer num = parse_int();
        if (consume('/')) {
            Integer den = parse_int();
            if (den == 0) fail("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    // int | (int) | (int/2): the value in exponent half-steps.
    int parse_exponent_half() {
        if (consume('(')) {
            const int numerator = parse_small_int();
            int half = 2 * numerator;
            if (consume('/')) {
                const int den = parse_small_int();
                if (den != 2) fail("exponent denominator must be 2");
                half = numerator;
            }
            expect(')');
            return half;
        }
        return 2 * parse_small_int();
    }

    KElement parse_sum() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        KElement acc = parse_product();
        if (neg) acc = Scalar(-1) * acc;
        while (true) {
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                KElement t = parse_product();
                if (c == '+')
                    acc += t;
                else
                    acc -= t;
            } else {
                break;
            }
        }
        return acc;
    }

    KElement parse_product() {
        KElement acc = parse_factor();
        while (consume('*')) acc = acc * parse_factor();
        return acc;
    }

    KElement parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar(parse_rational()) * KElement::unit();
        if (consume_word("xm")) {
            expect('(');
            const int n = parse_small_int();
            expect(')');
            return KElement::gen(KGen::x_minus(n));
        }
        if (consume_word("Wpsi")) {
            expect('(');
            const int k = parse_small_int();
            expect(')');
            return KElement::gen(KGen::omega_psi(k));
        }
        if (consume_word("gam")) {
            if (consume('^'))
                return Scalar::gamma_pow_half(parse_exponent_half()) * KElement::unit();
            expect('(');
            const int h = parse_small_int();
            expect('/');
            const int den = parse_small_int();
            if (den != 2) fail("gamma factor denominator must be 2");
            expect(')');
            return KElement::gen(KGen::gamma_half(h));
        }
        if (consume_word("q")) {
            expect('^');
            return Scalar::q_pow_half(parse_exponent_half()) * KElement::unit();
        }
        if (consume('(')) {
            KElement inner = parse_sum();
            expect(')');
            return inner;
        }
        fail("expected factor");
    }
};

}  // namespace

KElement parse_kelement(std::string_view text) { return Parser(text).parse(); }

Element parse_element(std::string_view text) {
    const KElement k = parse_kelement(text);
    Element out;
    for (const auto& [word, c] : k.terms()) {
        Scalar coeff = c;
        Monomial modes;
        for (const auto& g : word) {
            switch (g.kind) {
                case KGen::Kind::XMinus:
                    modes.push_back(g.idx);
                    break;
                case KGen::Kind::GammaHalf:
                    coeff *= Scalar::gamma_pow_half(g.idx);
                    break;
                case KGen::Kind::OmegaPsi:
                    throw std::domain_error("Wpsi is not an element of the module algebra");
            }
        }
        out += coeff * normal_form(modes);
    }
    return out;
}

}  // namespace nqm
