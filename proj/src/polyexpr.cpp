#include "rankgeo/polyexpr.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace rankgeo {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError(what + " at position " + std::to_string(pos) +
                          " in \"" + s + "\"");
    }
    long long integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }
};

}  // namespace

LinearizedPoly parse_linearized(const std::string& text, FieldPtr ctx) {
    Cursor cur{text};
    auto result = zero_poly(ctx);
    bool first = true;
    while (true) {
        if (!first && !cur.eat('+')) break;
        first = false;

        // optional coefficient
        Fe coef = ctx->one();
        bool have_coef = false;
        const char c = cur.peek();
        if (c == 'g') {
            cur.eat('g');
            if (!cur.eat('^')) cur.fail("expected '^' after g");
            long long k = cur.integer();
            coef = ctx->pow(ctx->generator(), k);
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = cur.integer();
            Fe acc{0};
            for (long long i = 0; i < v % ctx->p(); ++i)
                acc = ctx->add(acc, ctx->one());
            coef = acc;
            have_coef = true;
        } else if (c == '[') {
            cur.eat('[');
            std::vector<int> digits;
            if (cur.peek() != ']') {
                digits.push_back(static_cast<int>(cur.integer()));
                while (cur.eat(',') || cur.peek() != ']')
                    digits.push_back(static_cast<int>(cur.integer()));
            }
            if (!cur.eat(']')) cur.fail("expected ']'");
            if (static_cast<int>(digits.size()) != ctx->degree())
                throw SyntaxError("digit list must have " +
                                  std::to_string(ctx->degree()) + " entries");
            for (int d : digits)
                if (d < 0 || d >= ctx->p())
                    throw SyntaxError("digit out of range [0, p)");
            coef = ctx->from_digits(digits);
            have_coef = true;
        }
        if (have_coef) {
            if (!cur.eat('*')) cur.fail("expected '*' after coefficient");
        }

        // variable
        if (!cur.eat('x')) {
            if (cur.done()) cur.fail("expected variable");
            throw UnknownSymbol("unexpected symbol '" +
                                std::string(1, cur.peek()) + "' in \"" + text +
                                "\"");
        }
        int exponent = 0;
        if (cur.eat('^')) {
            if (!cur.eat('q')) cur.fail("expected 'q' in x^q^i");
            if (!cur.eat('^')) cur.fail("expected '^' in x^q^i");
            long long i = cur.integer();
            if (i < 0 || i >= ctx->n())
                throw ExponentOutOfRange("q-exponent " + std::to_string(i) +
                                         " out of [0, n) with n = " +
                                         std::to_string(ctx->n()));
            exponent = static_cast<int>(i);
        }
        result.coeffs[exponent] =
            ctx->add(result.coeffs[exponent], coef);
    }
    if (!cur.done()) cur.fail("trailing input");
    return result;
}

std::string render_linearized(const LinearizedPoly& f) {
    const auto& ctx = *f.ctx;
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ctx.n(); ++i) {
        Fe c = f.coeffs[i];
        if (c.idx == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != ctx.one()) {
            os << "[";
            auto d = ctx.digits(c);
            for (std::size_t j = 0; j < d.size(); ++j)
                os << (j ? "," : "") << d[j];
            os << "]*";
        }
        os << (i == 0 ? "x" : "x^q^" + std::to_string(i));
    }
    if (first) return "0*x";
    return os.str();
}

namespace {

// q-polynomial expression parser: standard precedence with implicit
// multiplication before '(' and 'q'.
IntPolynomial qp_expr(Cursor& cur);

IntPolynomial qp_atom(Cursor& cur) {
    const char c = cur.peek();
    if (c == '(') {
        cur.eat('(');
        auto v = qp_expr(cur);
        if (!cur.eat(')')) cur.fail("expected ')'");
        return v;
    }
    if (c == 'q') {
        cur.eat('q');
        if (cur.eat('^')) {
            long long e = cur.integer();
            return IntPolynomial::q_power(static_cast<int>(e));
        }
        return IntPolynomial::q_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
        return IntPolynomial::constant(BigInt(cur.integer()));
    cur.fail("expected number, q or '('");
}

IntPolynomial qp_power(Cursor& cur) {
    auto base = qp_atom(cur);
    if (cur.eat('^')) {
        long long e = cur.integer();
        IntPolynomial acc = IntPolynomial::constant(1);
        for (long long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }
    return base;
}

IntPolynomial qp_product(Cursor& cur) {
    auto acc = qp_power(cur);
    while (true) {
        if (cur.eat('*')) {
            acc = acc * qp_power(cur);
        } else if (cur.eat('/')) {
            acc = IntPolynomial::exact_div(acc, qp_power(cur));
        } else {
            const char c = cur.peek();
            if (c == '(' || c == 'q') {
                acc = acc * qp_power(cur);  // juxtaposition
            } else {
                break;
            }
        }
    }
    return acc;
}

IntPolynomial qp_expr(Cursor& cur) {
    bool neg = false;
    if (cur.eat('-')) neg = true;
    auto acc = qp_product(cur);
    if (neg) acc = IntPolynomial() - acc;
    while (true) {
        if (cur.eat('+'))
            acc = acc + qp_product(cur);
        else if (cur.eat('-'))
            acc = acc - qp_product(cur);
        else
            break;
    }
    return acc;
}

}  // namespace

IntPolynomial parse_qpoly(const std::string& text) {
    Cursor cur{text};
    auto v = qp_expr(cur);
    if (!cur.done()) cur.fail("trailing input");
    return v;
}

std::vector<IntPolynomial> parse_qpoly_list(const std::string& text) {
    std::vector<IntPolynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        out.push_back(parse_qpoly(text.substr(start, end - start)));
        start = end + 1;
    }
    return out;
}

}  // namespace rankgeo
