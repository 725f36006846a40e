#include "primegalois/parse.hpp"

#include "primegalois/errors.hpp"

#include <cctype>
#include <vector>

namespace primegalois {

namespace {

/// Polynomial over Q, low to high, used only while parsing.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly qadd(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    qtrim(r);
    return r;
}

QPoly qneg(QPoly a) {
    for (auto& c : a)
        c = -c;
    return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::string variable;
    int exponent_cap = 10000;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void bad(const std::string& why) {
        fail(errc::parse_error, why + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            bad("expected an integer");
        return mpz_class(s.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    bool starts_atom() {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    QPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            QPoly e = expr();
            if (!eat(')'))
                bad("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return {mpq_class(integer())};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (variable.empty())
                variable = name;
            else if (variable != name)
                fail(errc::non_univariate,
                     "second variable '" + name + "' (already using '" + variable + "')");
            return {mpq_class(0), mpq_class(1)};
        }
        bad("expected a number, variable, or '('");
    }

    QPoly factor() {
        QPoly base = atom();
        if (peek() == '^') {
            ++pos;
            if (peek() == '-')
                bad("negative exponent");
            mpz_class e = integer();
            if (e > exponent_cap)
                bad("exponent too large");
            unsigned long n = e.get_ui();
            QPoly r{mpq_class(1)};
            for (unsigned long i = 0; i < n; ++i)
                r = qmul(r, base);
            return r;
        }
        return base;
    }

    QPoly term() {
        QPoly r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = qmul(r, factor());
            } else if (c == '/') {
                ++pos;
                QPoly d = factor();
                if (d.size() > 1)
                    bad("division by a non-constant");
                if (d.empty() || d[0] == 0)
                    bad("division by zero");
                for (auto& x : r)
                    x /= d[0];
                qtrim(r);
            } else if (starts_atom()) {
                r = qmul(r, factor()); // implicit multiplication
            } else {
                return r;
            }
        }
    }

    QPoly signed_term() {
        bool neg = false;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
            } else if (c == '-') {
                ++pos;
                neg = !neg;
            } else {
                break;
            }
        }
        QPoly r = term();
        return neg ? qneg(std::move(r)) : r;
    }

    QPoly expr() {
        QPoly r = signed_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = qadd(r, signed_term());
            } else if (c == '-') {
                ++pos;
                r = qadd(r, qneg(signed_term()));
            } else {
                return r;
            }
        }
    }

    QPoly run() {
        skip_ws();
        if (pos == s.size())
            bad("empty input");
        QPoly r = expr();
        if (peek() != '\0')
            bad("unexpected trailing input");
        qtrim(r);
        return r;
    }
};

} // namespace

ParsedPoly parse_polynomial(const std::string& text) {
    Parser p(text);
    QPoly q = p.run();

    ParsedPoly out;
    out.variable = p.variable;
    if (q.empty()) {
        out.poly = IntPoly();
        out.scale = 1;
        return out;
    }
    // clear denominators, then pull out the (positive) content
    mpz_class lcm(1);
    for (const auto& c : q)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> zc;
    zc.reserve(q.size());
    for (const auto& c : q) {
        mpq_class v = c * mpq_class(lcm);
        zc.push_back(v.get_num()); // den is 1 after scaling by the lcm
    }
    mpz_class content(0);
    for (const auto& z : zc)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    for (auto& z : zc)
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    out.poly = IntPoly(std::move(zc));
    out.scale = mpq_class(content, lcm);
    out.scale.canonicalize();
    return out;
}

IntPoly parse_poly(const std::string& text) { return parse_polynomial(text).poly; }

} // namespace primegalois
