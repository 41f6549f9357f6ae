#include "fewnomial/expr.hpp"

#include <cctype>

#include "fewnomial/error.hpp"

namespace fewnomial {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    // univariate: l < 0; multivariate: number of t-variables
    int l;

    explicit Parser(const std::string& t, int vars) : text(t), l(vars) {}

    [[noreturn]] void fail(const std::string& expected) const {
        raise(ErrorKind::ParseError,
              "at offset " + std::to_string(pos) + ": expected " + expected);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("an integer");
        }
        return Int(text.substr(start, pos - start));
    }

    Rat parse_rational() {
        Int num = parse_integer();
        if (accept('/')) {
            Int den = parse_integer();
            if (den <= 0) fail("a positive denominator");
            return make_rat(num, den);
        }
        return Rat(num);
    }

    // factor := rational | variable ['^' integer]
    // returns (coefficient, exponent of x | key contribution)
    struct Factor {
        Rat coeff{1};
        Int xexp{0};
        int tindex = -1;  // 0-based t index, or -2 for y
        Int vexp{0};
    };

    Factor parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("a factor");
        char c = text[pos];
        Factor f;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            f.coeff = parse_rational();
            return f;
        }
        if (c == 'x') {
            if (l >= 0) fail("a multivariate term (t1..tl, y)");
            ++pos;
            f.tindex = -1;
            f.xexp = accept('^') ? parse_integer() : Int(1);
            return f;
        }
        if (c == 'y') {
            if (l < 0) fail("the variable x");
            ++pos;
            f.tindex = -2;
            f.vexp = accept('^') ? parse_integer() : Int(1);
            return f;
        }
        if (c == 't') {
            if (l < 0) fail("the variable x");
            ++pos;
            std::size_t digits = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == digits) fail("a t-variable index");
            long idx = std::stol(text.substr(digits, pos - digits));
            if (idx < 1 || idx > l) fail("a t-variable index within 1..l");
            f.tindex = static_cast<int>(idx - 1);
            f.vexp = accept('^') ? parse_integer() : Int(1);
            return f;
        }
        fail("a rational or a variable");
    }

    SparsePoly parse_univariate() {
        std::vector<Term> terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= text.size()) {
                if (first) fail("an expression");
                break;
            }
            Rat sign(1);
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && !first)
                fail("'+' or '-'");
            Rat coeff = sign;
            Int exp(0);
            bool want_factor = true;
            while (want_factor) {
                Factor f = parse_factor();
                coeff *= f.coeff;
                exp += f.xexp;
                want_factor = accept('*');
            }
            terms.push_back(Term{std::move(exp), std::move(coeff)});
            first = false;
        }
        return SparsePoly::from_terms(std::move(terms));
    }

    MultiPoly parse_multivariate() {
        std::vector<std::pair<MultiKey, Rat>> raw;
        int dmax = 0;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= text.size()) {
                if (first) fail("an expression");
                break;
            }
            Rat sign(1);
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && !first)
                fail("'+' or '-'");
            Rat coeff = sign;
            MultiKey key;
            key.texp.assign(static_cast<std::size_t>(l), 0);
            bool want_factor = true;
            while (want_factor) {
                std::size_t factor_pos = pos;
                Factor f = parse_factor();
                coeff *= f.coeff;
                if (f.tindex == -2 || f.tindex >= 0) {
                    if (cmp(abs(f.vexp), 1000000) > 0) {
                        pos = factor_pos;
                        fail("a small exponent for a bounded-degree variable");
                    }
                    long e = f.vexp.get_si();
                    if (f.tindex == -2) {
                        if (e < 0) {
                            pos = factor_pos;
                            fail("a nonnegative power of y");
                        }
                        key.ypow += static_cast<int>(e);
                    } else {
                        key.texp[static_cast<std::size_t>(f.tindex)] += static_cast<int>(e);
                    }
                }
                want_factor = accept('*');
            }
            dmax = std::max(dmax, key.ypow);
            for (int e : key.texp) dmax = std::max(dmax, std::abs(e));
            raw.emplace_back(std::move(key), std::move(coeff));
            first = false;
        }
        return MultiPoly::from_terms(l, dmax, std::move(raw));
    }
};

void append_coeff_and_var(std::string& out, const Rat& mag, const std::string& var) {
    if (var.empty()) {
        out += to_string(mag);
        return;
    }
    if (mag != 1) {
        out += to_string(mag);
        out += '*';
    }
    out += var;
}

} // namespace

SparsePoly parse_sparse(const std::string& text) {
    Parser p(text, -1);
    SparsePoly result = p.parse_univariate();
    return result;
}

MultiPoly parse_multi(const std::string& text, int l) {
    if (l < 0) raise(ErrorKind::LengthMismatch, "negative variable count");
    Parser p(text, l);
    return p.parse_multivariate();
}

int infer_var_count(const std::string& text) {
    int best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 't') continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i + 1) best = std::max(best, static_cast<int>(std::stol(text.substr(i + 1, j - i - 1))));
    }
    return best;
}

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat mag = t.coeff;
        if (first) {
            if (mag < 0) {
                out += '-';
                mag = -mag;
            }
        } else {
            out += mag < 0 ? " - " : " + ";
            if (mag < 0) mag = -mag;
        }
        std::string var;
        if (t.exp != 0) {
            var = "x";
            if (t.exp != 1) var += "^" + to_string(t.exp);
        }
        append_coeff_and_var(out, mag, var);
        first = false;
    }
    return out;
}

std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : f.terms()) {
        Rat mag = coeff;
        if (first) {
            if (mag < 0) {
                out += '-';
                mag = -mag;
            }
        } else {
            out += mag < 0 ? " - " : " + ";
            if (mag < 0) mag = -mag;
        }
        std::string var;
        for (std::size_t i = 0; i < key.texp.size(); ++i) {
            int e = key.texp[i];
            if (e == 0) continue;
            if (!var.empty()) var += '*';
            var += "t" + std::to_string(i + 1);
            if (e != 1) var += "^" + std::to_string(e);
        }
        if (key.ypow != 0) {
            if (!var.empty()) var += '*';
            var += "y";
            if (key.ypow != 1) var += "^" + std::to_string(key.ypow);
        }
        append_coeff_and_var(out, mag, var);
        first = false;
    }
    return out;
}

std::string to_string(const DensePoly& p) { return to_string(from_dense(p)); }

} // namespace fewnomial
