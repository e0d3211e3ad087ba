/*
   Copyright 2026 The polyinv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polyinv/expr.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace polyinv {

namespace {

class Parser {
  public:
    Parser(const std::string& text, ContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

    MPoly run() {
        MPoly v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    MPoly expr() {
        MPoly v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    MPoly term() {
        MPoly v = factor();
        while (accept('*')) v = v * factor();
        return v;
    }

    MPoly factor() {
        MPoly v = base();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a non-negative integer literal");
            Integer e = uint_literal();
            if (!e.fits_uint_p()) fail("exponent too large");
            v = v.pow(static_cast<unsigned>(e.get_ui()));
        }
        return v;
    }

    MPoly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -base();
        }
        if (c == '(') {
            ++pos_;
            MPoly v = expr();
            expect(')', "')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character");
    }

    Integer uint_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer literal");
        // base fixed to 10: leading zeros are plain decimal, not octal
        return Integer(text_.substr(start, pos_ - start), 10);
    }

    MPoly rational() {
        Integer num = uint_literal();
        if (accept('/')) {
            skip_ws();
            std::size_t at = pos_;
            Integer den = uint_literal();
            if (den == 0) throw ParseError("zero denominator", at);
            return MPoly::constant(ctx_, Rational(num, den));
        }
        return MPoly::constant(ctx_, Rational(num));
    }

    MPoly identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "w" && ctx_->field()->index() > 1)
            return MPoly::constant(ctx_, CycloNum::generator(ctx_->field()));
        const auto& names = ctx_->names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return MPoly::variable(ctx_, i);
        if (name == "w") throw ParseError("'w' needs a field with M > 1", start);
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    const std::string& text_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

struct PrintedTerm {
    bool negative;        // only set for rational coefficients
    std::string coeff;    // absolute value, or the full parenthesized w-poly
    bool unit_coeff;      // coeff == 1 (printable without the factor)
    std::string mono;     // "" for the constant term
    bool mono_starts_with_power;  // first factor carries '^'
};

// join terms; a negative first term would reassociate under the grammar
// ("-z^2" parses as (-z)^2), so it keeps an explicit coefficient factor
// whenever its first printed factor carries an exponent
std::string join_terms(const std::vector<PrintedTerm>& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const PrintedTerm& t = ts[i];
        std::string body;
        if (t.mono.empty()) body = t.coeff;
        else if (t.unit_coeff && !(i == 0 && t.negative && t.mono_starts_with_power))
            body = t.mono;
        else body = t.coeff + "*" + t.mono;
        if (i == 0) out = (t.negative ? "-" : "") + body;
        else out += (t.negative ? " - " : " + ") + body;
    }
    return out;
}

std::string wpoly_str(const std::vector<Rational>& coeffs) {
    std::vector<PrintedTerm> ts;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& r = coeffs[i];
        if (r.is_zero()) continue;
        PrintedTerm t;
        t.negative = r.sign() < 0;
        t.coeff = r.abs().str();
        t.unit_coeff = r.abs().is_one();
        t.mono = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
        t.mono_starts_with_power = i > 1;
        ts.push_back(std::move(t));
    }
    return ts.empty() ? "0" : join_terms(ts);
}

PrintedTerm printed_term(const Monomial& m, const CycloNum& c,
                         const std::vector<std::string>& names) {
    PrintedTerm t;
    t.mono = monomial_str(m, names);
    std::size_t first = 0;
    while (first < m.size() && m[first] == 0) ++first;
    t.mono_starts_with_power = first < m.size() && m[first] > 1;
    if (c.is_rational()) {
        const Rational& r = c.rational_part();
        t.negative = r.sign() < 0;
        t.coeff = r.abs().str();
        t.unit_coeff = r.abs().is_one();
    } else {
        t.negative = false;
        t.coeff = "(" + wpoly_str(c.coeffs()) + ")";
        t.unit_coeff = false;
    }
    return t;
}

}  // namespace

MPoly parse(const std::string& text, const ContextPtr& ctx) {
    return Parser(text, ctx).run();
}

std::string format(const MPoly& F) {
    if (F.is_zero()) return "0";
    std::vector<PrintedTerm> ts;
    ts.reserve(F.term_count());
    const auto& names = F.context()->names();
    for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it)
        ts.push_back(printed_term(it->first, it->second, names));
    return join_terms(ts);
}

std::string format_scalar(const CycloNum& c) {
    if (c.is_rational()) return c.rational_part().str();
    return "(" + wpoly_str(c.coeffs()) + ")";
}

std::ostream& operator<<(std::ostream& os, const MPoly& F) { return os << format(F); }

}  // namespace polyinv
