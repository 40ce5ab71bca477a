#include "cubesq/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace cubesq {

namespace {

enum class Tok { Int, Zeta3, Var, Caret, Star, Slash, Plus, Minus, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // digits for Int, "z"/"w" for Var
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { scan_all_(); }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = idx_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    Token next() {
        Token t = peek();
        if (idx_ < toks_.size() - 1) ++idx_;
        return t;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }

  private:
    void scan_all_() {
        std::size_t i = 0;
        while (i < s_.size()) {
            char c = s_[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) ++i;
                toks_.push_back({Tok::Int, s_.substr(start, i - start), start});
                continue;
            }
            if (s_.compare(i, 5, "zeta3") == 0) {
                toks_.push_back({Tok::Zeta3, "zeta3", start});
                i += 5;
                continue;
            }
            switch (c) {
                case 'z': case 'w': toks_.push_back({Tok::Var, std::string(1, c), start}); break;
                case '^': toks_.push_back({Tok::Caret, "^", start}); break;
                case '*': toks_.push_back({Tok::Star, "*", start}); break;
                case '/': toks_.push_back({Tok::Slash, "/", start}); break;
                case '+': toks_.push_back({Tok::Plus, "+", start}); break;
                case '-': toks_.push_back({Tok::Minus, "-", start}); break;
                case '(': toks_.push_back({Tok::LParen, "(", start}); break;
                case ')': toks_.push_back({Tok::RParen, ")", start}); break;
                default:
                    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
            }
            ++i;
        }
        toks_.push_back({Tok::End, "", s_.size()});
    }

    const std::string& s_;
    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

struct Term {
    CycRat coeff;
    int zexp = 0;
    int wexp = 0;
    int total() const { return zexp + wexp; }
};

constexpr int kMaxExponent = 100000;

class Parser {
  public:
    explicit Parser(const std::string& s) : lx_(s) {}

    std::vector<Term> parse() {
        std::vector<Term> terms;
        bool neg = lx_.accept(Tok::Minus);
        terms.push_back(signed_term_(neg));
        while (true) {
            if (lx_.accept(Tok::Plus)) terms.push_back(signed_term_(false));
            else if (lx_.accept(Tok::Minus)) terms.push_back(signed_term_(true));
            else break;
        }
        if (lx_.peek().kind != Tok::End)
            throw SyntaxError("unexpected trailing input", lx_.peek().pos);
        return terms;
    }

  private:
    Term signed_term_(bool negate) {
        Term t = term_();
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    Term term_() {
        Term t;
        if (lx_.peek().kind == Tok::Var) {
            t.coeff = CycRat(1);
            monom_(t);
            return t;
        }
        t.coeff = coeff_();
        if (lx_.accept(Tok::Star)) {
            if (lx_.peek().kind != Tok::Var)
                throw SyntaxError("expected variable after '*'", lx_.peek().pos);
            monom_(t);
        }
        return t;
    }

    CycRat coeff_() {
        const Token& tk = lx_.peek();
        if (tk.kind == Tok::Zeta3) {
            lx_.next();
            return CycRat::zeta3();
        }
        if (tk.kind == Tok::LParen) {
            lx_.next();
            CycRat v = paren_body_();
            if (!lx_.accept(Tok::RParen))
                throw SyntaxError("expected ')'", lx_.peek().pos);
            return v;
        }
        if (tk.kind == Tok::Int) {
            Rat r = rat_(false);
            // lookahead for "rat * zeta3"
            if (lx_.peek().kind == Tok::Star && lx_.peek(1).kind == Tok::Zeta3) {
                lx_.next();
                lx_.next();
                return CycRat(Rat(0), r);
            }
            return CycRat(r);
        }
        throw SyntaxError("expected coefficient or monomial", tk.pos);
    }

    // inside '(' ... ')': rat [ ('+'|'-') rat? '*'? 'zeta3' ]
    CycRat paren_body_() {
        Rat a = rat_(true);
        CycRat v(a);
        bool plus = false;
        if (lx_.peek().kind == Tok::Plus) plus = true;
        else if (lx_.peek().kind != Tok::Minus) return v;
        lx_.next();
        Rat b(1);
        if (lx_.peek().kind == Tok::Int) b = rat_(false);
        lx_.accept(Tok::Star);
        if (!lx_.accept(Tok::Zeta3))
            throw SyntaxError("expected zeta3 term inside parentheses", lx_.peek().pos);
        if (!plus) b = -b;
        return CycRat(a, b);
    }

    Rat rat_(bool allow_sign) {
        bool neg = false;
        if (allow_sign && lx_.peek().kind == Tok::Minus) {
            lx_.next();
            neg = true;
        }
        const Token& tk = lx_.peek();
        if (tk.kind != Tok::Int) throw SyntaxError("expected integer", tk.pos);
        mpz_class num(lx_.next().text, 10);
        mpz_class den(1);
        if (lx_.accept(Tok::Slash)) {
            const Token& dk = lx_.peek();
            if (dk.kind != Tok::Int) throw SyntaxError("expected denominator", dk.pos);
            den = mpz_class(lx_.next().text, 10);
            if (den == 0) throw SyntaxError("denominator must be positive", dk.pos);
        }
        Rat r{std::move(num), std::move(den)};
        return neg ? -r : r;
    }

    void monom_(Term& t) {
        var_power_(t);
        if (lx_.peek().kind == Tok::Star && lx_.peek(1).kind == Tok::Var) {
            lx_.next();
            var_power_(t);
        } else if (lx_.peek().kind == Tok::Var) {
            var_power_(t);
        }
    }

    void var_power_(Term& t) {
        const Token& tk = lx_.peek();
        if (tk.kind != Tok::Var) throw SyntaxError("expected 'z' or 'w'", tk.pos);
        char v = lx_.next().text[0];
        long e = 1;
        if (lx_.accept(Tok::Caret)) {
            const Token& ek = lx_.peek();
            if (ek.kind != Tok::Int) throw SyntaxError("expected exponent", ek.pos);
            Token et = lx_.next();
            if (et.text.size() > 6) throw SyntaxError("exponent too large", et.pos);
            e = std::stol(et.text);
            if (e <= 0) throw SyntaxError("exponent must be positive", et.pos);
            if (e > kMaxExponent) throw SyntaxError("exponent too large", et.pos);
        }
        if (v == 'z') t.zexp += static_cast<int>(e);
        else t.wexp += static_cast<int>(e);
    }

    Lexer lx_;
};

}  // namespace

CycForm parse_form(const std::string& text, std::optional<int> expected_degree) {
    std::vector<Term> terms = Parser(text).parse();

    int degree = -1;
    int max_seen = 0;
    for (const Term& t : terms) {
        max_seen = std::max(max_seen, t.total());
        if (t.coeff.is_zero()) continue;  // zero terms carry no degree information
        if (degree < 0) degree = t.total();
        else if (degree != t.total())
            throw InhomogeneousInput("terms of total degree " + std::to_string(degree) + " and " +
                                     std::to_string(t.total()) + " in the same form");
    }
    if (degree < 0) degree = expected_degree.value_or(max_seen);
    if (expected_degree && degree != *expected_degree)
        throw DegreeMismatch("form has degree " + std::to_string(degree) + ", expected " +
                             std::to_string(*expected_degree));

    CycForm f(degree);
    for (const Term& t : terms) {
        if (t.coeff.is_zero()) continue;
        f[t.zexp] += t.coeff;
    }
    return f;
}

std::string to_text(const CycRat& c) {
    const Rat& a = c.a();
    const Rat& b = c.b();
    if (b.is_zero()) return a.str();
    std::string zmag = abs(b) == Rat(1) ? "zeta3" : abs(b).str() + "*zeta3";
    if (a.is_zero()) return b.sign() < 0 ? "-" + zmag : zmag;
    return "(" + a.str() + (b.sign() > 0 ? "+" : "-") + zmag + ")";
}

namespace {

std::string monom_text(int zexp, int wexp) {
    std::string s;
    if (zexp > 0) s += zexp == 1 ? "z" : "z^" + std::to_string(zexp);
    if (wexp > 0) {
        if (!s.empty()) s += "*";
        s += wexp == 1 ? "w" : "w^" + std::to_string(wexp);
    }
    return s;
}

// Splits a coefficient into (sign-for-joining, body).  Mixed a+b*zeta3
// coefficients keep their signs inside the parentheses and join with '+'.
std::pair<bool, std::string> coeff_text(const CycRat& c, const std::string& monom) {
    const Rat& a = c.a();
    const Rat& b = c.b();
    bool neg = false;
    std::string body;
    if (b.is_zero()) {
        neg = a.sign() < 0;
        Rat aa = neg ? -a : a;
        body = (aa == Rat(1) && !monom.empty()) ? "" : aa.str();
    } else if (a.is_zero()) {
        neg = b.sign() < 0;
        Rat bb = neg ? -b : b;
        body = bb == Rat(1) ? "zeta3" : bb.str() + "*zeta3";
    } else {
        std::string zeta = (b == Rat(1) || b == Rat(-1)) ? "zeta3" : abs(b).str() + "*zeta3";
        body = "(" + a.str() + (b.sign() > 0 ? "+" : "-") + zeta + ")";
    }
    if (monom.empty()) {
        if (body.empty()) body = "1";
        return {neg, body};
    }
    if (body.empty()) return {neg, monom};
    return {neg, body + "*" + monom};
}

}  // namespace

std::string to_text(const CycForm& f) {
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const CycRat& c = f[i];
        if (c.is_zero()) continue;
        auto [neg, body] = coeff_text(c, monom_text(i, f.degree() - i));
        if (first) {
            if (neg) os << "-";
            os << body;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << body;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const CycRat& x) { return os << to_text(x); }

}  // namespace cubesq
