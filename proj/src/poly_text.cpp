#include "mva/text.hpp"

#include <cctype>
#include <sstream>

namespace mva {

VarNames VarNames::defaults(int n, const std::string& prefix)
{
    VarNames v;
    v.prefix = prefix;
    for (int k = 1; k <= n; ++k)
        v.names.push_back(prefix + std::to_string(k));
    return v;
}

std::string VarNames::name(int k) const
{
    if (k >= 1 && k <= count())
        return names[k - 1];
    return prefix + std::to_string(k);
}

std::optional<int> VarNames::lookup(const std::string& ident) const
{
    for (int k = 1; k <= count(); ++k)
        if (names[k - 1] == ident)
            return k;
    if (ident.size() > prefix.size() && ident.compare(0, prefix.size(), prefix) == 0) {
        std::string rest = ident.substr(prefix.size());
        if (rest.find_first_not_of("0123456789") == std::string::npos && rest[0] != '0') {
            int k = std::stoi(rest);
            if (count() == 0 || k <= count())
                return k;
        }
    }
    return std::nullopt;
}

std::string rational_text(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw ParseError("bad-rational", "", "not a rational number: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0)
        throw ParseError("bad-rational", "", "zero denominator: '" + s + "'");
    return q;
}

namespace {

std::string exponent_text(int s_exp)
{
    if (s_exp % 2 != 0)
        return "(" + std::to_string(s_exp) + "/2)";
    int e = s_exp / 2;
    return e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e);
}

std::string latex_exponent(int s_exp)
{
    if (s_exp % 2 != 0)
        return (s_exp < 0 ? "-\\frac{" : "\\frac{") + std::to_string(std::abs(s_exp)) + "}{2}";
    return std::to_string(s_exp / 2);
}

}  // namespace

std::string monomial_text(const Monomial& m, const VarNames& v)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (const auto& [k, e] : m.exps()) {
        if (!out.empty())
            out += '*';
        out += v.name(k);
        if (e != 2)
            out += "^" + exponent_text(e);
    }
    return out;
}

std::string to_text(const MultiPoly& p, const VarNames& v)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        std::string body;
        if (m.is_one())
            body = rational_text(a);
        else if (a == 1)
            body = monomial_text(m, v);
        else
            body = rational_text(a) + "*" + monomial_text(m, v);
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string to_text_factored(const MultiPoly& p, const VarNames& v)
{
    if (p.size() < 2)
        return to_text(p, v);
    Monomial g;
    for (int k = 1; k <= p.max_var(); ++k)
        g = g * Monomial::s(k, p.min_exponent(k));
    if (g.is_one())
        return to_text(p, v);
    return monomial_text(g, v) + "*(" + to_text(p.times(g.inverse()), v) + ")";
}

std::string to_latex(const MultiPoly& p, const VarNames& v)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        std::string coeff;
        if (a.get_den() != 1)
            coeff = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
        else if (a != 1 || m.is_one())
            coeff = a.get_str();
        std::string mono;
        for (const auto& [k, e] : m.exps()) {
            if (!mono.empty())
                mono += ' ';
            std::string nm = v.name(k);
            if (nm.size() > 1 && std::isdigit(static_cast<unsigned char>(nm.back()))) {
                size_t cut = nm.find_first_of("0123456789");
                nm = nm.substr(0, cut) + "_{" + nm.substr(cut) + "}";
            }
            mono += nm;
            if (e != 2)
                mono += "^{" + latex_exponent(e) + "}";
        }
        std::string body = coeff;
        if (!coeff.empty() && !mono.empty())
            body += ' ';
        body += mono;
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

nlohmann::json to_json(const MultiPoly& p, const VarNames& v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [k, e] : m.exps())
            exps[v.name(k)] = e;
        arr.push_back({{"coeff", rational_text(c)}, {"exps", exps}});
    }
    return arr;
}

MultiPoly poly_from_json(const nlohmann::json& j, const VarNames& v, int nvars)
{
    if (!j.is_array())
        throw ParseError("bad-poly", "", "polynomial JSON must be a list of terms");
    MultiPoly p = MultiPoly::zero(nvars);
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& t = j[i];
        std::string loc = "[" + std::to_string(i) + "]";
        if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string())
            throw ParseError("bad-poly", loc, "term needs a string 'coeff'");
        Monomial m;
        if (t.contains("exps")) {
            for (const auto& [name, e] : t["exps"].items()) {
                auto k = v.lookup(name);
                if (!k || !e.is_number_integer())
                    throw ParseError("bad-poly", loc, "bad exponent entry '" + name + "'");
                m = m * Monomial::s(*k, e.get<int>());
            }
        }
        p += MultiPoly::term(m, parse_rational(t["coeff"].get<std::string>()), nvars);
    }
    return p;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const VarNames& v, int n) : s_(s), v_(v), n_(n) {}

    MultiPoly run()
    {
        MultiPoly r = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    const VarNames& v_;
    int n_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("bad-poly", "offset " + std::to_string(pos_), msg + " in '" + s_ + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc = MultiPoly::zero(n_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly t = term();
        acc += neg ? -t : t;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (d.is_zero())
                    fail("division by zero");
                if (d.is_constant())
                    acc = acc.scaled(1 / d.constant_term());
                else
                    acc = div_exact(acc, d);
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary()
    {
        if (eat('-'))
            return -unary();
        return power();
    }

    Rational exponent()
    {
        skip();
        if (eat('(')) {
            bool neg = eat('-');
            Rational e = integer();
            if (eat('/'))
                e /= integer();
            if (!eat(')'))
                fail("expected ')' in exponent");
            return neg ? Rational(-e) : e;
        }
        bool neg = eat('-');
        Rational e = integer();
        return neg ? Rational(-e) : e;
    }

    Rational integer()
    {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return Rational(mpz_class(s_.substr(start, pos_ - start)));
    }

    MultiPoly power()
    {
        MultiPoly base = primary();
        if (!eat('^'))
            return base;
        Rational e = exponent();
        if (e.get_den() == 1 && e >= 0) {
            MultiPoly r(1, n_);
            for (long i = 0; i < e.get_num().get_si(); ++i)
                r = r * base;
            return r;
        }
        if (!base.is_monomial())
            fail("negative or fractional power of a non-monomial");
        auto [m, c] = *base.terms().begin();
        Monomial out;
        for (const auto& [k, se] : m.exps()) {
            Rational ne = e * se;
            if (ne.get_den() != 1)
                fail("exponent does not land on a half-step");
            out = out * Monomial::s(k, static_cast<int>(ne.get_num().get_si()));
        }
        Rational coeff;
        if (c == 1)
            coeff = 1;
        else if (e.get_den() == 1) {
            coeff = 1;
            long n = e.get_num().get_si();
            for (long i = 0; i < -n; ++i)
                coeff /= c;
        } else
            fail("fractional power of a non-unit coefficient");
        return MultiPoly::term(out, coeff, n_);
    }

    MultiPoly primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            if (!eat(')'))
                fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly(integer(), n_);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            auto k = v_.lookup(id);
            if (!k || (n_ > 0 && *k > n_)) {
                pos_ = start;
                fail("unknown variable '" + id + "'");
            }
            return MultiPoly::t(*k, n_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarNames& v, int nvars)
{
    return PolyParser(text, v, nvars).run();
}

}  // namespace mva
