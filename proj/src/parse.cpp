#include "heightlab/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hl {

namespace {

/// Sparse polynomial under construction: (i,j) -> coefficient of X^i Y^j.
using Grid = std::map<std::pair<long, long>, Rat>;

Grid g_const(const Rat& c) {
    Grid g;
    if (c != 0) g[{0, 0}] = c;
    return g;
}

Grid g_add(const Grid& a, const Grid& b) {
    Grid r = a;
    for (auto& [k, v] : b) {
        r[k] += v;
        if (r[k] == 0) r.erase(k);
    }
    return r;
}

Grid g_neg(const Grid& a) {
    Grid r;
    for (auto& [k, v] : a) r[k] = -v;
    return r;
}

Grid g_mul(const Grid& a, const Grid& b) {
    Grid r;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
            r[key] += va * vb;
            if (r[key] == 0) r.erase(key);
        }
    return r;
}

Grid g_pow(Grid a, long e) {
    Grid r = g_const(Rat(1));
    while (e > 0) {
        if (e & 1) r = g_mul(r, a);
        a = g_mul(a, a);
        e >>= 1;
    }
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Grid parse() {
        Grid g = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return g;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" +
                         s_ + "\"");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    Grid expr() {
        Grid g = eat('-') ? g_neg(term()) : (eat('+'), term());
        while (true) {
            if (eat('+'))
                g = g_add(g, term());
            else if (eat('-'))
                g = g_add(g, g_neg(term()));
            else
                break;
        }
        return g;
    }

    Grid term() {
        Grid g = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                g = g_mul(g, power());
            } else if (c == 'X' || c == 'Y' || c == '(') {
                g = g_mul(g, power());  // implicit multiplication
            } else {
                break;
            }
        }
        return g;
    }

    Grid power() {
        Grid base = atom();
        if (eat('^')) {
            Int e = integer();
            if (e < 0 || e > 512) fail("exponent out of range");
            base = g_pow(base, e.get_si());
        }
        return base;
    }

    Grid atom() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return g_neg(atom());
        }
        if (c == '(') {
            ++pos_;
            Grid g = expr();
            if (!eat(')')) fail("expected ')'");
            return g;
        }
        if (c == 'X') {
            ++pos_;
            Grid g;
            g[{1, 0}] = 1;
            return g;
        }
        if (c == 'Y') {
            ++pos_;
            Grid g;
            g[{0, 1}] = 1;
            return g;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            if (eat('/')) {
                Int d = integer();
                if (d == 0) fail("zero denominator");
                return g_const(make_rat(n, d));
            }
            return g_const(Rat(n));
        }
        fail("expected term");
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

BivarPoly parse_poly(const std::string& text) {
    Grid g = Parser(text).parse();
    long m = 0, n = 0;
    for (auto& [k, v] : g) {
        (void)v;
        m = std::max(m, k.first);
        n = std::max(n, k.second);
    }
    std::vector<std::vector<Rat>> grid(m + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (auto& [k, v] : g) grid[k.first][k.second] = v;
    return BivarPoly::from_rational_grid(grid);
}

Rat parse_rational(const std::string& text) {
    std::string t = trim(text);
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = (t[0] == '-');
        t = trim(t.substr(1));
    }
    size_t slash = t.find('/');
    auto check_int = [&](const std::string& p) {
        if (p.empty()) throw ParseError("empty integer in \"" + text + "\"");
        for (char c : p)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad rational \"" + text + "\"");
    };
    Rat q;
    if (slash == std::string::npos) {
        check_int(t);
        q = Rat(Int(t));
    } else {
        std::string a = trim(t.substr(0, slash)), b = trim(t.substr(slash + 1));
        check_int(a);
        check_int(b);
        if (Int(b) == 0) throw ParseError("zero denominator in \"" + text + "\"");
        q = make_rat(Int(a), Int(b));
    }
    return neg ? Rat(-q) : q;
}

std::map<std::string, std::string> parse_kv_text(const std::string& text,
                                                 const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(origin + ":" + std::to_string(lineno) +
                             ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw ParseError(origin + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = val;
    }
    return kv;
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_kv_text(ss.str(), path);
}

CurveSpec parse_curve_text(const std::string& text, const std::string& origin) {
    auto kv = parse_kv_text(text, origin);
    if (!kv.count("poly")) throw ParseError(origin + ": missing poly=");
    CurveSpec spec;
    spec.name = kv.count("name") ? kv["name"] : origin;
    spec.poly_text = kv["poly"];
    spec.poly = parse_poly(spec.poly_text);
    if (kv.count("abs_irreducible")) {
        const std::string& v = kv["abs_irreducible"];
        if (v == "true" || v == "1")
            spec.abs_irreducible = true;
        else if (v == "false" || v == "0")
            spec.abs_irreducible = false;
        else
            throw ParseError(origin + ": abs_irreducible must be true or false");
    }
    return spec;
}

CurveSpec parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_text(ss.str(), path);
}

}  // namespace hl
