#include "gsp4spin/notation.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace gsp4 {

namespace {

const std::map<std::string, std::string>& greek_names() {
    static const std::map<std::string, std::string> names{
        {"sigma", "σ"}, {"xi", "ξ"},   {"chi", "χ"},  {"mu", "μ"},
        {"rho", "ρ"},   {"pi", "π"},   {"tau", "τ"},  {"omega", "ω"},
        {"chi_1", "χ₁"}, {"chi_2", "χ₂"},
        {"mu_1", "μ₁"},  {"mu_2", "μ₂"},
    };
    return names;
}

std::string pretty_name(const std::string& name, bool unicode) {
    if (!unicode) return name;
    auto it = greek_names().find(name);
    return it == greek_names().end() ? name : it->second;
}

void append_power(std::string& out, const std::string& base, const Rational& e) {
    if (e.is_zero()) return;
    if (!out.empty()) out += ' ';
    out += base;
    if (e == Rational(1)) return;
    out += "^{" + e.str() + "}";
}

} // namespace

std::string print_character(const Character& c, bool unicode) {
    std::string out;
    append_power(out, unicode ? "ν" : "nu", c.nu_exponent());
    if (c.chi_exponent() != 0) {
        if (!out.empty()) out += ' ';
        out += unicode ? "χ_{K/k}" : "chi_{K/k}";
    }
    for (const GeneratorDecl& decl : c.context()->generators()) {
        auto it = c.generator_exponents().find(decl.name);
        if (it == c.generator_exponents().end()) continue;
        append_power(out, pretty_name(decl.name, unicode), Rational(it->second));
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string char_prefix(const Character& c, bool unicode) {
    return c.is_trivial() ? "" : print_character(c, unicode) + " ";
}

const char* rtimes(bool unicode) { return unicode ? " ⋊ " : " |x "; }

} // namespace

std::string print_gl2(const GL2Rep& pi, bool unicode) {
    switch (pi.kind()) {
    case GL2Kind::Principal:
        return print_character(pi.mu1(), unicode) + (unicode ? " × " : " x ") +
               print_character(pi.mu2(), unicode);
    case GL2Kind::Special:
        return char_prefix(pi.mu(), unicode) + "St";
    case GL2Kind::OneDim:
        return char_prefix(pi.mu(), unicode) + "one";
    case GL2Kind::Cuspidal:
        return char_prefix(pi.twist(), unicode) + pi.cusp_data()->name;
    }
    throw Error("unreachable");
}

std::string print_rep(const GSp4Rep& pi, bool unicode) {
    const ContextPtr& ctx = pi.context();
    const auto nu = [&](long num, long den = 1) { return Character::nu(ctx, {num, den}); };
    const auto pr = [&](const Character& c) { return print_character(c, unicode); };

    switch (pi.type()) {
    case GSp4Type::I:
        return pr(pi.chi1()) + (unicode ? " × " : " x ") + pr(pi.chi2()) + rtimes(unicode) +
               pr(pi.sigma());
    case GSp4Type::IIa:
        return char_prefix(pi.chi(), unicode) + "St" + rtimes(unicode) + pr(pi.sigma());
    case GSp4Type::IIb:
        return char_prefix(pi.chi(), unicode) + "one" + rtimes(unicode) + pr(pi.sigma());
    case GSp4Type::IIIa:
        return pr(pi.chi()) + rtimes(unicode) + char_prefix(pi.sigma(), unicode) + "St";
    case GSp4Type::IIIb:
        return pr(pi.chi()) + rtimes(unicode) + char_prefix(pi.sigma(), unicode) + "one";
    case GSp4Type::IVa:
        return char_prefix(pi.sigma(), unicode) + "St_G";
    case GSp4Type::IVb:
        return "L(" + pr(nu(2)) + ", " + char_prefix(nu(-1) * pi.sigma(), unicode) + "St)";
    case GSp4Type::IVc:
        return "L(" + char_prefix(nu(3, 2), unicode) + "St, " + pr(nu(-3, 2) * pi.sigma()) + ")";
    case GSp4Type::IVd:
        return char_prefix(pi.sigma(), unicode) + "one_G";
    case GSp4Type::Va:
        return "delta([" + pr(pi.xi()) + ", " + pr(nu(1) * pi.xi()) + "], " +
               pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::Vb:
        return "L(" + char_prefix(nu(1, 2) * pi.xi(), unicode) + "St, " +
               pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::Vc:
        return "L(" + char_prefix(nu(1, 2) * pi.xi(), unicode) + "St, " +
               pr(nu(-1, 2) * pi.xi() * pi.sigma()) + ")";
    case GSp4Type::Vd:
        return "L(" + pr(nu(1) * pi.xi()) + ", " + pr(pi.xi()) + rtimes(unicode) +
               pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::VaStar:
        return "theta_-(" + char_prefix(pi.sigma(), unicode) + "St, " +
               char_prefix(pi.xi() * pi.sigma(), unicode) + "St)";
    case GSp4Type::VIa:
        return "tau(S, " + pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::VIb:
        return "tau(T, " + pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::VIc:
        return "L(" + char_prefix(nu(1, 2), unicode) + "St, " + pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::VId:
        return "L(" + pr(nu(1)) + ", one" + rtimes(unicode) + pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::VII:
        return pr(pi.chi()) + rtimes(unicode) + print_gl2(pi.pi(), unicode);
    case GSp4Type::VIIIa:
        return "tau(S, " + print_gl2(pi.pi(), unicode) + ")";
    case GSp4Type::VIIIb:
        return "tau(T, " + print_gl2(pi.pi(), unicode) + ")";
    case GSp4Type::IXa:
        return "delta(" + pr(nu(1) * pi.xi()) + ", " +
               print_gl2(pi.pi().twisted(nu(-1, 2)), unicode) + ")";
    case GSp4Type::IXb:
        return "L(" + pr(nu(1) * pi.xi()) + ", " +
               print_gl2(pi.pi().twisted(nu(-1, 2)), unicode) + ")";
    case GSp4Type::X:
        return print_gl2(pi.pi(), unicode) + rtimes(unicode) + pr(pi.sigma());
    case GSp4Type::XIa:
        return "delta(" + print_gl2(pi.pi().twisted(nu(1, 2)), unicode) + ", " +
               pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::XIb:
        return "L(" + print_gl2(pi.pi().twisted(nu(1, 2)), unicode) + ", " +
               pr(nu(-1, 2) * pi.sigma()) + ")";
    case GSp4Type::XIaStar:
        return "theta_-(" + char_prefix(pi.sigma(), unicode) + "St, " +
               print_gl2(pi.pi().twisted(pi.sigma()), unicode) + ")";
    case GSp4Type::CuspGeneric:
    case GSp4Type::CuspOtherNonGeneric: {
        std::string out = to_string(pi.type()) + "(" + pi.cusp_data()->name;
        out += "; omega = " + pr(pi.cusp_data()->central_character);
        if (!pi.cusp_twist().is_trivial()) out += "; twist = " + pr(pi.cusp_twist());
        const CuspGSp4Data& data = *pi.cusp_data();
        if (data.policy == CuspGSp4Data::LambdaPolicy::None) out += "; lambdas = none";
        if (data.policy == CuspGSp4Data::LambdaPolicy::Listed) {
            out += "; lambdas = [";
            for (std::size_t i = 0; i < data.lambdas.size(); ++i)
                out += (i ? ", " : "") + print_lambda(data.lambdas[i], unicode);
            out += "]";
        }
        return out + ")";
    }
    }
    throw Error("unreachable");
}

std::string print_lambda(const CharacterK& lambda, bool unicode) {
    std::string out;
    if (lambda.abstract_part()) out = lambda.abstract_part()->name;
    if (!lambda.norm_part().is_trivial() || out.empty()) {
        if (!out.empty()) out += " * ";
        out += "norm(" + print_character(lambda.norm_part(), unicode) + ")";
    }
    return out;
}

std::string print_factor(const EulerFactor& f, bool unicode) {
    if (f.is_one()) return "1";
    std::string out;
    const auto& ms = f.monomials();
    for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if (!out.empty()) out += ' ';
        out += "L(s, " + print_character(ms[i].character(), unicode) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Word,      // identifier or integer
    ChiExt,    // chi_{K/k}
    ThetaMinus,
    Rtimes,    // |x
    Exponent,  // ^{rational}
    LParen, RParen, LBracket, RBracket,
    Comma, Semicolon, Equals, Star,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto starts_with = [&](std::string_view lit) {
        return text.substr(i, lit.size()) == lit;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        if (starts_with("chi_{K/k}")) {
            out.push_back({Tok::ChiExt, "chi_{K/k}", at});
            i += 9;
            continue;
        }
        if (starts_with("theta_-")) {
            out.push_back({Tok::ThetaMinus, "theta_-", at});
            i += 7;
            continue;
        }
        if (starts_with("|x")) {
            out.push_back({Tok::Rtimes, "|x", at});
            i += 2;
            continue;
        }
        if (starts_with("^{")) {
            i += 2;
            std::size_t start = i;
            while (i < text.size() && text[i] != '}') ++i;
            if (i == text.size()) throw ParseError("unterminated exponent", at);
            std::string body(text.substr(start, i - start));
            ++i; // consume '}'
            out.push_back({Tok::Exponent, body, at});
            continue;
        }
        switch (c) {
        case '(': out.push_back({Tok::LParen, "(", at}); ++i; continue;
        case ')': out.push_back({Tok::RParen, ")", at}); ++i; continue;
        case '[': out.push_back({Tok::LBracket, "[", at}); ++i; continue;
        case ']': out.push_back({Tok::RBracket, "]", at}); ++i; continue;
        case ',': out.push_back({Tok::Comma, ",", at}); ++i; continue;
        case ';': out.push_back({Tok::Semicolon, ";", at}); ++i; continue;
        case '=': out.push_back({Tok::Equals, "=", at}); ++i; continue;
        case '*': out.push_back({Tok::Star, "*", at}); ++i; continue;
        default: break;
        }
        if (word_char(c)) {
            std::size_t start = i;
            while (i < text.size() && word_char(text[i])) ++i;
            out.push_back({Tok::Word, std::string(text.substr(start, i - start)), at});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

Rational parse_rational_text(const std::string& body, std::size_t at) {
    try {
        return Rational::parse(body);
    } catch (const DomainError&) {
        throw ParseError("malformed rational '" + body + "'", at);
    }
}

// ---------------------------------------------------------------------------
// Parser

const std::array<const char*, 20> kReserved{
    "St", "one", "St_G", "one_G", "nu", "x", "L", "delta", "tau", "S", "T",
    "norm", "principal", "special", "onedim", "cuspidal_generic", "cuspidal_nongeneric",
    "omega", "twist", "lambdas",
};

bool reserved(const std::string& w) {
    return std::any_of(kReserved.begin(), kReserved.end(),
                       [&](const char* r) { return w == r; });
}

struct Parser {
    const Workspace& ws;
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return toks[std::min(pos + ahead, toks.size() - 1)];
    }
    const Token& next() { return toks[std::min(pos++, toks.size() - 1)]; }
    bool at(Tok kind) const { return peek().kind == kind; }
    bool at_word(const char* w) const { return at(Tok::Word) && peek().text == w; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().offset); }

    void expect(Tok kind, const char* what) {
        if (!at(kind)) fail(std::string("expected ") + what);
        ++pos;
    }

    Rational exponent_or_one() {
        if (!at(Tok::Exponent)) return Rational(1);
        const Token& t = next();
        return parse_rational_text(t.text, t.offset);
    }

    bool char_atom_ahead() const {
        if (at(Tok::ChiExt)) return true;
        if (!at(Tok::Word)) return false;
        const std::string& w = peek().text;
        if (w == "nu" || w == "1") return true;
        // unknown words parse as character atoms so that the error names them
        return !reserved(w) && !ws.gl2_reps.count(w);
    }

    /// One character atom: nu^{r} | chi_{K/k}^{n} | 1 | generator^{n}.
    Character char_atom() {
        const Token& t = next();
        if (t.kind == Tok::ChiExt) {
            Rational e = exponent_or_one();
            if (!e.is_integer()) throw ParseError("chi_{K/k} takes integer exponents", t.offset);
            return Character::chi_ext(ws.ctx).pow(e.num());
        }
        if (t.kind != Tok::Word) throw ParseError("expected a character term", t.offset);
        if (t.text == "nu") return Character::nu(ws.ctx, exponent_or_one());
        if (t.text == "1") {
            exponent_or_one();
            return Character::one(ws.ctx);
        }
        if (!ws.ctx->find_generator(t.text))
            throw ParseError("unknown name '" + t.text + "'", t.offset);
        Rational e = exponent_or_one();
        if (!e.is_integer())
            throw ParseError("generator exponents must be integers", t.offset);
        return Character::generator(ws.ctx, t.text).pow(e.num());
    }

    /// Product of character atoms, separated by whitespace or '*'.
    Character char_product() {
        if (!char_atom_ahead()) fail("expected a character expression");
        Character c = char_atom();
        while (true) {
            if (at(Tok::Star)) {
                ++pos;
                c = c * char_atom();
                continue;
            }
            if (char_atom_ahead()) {
                c = c * char_atom();
                continue;
            }
            return c;
        }
    }

    /// A character product followed by an optional marker: St / one /
    /// St_G / one_G / a declared cuspidal name.
    struct GL2Like {
        Character prefix;
        enum class Marker { NoneMark, St, One, StG, OneG, Cusp } marker;
        std::optional<GL2Rep> cusp;
    };

    GL2Like gl2_like() {
        GL2Like out{Character::one(ws.ctx), GL2Like::Marker::NoneMark, std::nullopt};
        if (char_atom_ahead()) out.prefix = char_product();
        if (at(Tok::Word)) {
            const std::string& w = peek().text;
            if (w == "St") { ++pos; out.marker = GL2Like::Marker::St; return out; }
            if (w == "one") { ++pos; out.marker = GL2Like::Marker::One; return out; }
            if (w == "St_G") { ++pos; out.marker = GL2Like::Marker::StG; return out; }
            if (w == "one_G") { ++pos; out.marker = GL2Like::Marker::OneG; return out; }
            auto it = ws.gl2_reps.find(w);
            if (it != ws.gl2_reps.end()) {
                ++pos;
                out.marker = GL2Like::Marker::Cusp;
                out.cusp = it->second.twisted(out.prefix);
                out.prefix = Character::one(ws.ctx);
                return out;
            }
        }
        return out;
    }

    Character pure_char(const GL2Like& g, const char* what) {
        if (g.marker != GL2Like::Marker::NoneMark)
            fail(std::string("expected a plain character for ") + what);
        return g.prefix;
    }

    GL2Rep gl2_expr() {
        if (at_word("principal")) {
            ++pos;
            expect(Tok::LParen, "(");
            Character a = char_product();
            expect(Tok::Comma, ",");
            Character b = char_product();
            expect(Tok::RParen, ")");
            return GL2Rep::principal(a, b);
        }
        if (at_word("special")) {
            ++pos;
            expect(Tok::LParen, "(");
            Character a = char_product();
            expect(Tok::RParen, ")");
            return GL2Rep::special(a);
        }
        if (at_word("onedim")) {
            ++pos;
            expect(Tok::LParen, "(");
            Character a = char_product();
            expect(Tok::RParen, ")");
            return GL2Rep::one_dim(a);
        }
        GL2Like g = gl2_like();
        switch (g.marker) {
        case GL2Like::Marker::St: return GL2Rep::special(g.prefix);
        case GL2Like::Marker::One: return GL2Rep::one_dim(g.prefix);
        case GL2Like::Marker::Cusp: return *g.cusp;
        case GL2Like::Marker::NoneMark:
            if (at_word("x")) {
                ++pos;
                Character b = char_product();
                return GL2Rep::principal(g.prefix, b);
            }
            fail("expected a GL(2) representation");
        default:
            fail("St_G / one_G do not name GL(2) representations");
        }
        throw Error("unreachable");
    }

    Character nu_shift(const Character& c, long num, long den) {
        return c * Character::nu(ws.ctx, {num, den});
    }

    /// How many letters of the quadratic character xi are visible in c.
    static int shared_letters(const Character& xi, const Character& c) {
        int score = 0;
        if (xi.chi_exponent() != 0 && c.chi_exponent() != 0) ++score;
        for (const auto& [g, e] : xi.generator_exponents()) {
            (void)e;
            if (c.generator_exponents().count(g)) ++score;
        }
        return score;
    }

    GSp4Rep named_L() {
        expect(Tok::LParen, "(");
        const std::size_t arg1_at = peek().offset;
        GL2Like a1 = gl2_like();
        expect(Tok::Comma, ",");
        GL2Like a2 = gl2_like();
        const bool klingen_arg =
            at(Tok::Rtimes) && (a2.marker == GL2Like::Marker::NoneMark ||
                                (a2.marker == GL2Like::Marker::One && a2.prefix.is_trivial()));
        if (klingen_arg) {
            ++pos;
            Character right = char_product();
            expect(Tok::RParen, ")");
            const Character sigma = nu_shift(right, 1, 2);
            const Character left = a2.marker == GL2Like::Marker::One
                                       ? Character::one(ws.ctx)
                                       : pure_char(a2, "the Klingen argument");
            const Character first = pure_char(a1, "the first argument");
            if (left.is_trivial()) {
                if (first != Character::nu(ws.ctx, Rational(1)))
                    throw ParseError("VId requires first argument nu", arg1_at);
                return GSp4Rep::make_VId(sigma);
            }
            if (first != Character::nu(ws.ctx, Rational(1)) * left)
                throw ParseError("Vd requires first argument nu xi", arg1_at);
            return GSp4Rep::make_Vd(left, sigma);
        }
        if (a1.marker == GL2Like::Marker::Cusp) {
            Character sigma = nu_shift(pure_char(a2, "the second argument"), 1, 2);
            expect(Tok::RParen, ")");
            return GSp4Rep::make_XIb(a1.cusp->twisted(Character::nu(ws.ctx, {-1, 2})), sigma);
        }
        if (a2.marker == GL2Like::Marker::Cusp) {
            Character xi = nu_shift(pure_char(a1, "the first argument"), -1, 1);
            expect(Tok::RParen, ")");
            return GSp4Rep::make_IXb(xi, a2.cusp->twisted(Character::nu(ws.ctx, {1, 2})));
        }
        if (a2.marker == GL2Like::Marker::St) {
            // L(nu^{2}, nu^{-1} sigma St)
            if (pure_char(a1, "the first argument") != Character::nu(ws.ctx, Rational(2)))
                throw ParseError("IVb requires first argument nu^{2}", arg1_at);
            expect(Tok::RParen, ")");
            return GSp4Rep::make_IVb(nu_shift(a2.prefix, 1, 1));
        }
        if (a1.marker == GL2Like::Marker::St) {
            const Character sigma_raw = nu_shift(pure_char(a2, "the second argument"), 1, 2);
            expect(Tok::RParen, ")");
            if (a1.prefix == Character::nu(ws.ctx, {3, 2}))
                return GSp4Rep::make_IVc(sigma_raw * Character::nu(ws.ctx, Rational(1)));
            if (a1.prefix == Character::nu(ws.ctx, {1, 2}))
                return GSp4Rep::make_VIc(sigma_raw);
            const Character xi = nu_shift(a1.prefix, -1, 2);
            if (!xi.pow(2).is_trivial() || xi.is_trivial())
                throw ParseError("Vb/Vc require a quadratic twist of St", arg1_at);
            // Vb prints a xi-free second slot; Vc keeps xi visible there
            if (shared_letters(xi, sigma_raw) > shared_letters(xi, xi * sigma_raw))
                return GSp4Rep::make_Vc(xi, xi * sigma_raw);
            return GSp4Rep::make_Vb(xi, sigma_raw);
        }
        fail("unrecognized L(...) shape; candidate rows: IVb, IVc, Vb, Vc, Vd, VIc, VId, IXb, XIb");
        throw Error("unreachable");
    }

    GSp4Rep named_delta() {
        expect(Tok::LParen, "(");
        if (at(Tok::LBracket)) {
            ++pos;
            Character xi = char_product();
            expect(Tok::Comma, ",");
            const std::size_t second_at = peek().offset;
            Character second = char_product();
            expect(Tok::RBracket, "]");
            if (second != Character::nu(ws.ctx, Rational(1)) * xi)
                throw ParseError("Va requires the segment [xi, nu xi]", second_at);
            expect(Tok::Comma, ",");
            Character sigma = nu_shift(char_product(), 1, 2);
            expect(Tok::RParen, ")");
            return GSp4Rep::make_Va(xi, sigma);
        }
        GL2Like a1 = gl2_like();
        expect(Tok::Comma, ",");
        GL2Like a2 = gl2_like();
        expect(Tok::RParen, ")");
        if (a1.marker == GL2Like::Marker::Cusp) {
            Character sigma = nu_shift(pure_char(a2, "the second argument"), 1, 2);
            return GSp4Rep::make_XIa(a1.cusp->twisted(Character::nu(ws.ctx, {-1, 2})), sigma);
        }
        if (a2.marker == GL2Like::Marker::Cusp) {
            Character xi = nu_shift(pure_char(a1, "the first argument"), -1, 1);
            return GSp4Rep::make_IXa(xi, a2.cusp->twisted(Character::nu(ws.ctx, {1, 2})));
        }
        fail("unrecognized delta(...) shape; candidate rows: Va, IXa, XIa");
        throw Error("unreachable");
    }

    GSp4Rep named_tau() {
        expect(Tok::LParen, "(");
        if (!at(Tok::Word) || (peek().text != "S" && peek().text != "T"))
            fail("tau takes S or T as its first argument");
        const bool is_s = next().text == "S";
        expect(Tok::Comma, ",");
        GL2Like arg = gl2_like();
        expect(Tok::RParen, ")");
        if (arg.marker == GL2Like::Marker::Cusp)
            return is_s ? GSp4Rep::make_VIIIa(*arg.cusp) : GSp4Rep::make_VIIIb(*arg.cusp);
        Character sigma = nu_shift(pure_char(arg, "the tau argument"), 1, 2);
        return is_s ? GSp4Rep::make_VIa(sigma) : GSp4Rep::make_VIb(sigma);
    }

    GSp4Rep named_theta_minus() {
        expect(Tok::LParen, "(");
        GL2Like a1 = gl2_like();
        expect(Tok::Comma, ",");
        GL2Like a2 = gl2_like();
        expect(Tok::RParen, ")");
        if (a1.marker != GL2Like::Marker::St)
            fail("theta_- takes sigma St as its first argument");
        const Character sigma = a1.prefix;
        if (a2.marker == GL2Like::Marker::St) {
            Character xi = a2.prefix * sigma.inverse();
            return GSp4Rep::make_Va_star(sigma, xi);
        }
        if (a2.marker == GL2Like::Marker::Cusp)
            return GSp4Rep::make_XIa_star(sigma, a2.cusp->twisted(sigma.inverse()));
        fail("unrecognized theta_-(...) shape; candidate rows: Va*, XIa*");
        throw Error("unreachable");
    }

    GSp4Rep named_cuspidal(bool generic) {
        expect(Tok::LParen, "(");
        if (!at(Tok::Word)) fail("cuspidal representation needs a name");
        const std::string name = next().text;
        Character omega = Character::one(ws.ctx);
        Character twist = Character::one(ws.ctx);
        auto policy = CuspGSp4Data::LambdaPolicy::All;
        std::vector<CharacterK> lambdas;
        while (at(Tok::Semicolon)) {
            ++pos;
            if (!at(Tok::Word)) fail("expected omega / twist / lambdas");
            const std::string key = next().text;
            expect(Tok::Equals, "=");
            if (key == "omega") {
                omega = char_product();
            } else if (key == "twist") {
                twist = char_product();
            } else if (key == "lambdas") {
                if (at_word("all")) { ++pos; }
                else if (at_word("none")) { ++pos; policy = CuspGSp4Data::LambdaPolicy::None; }
                else {
                    policy = CuspGSp4Data::LambdaPolicy::Listed;
                    expect(Tok::LBracket, "[");
                    while (!at(Tok::RBracket)) {
                        lambdas.push_back(lambda_expr());
                        if (at(Tok::Comma)) ++pos;
                    }
                    expect(Tok::RBracket, "]");
                }
            } else {
                fail("unknown cuspidal attribute '" + key + "'");
            }
        }
        expect(Tok::RParen, ")");
        auto data = std::make_shared<CuspGSp4Data>(
            CuspGSp4Data{name, omega, policy, std::move(lambdas)});
        GSp4Rep rep = generic ? GSp4Rep::make_cuspidal_generic(std::move(data), ws.ctx)
                              : GSp4Rep::make_cuspidal_nongeneric(std::move(data), ws.ctx);
        return rep.twisted(twist);
    }

    CharacterK lambda_factor() {
        if (at_word("norm")) {
            ++pos;
            expect(Tok::LParen, "(");
            Character c = char_product();
            expect(Tok::RParen, ")");
            return CharacterK::norm_pullback(c);
        }
        if (at(Tok::Word)) {
            auto it = ws.lambda_names.find(peek().text);
            if (it != ws.lambda_names.end()) {
                ++pos;
                return it->second;
            }
        }
        fail("expected norm(...) or a declared character of K^x");
        throw Error("unreachable");
    }

    CharacterK lambda_expr() {
        CharacterK l = lambda_factor();
        while (at(Tok::Star)) {
            ++pos;
            l = l * lambda_factor();
        }
        return l;
    }

    GSp4Rep rep_expr() {
        if (at_word("L")) { ++pos; return named_L(); }
        if (at_word("delta")) { ++pos; return named_delta(); }
        if (at_word("tau")) { ++pos; return named_tau(); }
        if (at(Tok::ThetaMinus)) { ++pos; return named_theta_minus(); }
        if (at_word("cuspidal_generic")) { ++pos; return named_cuspidal(true); }
        if (at_word("cuspidal_nongeneric")) { ++pos; return named_cuspidal(false); }

        GL2Like lhs = gl2_like();
        if (lhs.marker == GL2Like::Marker::StG) return GSp4Rep::make_IVa(lhs.prefix);
        if (lhs.marker == GL2Like::Marker::OneG) return GSp4Rep::make_IVd(lhs.prefix);
        if (lhs.marker == GL2Like::Marker::NoneMark && at_word("x")) {
            ++pos;
            Character chi2 = char_product();
            expect(Tok::Rtimes, "|x");
            Character sigma = char_product();
            return GSp4Rep::make_I(lhs.prefix, chi2, sigma);
        }
        expect(Tok::Rtimes, "|x");
        switch (lhs.marker) {
        case GL2Like::Marker::St:
            return GSp4Rep::make_IIa(lhs.prefix, char_product());
        case GL2Like::Marker::One:
            return GSp4Rep::make_IIb(lhs.prefix, char_product());
        case GL2Like::Marker::Cusp:
            return GSp4Rep::make_X(*lhs.cusp, char_product());
        case GL2Like::Marker::NoneMark: {
            GL2Like rhs = gl2_like();
            if (rhs.marker == GL2Like::Marker::St)
                return GSp4Rep::make_IIIa(lhs.prefix, rhs.prefix);
            if (rhs.marker == GL2Like::Marker::One)
                return GSp4Rep::make_IIIb(lhs.prefix, rhs.prefix);
            if (rhs.marker == GL2Like::Marker::Cusp)
                return GSp4Rep::make_VII(lhs.prefix, *rhs.cusp);
            fail("the right side of |x must be sigma St, sigma one or a cuspidal name");
        }
        default:
            fail("unrecognized representation shape");
        }
        throw Error("unreachable");
    }

    void expect_end() {
        if (!at(Tok::End)) fail("trailing input after a complete expression");
    }
};

Parser make_parser(const Workspace& ws, std::string_view text) {
    if (!ws.ctx) throw ContextError("workspace without a declaration context");
    return Parser{ws, tokenize(text), 0};
}

} // namespace

bool is_reserved_word(const std::string& word) {
    return reserved(word) || word == "chi_{K/k}" || word == "theta_-" || word == "1";
}

Character parse_character(const Workspace& ws, std::string_view text) {
    Parser p = make_parser(ws, text);
    Character c = p.char_product();
    p.expect_end();
    return c;
}

GL2Rep parse_gl2(const Workspace& ws, std::string_view text) {
    Parser p = make_parser(ws, text);
    GL2Rep rep = p.gl2_expr();
    p.expect_end();
    return rep;
}

GSp4Rep parse_rep(const Workspace& ws, std::string_view text) {
    Parser p = make_parser(ws, text);
    GSp4Rep rep = p.rep_expr();
    p.expect_end();
    return rep;
}

CharacterK parse_lambda(const Workspace& ws, std::string_view text) {
    Parser p = make_parser(ws, text);
    CharacterK l = p.lambda_expr();
    p.expect_end();
    return l;
}

} // namespace gsp4
