#include "autlin/parse.hpp"

#include <cctype>
#include <set>

namespace autlin {

namespace {

[[noreturn]] void syntax_error(const std::string& msg, std::size_t pos) {
    fail(Err::SyntaxError, msg + " at position " + std::to_string(pos));
}

/// Recursive-descent evaluator into fractions over a fixed ring.
class ExprParser {
public:
    ExprParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    Frac parse_all() {
        Frac v = expr();
        skip_ws();
        if (pos_ != s_.size()) syntax_error("trailing input", pos_);
        return v;
    }

    Frac expr() {
        Frac v = term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

private:
    RingPtr ring_;
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Frac term() {
        Frac v = unary();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                Frac d = unary();
                if (d.is_zero()) syntax_error("division by zero", pos_);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Frac unary() {
        skip_ws();
        if (eat('-')) return -unary();
        eat('+');
        return power();
    }

    Frac power() {
        Frac base = primary();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool negative = eat('-');
            std::size_t start = pos_;
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            if (pos_ == start) syntax_error("exponent expected", pos_);
            return base.pow(negative ? -e : e);
        }
        return base;
    }

    Frac primary() {
        skip_ws();
        if (pos_ >= s_.size()) syntax_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Frac v = expr();
            if (!eat(')')) syntax_error("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            const Field& F = *ring_->field;
            return Frac::of(Polynomial::constant(ring_, F.from_mpq(mpq_class(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                name += s_[pos_++];
            int idx = ring_->index_of(name);
            if (idx >= 0) return Frac::of(Polynomial::variable(ring_, std::size_t(idx)));
            const FieldPtr& F = ring_->field;
            if (F->kind() == FieldKind::RationalFunctions) {
                const auto& fv = F->function_vars();
                if (std::find(fv.begin(), fv.end(), name) != fv.end())
                    return Frac::of(Polynomial::constant(ring_, F->param(name)));
            }
            syntax_error("unknown identifier '" + name + "'", start);
        }
        syntax_error(std::string("unexpected character '") + c + "'", pos_);
    }
};

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

FieldPtr parse_field(const std::string& text) {
    std::string t = trimmed(text);
    if (t == "Q") return Field::rationals();
    if (t == "Qt") return Field::rational_functions(Field::rationals(), {"t"});
    if (t.rfind("Fp:", 0) == 0) {
        try {
            return Field::prime(std::stoll(t.substr(3)));
        } catch (const std::exception&) {
            fail(Err::SyntaxError, "bad prime in field string '" + t + "'");
        }
    }
    fail(Err::SyntaxError, "unknown field '" + t + "' (use Q, Fp:<p>, Qt)");
}

Frac parse_frac(const RingPtr& ring, const std::string& text) {
    return ExprParser(ring, text).parse_all();
}

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
    Frac f = parse_frac(ring, text);
    require(f.den.is_constant(), Err::SyntaxError,
            "expected a polynomial, found a denominator: " + text);
    const Field& F = *ring->field;
    return f.num.scaled(F.inv(f.den.constant_value()));
}

Scalar parse_scalar(const FieldPtr& F, const std::string& text) {
    if (F->kind() == FieldKind::RationalFunctions) {
        RingPtr base_ring = PolyRing::make(F->base(), F->function_vars());
        Frac f = parse_frac(base_ring, text);
        return F->from_frac(f.num, f.den);
    }
    RingPtr r0 = PolyRing::make(F, {});
    Frac f = parse_frac(r0, text);
    const Field& K = *F;
    return K.div(f.num.constant_value(), f.den.constant_value());
}

PlaneAut parse_aut(const FieldPtr& F, const std::string& text) {
    std::string t = trimmed(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        fail(Err::SyntaxError, "automorphism literal must look like '(expr, expr)'");
    std::vector<std::string> parts = split_top_level(t.substr(1, t.size() - 2), ',');
    require(parts.size() == 2, Err::SyntaxError, "automorphism literal needs two coordinates");
    RingPtr ring = PlaneAut::plane_ring(F);
    return PlaneAut(parse_poly(ring, parts[0]), parse_poly(ring, parts[1]));
}

Direction parse_direction(const FieldPtr& F, const std::string& text) {
    std::string t = trimmed(text);
    if (t == "d0") return Direction::d0(F);
    if (t == "dinf") return Direction::dinf(F);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        std::vector<std::string> parts = split_top_level(t.substr(1, t.size() - 2), ';');
        require(parts.size() == 2, Err::SyntaxError, "direction literal needs (a;b)");
        return Direction::make(F, parse_scalar(F, parts[0]), parse_scalar(F, parts[1]));
    }
    fail(Err::SyntaxError, "direction must be d0, dinf or (a;b): " + t);
}

Mat2 parse_mat2(const FieldPtr& F, const std::string& text) {
    std::string t = trimmed(text);
    if (t.size() < 4 || t.front() != '[' || t.back() != ']')
        fail(Err::SyntaxError, "matrix literal must look like [[a,b],[c,d]]");
    std::vector<std::string> rows = split_top_level(t.substr(1, t.size() - 2), ',');
    require(rows.size() == 2, Err::SyntaxError, "matrix literal needs two rows");
    std::vector<Scalar> entries;
    for (const auto& row : rows) {
        std::string r = trimmed(row);
        require(r.size() >= 2 && r.front() == '[' && r.back() == ']', Err::SyntaxError,
                "matrix row must look like [a,b]");
        std::vector<std::string> es = split_top_level(r.substr(1, r.size() - 2), ',');
        require(es.size() == 2, Err::SyntaxError, "matrix row needs two entries");
        entries.push_back(parse_scalar(F, es[0]));
        entries.push_back(parse_scalar(F, es[1]));
    }
    return Mat2{F, entries[0], entries[1], entries[2], entries[3]};
}

MixedWord parse_word(const FieldPtr& F, const std::string& text) {
    std::string t = trimmed(text);
    Mat2 s = Mat2::identity(F);
    if (t.rfind("s=", 0) == 0) {
        std::size_t depth = 0, i = 2;
        for (; i < t.size(); ++i) {
            if (t[i] == '[') ++depth;
            if (t[i] == ']') {
                --depth;
                if (depth == 0) break;
            }
        }
        require(i < t.size(), Err::SyntaxError, "unterminated linear part");
        s = parse_mat2(F, t.substr(2, i - 1));
        t = trimmed(t.substr(i + 1));
    }
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        fail(Err::SyntaxError, "word literal must look like [(d0,t^2),...]");
    std::string inner = trimmed(t.substr(1, t.size() - 2));
    std::vector<Letter> letters;
    if (!inner.empty()) {
        RingPtr lr = PlaneAut::letter_ring(F);
        for (const auto& part : split_top_level(inner, ',')) {
            std::string p = trimmed(part);
            require(p.size() >= 2 && p.front() == '(' && p.back() == ')', Err::SyntaxError,
                    "letter must look like (direction, f)");
            // the direction may itself be parenthesized with ';', so split on the
            // first top-level ',' of the letter body
            std::vector<std::string> bits = split_top_level(p.substr(1, p.size() - 2), ',');
            require(bits.size() == 2, Err::SyntaxError, "letter needs (direction, f)");
            letters.push_back(
                Letter{parse_direction(F, bits[0]), parse_poly(lr, bits[1])});
        }
    }
    return MixedWord(s, std::move(letters));
}

SubgroupDescriptor parse_descriptor(const FieldPtr& F, const std::string& text) {
    std::string t = trimmed(text);
    auto args_of = [&](const std::string& head) -> std::optional<std::string> {
        if (t.rfind(head + "(", 0) == 0 && t.back() == ')')
            return t.substr(head.size() + 1, t.size() - head.size() - 2);
        return std::nullopt;
    };
    if (t == "Trivial" || t == "1") return SubgroupDescriptor::trivial(F);
    if (t == "PlusMinusId" || t == "PMId") return SubgroupDescriptor::plus_minus_id(F);
    if (t == "U") return SubgroupDescriptor::u(F);
    if (t == "B") return SubgroupDescriptor::b(F);
    if (t == "SL2") return SubgroupDescriptor::sl2(F);
    if (t == "GL2") return SubgroupDescriptor::gl2(F);
    if (auto q = args_of("SO")) {
        RingPtr ring = PlaneAut::plane_ring(F);
        Polynomial form = parse_poly(ring, *q);
        Scalar qa = form.coeff({2, 0}), qb = form.coeff({1, 1}), qc = form.coeff({0, 2});
        Polynomial rebuilt = Polynomial::monomial(ring, {2, 0}, qa) +
                             Polynomial::monomial(ring, {1, 1}, qb) +
                             Polynomial::monomial(ring, {0, 2}, qc);
        require(rebuilt == form, Err::SyntaxError, "SO needs a binary quadratic form");
        return SubgroupDescriptor::so(F, qa, qb, qc);
    }
    if (auto l = args_of("DiagonalCyclic")) return SubgroupDescriptor::diagonal_cyclic(F, parse_scalar(F, *l));
    if (auto l = args_of("diag")) return SubgroupDescriptor::diagonal_cyclic(F, parse_scalar(F, *l));
    if (auto ms = args_of("FiniteList")) {
        std::vector<Mat2> gens;
        for (const auto& part : split_top_level(*ms, ';')) gens.push_back(parse_mat2(F, part));
        return SubgroupDescriptor::finite_list(F, std::move(gens));
    }
    if (auto ring = args_of("SL2")) return SubgroupDescriptor::ring_sl2(F, *ring);
    fail(Err::UnsupportedDescriptor, "unknown subgroup descriptor '" + t + "'");
}

LatticeSubgroup parse_lattice(const std::string& text) {
    std::vector<std::string> parts = split_top_level(text, ',');
    // auto-detect the function-field variables from the identifiers
    std::set<std::string> names;
    for (const auto& part : parts) {
        std::string cur;
        for (char c : part) {
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                cur += c;
            } else {
                if (!cur.empty() && !std::isdigit(static_cast<unsigned char>(cur[0])))
                    names.insert(cur);
                cur.clear();
            }
        }
        if (!cur.empty() && !std::isdigit(static_cast<unsigned char>(cur[0]))) names.insert(cur);
    }
    std::vector<std::string> vars(names.begin(), names.end());
    RingPtr ring = PolyRing::make(Field::rationals(), vars);
    std::vector<Frac> gens;
    for (const auto& part : parts) gens.push_back(parse_frac(ring, part));
    return LatticeSubgroup(ring, std::move(gens));
}

std::vector<GenPower> parse_genword(const std::string& text) {
    std::vector<GenPower> word;
    std::size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        char g = text[i];
        require(g == 's' || g == 't', Err::SyntaxError,
                "probe words use the generators s and t");
        ++i;
        long e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = i < text.size() && text[i] == '-';
            if (neg) ++i;
            std::size_t start = i;
            e = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                e = e * 10 + (text[i++] - '0');
            require(i > start, Err::SyntaxError, "exponent expected in probe word");
            if (neg) e = -e;
        }
        word.push_back({g, e});
        skip();
    }
    return word;
}

} // namespace autlin
