/*
   Copyright 2026 the heckelab developers

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

#include "arith/scalar.hpp"

#include <cctype>
#include <sstream>

namespace heckelab {

std::string Mode::str() const {
    switch (tag) {
        case ModeTag::GenericT: return "generic-t";
        case ModeTag::CycloLocal: return "cyclo(e=" + std::to_string(e) + ")";
        case ModeTag::DegenerateP: return "degenerate-p(p=" + std::to_string(e) + ")";
        case ModeTag::LinearQuiver: return "linear-quiver";
    }
    return "?";
}

Scalar::Scalar(Mode m, Rat v) : mode_(m) {
    switch (m.tag) {
        case ModeTag::DegenerateP: v_ = std::move(v); break;
        case ModeTag::CycloLocal: v_ = RFC(Cyclo(m.e, std::move(v))); break;
        default: v_ = RFQ(std::move(v)); break;
    }
}

Scalar::Scalar(Mode m, RFQ v) : mode_(m), v_(std::move(v)) {
    if (m.tag == ModeTag::CycloLocal || m.tag == ModeTag::DegenerateP)
        throw std::domain_error("Scalar: payload does not match mode");
}

Scalar::Scalar(Mode m, RFC v) : mode_(m), v_(std::move(v)) {
    if (m.tag != ModeTag::CycloLocal)
        throw std::domain_error("Scalar: payload does not match mode");
}

const RFQ& Scalar::rfq() const { return std::get<RFQ>(v_); }
const RFC& Scalar::rfc() const { return std::get<RFC>(v_); }

Scalar Scalar::t_pow(Mode m, long k) {
    switch (m.tag) {
        case ModeTag::DegenerateP:
        case ModeTag::LinearQuiver:
            return one(m);
        case ModeTag::GenericT: {
            if (k >= 0) return Scalar(m, RFQ(Poly<Rat>::monomial(Rat(1), (std::size_t)k)));
            return Scalar(m, RFQ(Poly<Rat>(Rat(1)), Poly<Rat>::monomial(Rat(1), (std::size_t)(-k))));
        }
        case ModeTag::CycloLocal: {
            // t = x + zeta_e
            std::vector<Cyclo> c{Cyclo::zeta(m.e), Cyclo(m.e, Rat(1))};
            Poly<Cyclo> t{std::move(c)};
            if (k >= 0) return Scalar(m, RFC(t.pow((unsigned long)k)));
            return Scalar(m, RFC(Poly<Cyclo>(Cyclo(m.e, Rat(1))), t.pow((unsigned long)(-k))));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::x(Mode m) { return x_pow(m, 1); }

Scalar Scalar::x_pow(Mode m, long k) {
    if (k < 0) return x_pow(m, -k).inverse();
    switch (m.tag) {
        case ModeTag::LinearQuiver:
            return Scalar(m, RFQ(Poly<Rat>::monomial(Rat(1), (std::size_t)k)));
        case ModeTag::CycloLocal:
            return Scalar(m, RFC(Poly<Cyclo>::monomial(Cyclo(m.e, Rat(1)), (std::size_t)k)));
        default:
            throw std::domain_error("Scalar::x: mode has no deformation variable");
    }
}

Scalar Scalar::quantum(Mode m, long d) {
    if (m.t_is_one()) return of_int(m, d);
    if (d == 0) return zero(m);
    if (d > 0) {
        // 1 + t + ... + t^{d-1}
        Scalar s = zero(m);
        for (long j = 0; j < d; ++j) s += t_pow(m, j);
        return s;
    }
    // -(t^{-1} + ... + t^{d})
    Scalar s = zero(m);
    for (long j = d; j <= -1; ++j) s += t_pow(m, j);
    return -s;
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

bool Scalar::is_one() const {
    return std::visit([](const auto& v) { return v.is_one(); }, v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check(b);
    return a.v_ == b.v_;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    std::visit([](auto& v) { v = -v; }, r.v_);
    return r;
}

#define HL_SCALAR_BINOP(OP)                                                   \
    Scalar operator OP(const Scalar& a, const Scalar& b) {                    \
        a.check(b);                                                           \
        Scalar r = a;                                                         \
        if (std::holds_alternative<Rat>(a.v_))                                \
            r.v_ = std::get<Rat>(a.v_) OP std::get<Rat>(b.v_);                \
        else if (std::holds_alternative<RFQ>(a.v_))                           \
            r.v_ = std::get<RFQ>(a.v_) OP std::get<RFQ>(b.v_);                \
        else                                                                  \
            r.v_ = std::get<RFC>(a.v_) OP std::get<RFC>(b.v_);                \
        return r;                                                             \
    }

HL_SCALAR_BINOP(+)
HL_SCALAR_BINOP(-)
HL_SCALAR_BINOP(*)
HL_SCALAR_BINOP(/)
#undef HL_SCALAR_BINOP

Scalar Scalar::inverse() const {
    Scalar r = *this;
    std::visit([](auto& v) { v = v.inverse(); }, r.v_);
    return r;
}

Scalar Scalar::pow(long k) const {
    if (k == 0) return one(mode_);
    Scalar base = k > 0 ? *this : inverse();
    unsigned long n = k > 0 ? (unsigned long)k : (unsigned long)(-k);
    Scalar r = one(mode_);
    while (n) {
        if (n & 1) r *= base;
        if (n >>= 1) base *= base;
    }
    return r;
}

LocalClass Scalar::local_class() const {
    switch (mode_.tag) {
        case ModeTag::GenericT:
            throw std::domain_error("local_class: GenericT has no local ring");
        case ModeTag::DegenerateP: {
            const Rat& r = std::get<Rat>(v_);
            if (r.is_zero()) return LocalClass::NonUnitRegular;
            long v = r.p_valuation((unsigned long)mode_.e);
            return v < 0 ? LocalClass::Pole
                         : (v > 0 ? LocalClass::NonUnitRegular : LocalClass::Unit);
        }
        case ModeTag::LinearQuiver:
            return local_unit_test(std::get<RFQ>(v_));
        case ModeTag::CycloLocal:
            return local_unit_test(std::get<RFC>(v_));
    }
    throw std::logic_error("unreachable");
}

long Scalar::local_valuation() const {
    if (is_zero()) throw std::domain_error("local_valuation of zero");
    switch (mode_.tag) {
        case ModeTag::DegenerateP:
            return std::get<Rat>(v_).p_valuation((unsigned long)mode_.e);
        case ModeTag::LinearQuiver:
            return std::get<RFQ>(v_).valuation_at_zero();
        case ModeTag::CycloLocal:
            return std::get<RFC>(v_).valuation_at_zero();
        default:
            throw std::domain_error("local_valuation: GenericT has no local ring");
    }
}

Cyclo Scalar::value_x0_cyclo() const {
    if (mode_.tag != ModeTag::CycloLocal) throw std::domain_error("value_x0_cyclo: wrong mode");
    return std::get<RFC>(v_).value_at_zero();
}

Rat Scalar::value_x0_rat() const {
    if (mode_.tag != ModeTag::LinearQuiver) throw std::domain_error("value_x0_rat: wrong mode");
    return std::get<RFQ>(v_).value_at_zero();
}

Rat Scalar::rat_value() const {
    if (mode_.tag != ModeTag::DegenerateP) throw std::domain_error("rat_value: wrong mode");
    return std::get<Rat>(v_);
}

Rat Scalar::eval_t1() const {
    if (mode_.tag != ModeTag::GenericT) throw std::domain_error("eval_t1: wrong mode");
    return std::get<RFQ>(v_).eval(Rat(1));
}

Fp Scalar::mod_p() const {
    return Fp::from_rat((std::uint64_t)mode_.e, rat_value());
}

std::pair<Scalar, Scalar> Scalar::split_principal() const {
    switch (mode_.tag) {
        case ModeTag::LinearQuiver: {
            Laurent<Rat> pp = principal_part_at_zero(std::get<RFQ>(v_));
            RFQ p;
            for (long d = pp.low(); d <= pp.high(); ++d) {
                if (pp.coeff(d).is_zero()) continue;
                p += RFQ(Poly<Rat>(pp.coeff(d)), Poly<Rat>::monomial(Rat(1), (std::size_t)(-d)));
            }
            Scalar prin(mode_, p);
            return {prin, *this - prin};
        }
        case ModeTag::CycloLocal: {
            Laurent<Cyclo> pp = principal_part_at_zero(std::get<RFC>(v_));
            RFC p;
            for (long d = pp.low(); d <= pp.high(); ++d) {
                if (pp.coeff(d).is_zero()) continue;
                p += RFC(Poly<Cyclo>(pp.coeff(d)),
                         Poly<Cyclo>::monomial(Cyclo(mode_.e, Rat(1)), (std::size_t)(-d)));
            }
            Scalar prin(mode_, p);
            return {prin, *this - prin};
        }
        default:
            return {zero(mode_), *this};
    }
}

std::string Scalar::str() const {
    switch (mode_.tag) {
        case ModeTag::DegenerateP: return std::get<Rat>(v_).str();
        case ModeTag::GenericT: return std::get<RFQ>(v_).str("t");
        case ModeTag::LinearQuiver: return std::get<RFQ>(v_).str("x");
        case ModeTag::CycloLocal: return std::get<RFC>(v_).str("x");
    }
    throw std::logic_error("unreachable");
}

Laurent<Rat> cyclotomic_poly_laurent(int k) {
    return Laurent<Rat>::from_poly(cyclotomic_polynomial(k));
}

CycloFactorization factor_laurent_cyclotomic(const Laurent<Rat>& f) {
    if (f.is_zero()) throw std::domain_error("factor_laurent_cyclotomic: zero input");
    for (const auto& c : f.coeffs())
        if (!c.is_zero() && !c.is_integer())
            throw std::domain_error("factor_laurent_cyclotomic: integer coefficients required");
    CycloFactorization out;
    out.power_of_t = f.low();
    Poly<Rat> u = f.unit_part();
    long deg = u.degree();
    // phi(k) >= sqrt(k/2), so phi(k) <= deg forces k <= 2 deg^2.
    long kmax = 2 * deg * deg + 1;
    for (int k = 2; k <= kmax; ++k) {
        if (euler_phi(k) > deg) continue;
        const Poly<Rat>& phi = cyclotomic_polynomial(k);
        while (phi.divides(u)) {
            u = u.exact_div(phi);
            out.multiplicities[k]++;
        }
        deg = u.degree();
        if (deg == 0) break;
    }
    out.residual = Laurent<Rat>::from_poly(u);
    return out;
}

template <class K>
Laurent<K> principal_part_at_zero(const RatFunc<K>& f) {
    if (f.is_zero() || f.regular_at_zero()) return Laurent<K>();
    long m = -f.valuation_at_zero();  // pole order, > 0
    // f = num / (x^m * d1) with d1(0) != 0; series-expand num/d1 below x^m.
    const Poly<K>& num = f.num();
    long shift = f.den().trailing_degree();
    std::vector<K> d1(f.den().coeffs().begin() + shift, f.den().coeffs().end());
    K inv0 = d1[0].inverse();
    std::vector<K> s((std::size_t)m, K());
    for (long j = 0; j < m; ++j) {
        K acc = num.coeff((std::size_t)j);
        for (long k = 1; k <= j && k < (long)d1.size(); ++k) acc -= d1[(std::size_t)k] * s[(std::size_t)(j - k)];
        s[(std::size_t)j] = acc * inv0;
    }
    return Laurent<K>(-m, std::move(s));
}

template <class K>
LocalClass local_unit_test(const RatFunc<K>& f) {
    if (f.is_zero()) return LocalClass::NonUnitRegular;
    long v = f.valuation_at_zero();
    if (v < 0) return LocalClass::Pole;
    return v > 0 ? LocalClass::NonUnitRegular : LocalClass::Unit;
}

template Laurent<Rat> principal_part_at_zero(const RatFunc<Rat>&);
template Laurent<Cyclo> principal_part_at_zero(const RatFunc<Cyclo>&);
template LocalClass local_unit_test(const RatFunc<Rat>&);
template LocalClass local_unit_test(const RatFunc<Cyclo>&);

// ---------------------------------------------------------------------------
// Canonical text rendering: round-trip parser.
// Grammar (variable v is t or x depending on mode, coefficients may be
// rationals or parenthesised z-polynomials over Q):
//   scalar := poly | wrapped '/' wrapped
//   wrapped := '(' poly ')' | term
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := coeff ['*' vpow] | vpow
//   vpow := v ['^' int]
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string s;
    std::size_t i = 0;
    Mode mode;
    char var;

    explicit Parser(std::string text, Mode m)
        : s(std::move(text)), mode(m), var(m.var()[0]) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::domain_error("Scalar::parse: " + msg + " at offset " + std::to_string(i));
    }

    Rat parse_rat() {
        skip();
        std::size_t j = i;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
        if (k == j) fail("number expected");
        std::size_t end = k;
        if (end < s.size() && s[end] == '/') {
            std::size_t l = end + 1;
            while (l < s.size() && std::isdigit((unsigned char)s[l])) ++l;
            if (l > end + 1) end = l;
        }
        Rat r = Rat::parse(s.substr(i, end - i));
        i = end;
        return r;
    }

    long parse_int() {
        Rat r = parse_rat();
        if (!r.is_integer()) fail("integer expected");
        return (long)r.num().get_si();
    }

    // coefficient: rational, z-poly in parens (CycloLocal), or bare z-term
    Scalar parse_coeff() {
        skip();
        if (i < s.size() && s[i] == 'z') {
            if (mode.tag != ModeTag::CycloLocal) fail("unexpected z");
            ++i;
            long k = eat('^') ? parse_int() : 1;
            Poly<Rat> zp = Poly<Rat>::monomial(Rat(1), (std::size_t)k);
            return Scalar(mode, RFC(Poly<Cyclo>(Cyclo::from_poly(mode.e, zp))));
        }
        return Scalar(mode, parse_rat());
    }

    // term within a polynomial in the main variable
    Scalar parse_term() {
        skip();
        Scalar coeff = Scalar::one(mode);
        bool have_coeff = false;
        if (i < s.size() && s[i] == '(') {
            // parenthesised cyclotomic coefficient
            std::size_t depth = 0, j = i;
            do {
                if (s[j] == '(') ++depth;
                if (s[j] == ')') --depth;
                ++j;
            } while (j < s.size() && depth);
            std::string inner = s.substr(i + 1, j - i - 2);
            if (mode.tag == ModeTag::CycloLocal && inner.find('z') != std::string::npos) {
                coeff = Scalar(mode, RFC(Poly<Cyclo>(Cyclo::parse(mode.e, inner))));
            } else {
                Parser sub(inner, mode);
                coeff = sub.parse_poly();
                sub.skip();
                if (sub.i != inner.size()) fail("bad coefficient");
            }
            i = j;
            have_coeff = true;
        } else if (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == 'z')) {
            coeff = parse_coeff();
            have_coeff = true;
        }
        skip();
        if (have_coeff && !eat('*')) {
            return coeff;
        }
        skip();
        if (i < s.size() && s[i] == var) {
            ++i;
            long k = eat('^') ? parse_int() : 1;
            Scalar v = mode.tag == ModeTag::GenericT ? Scalar::t_pow(mode, k)
                                                     : Scalar::x_pow(mode, k);
            return coeff * v;
        }
        if (have_coeff) return coeff;
        fail("term expected");
    }

    Scalar parse_poly() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Scalar acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                bool minus = s[i] == '-';
                ++i;
                Scalar t = parse_term();
                acc = minus ? acc - t : acc + t;
            } else {
                break;
            }
        }
        return acc;
    }

    Scalar parse_scalar() {
        skip();
        Scalar num = Scalar::zero(mode);
        if (i < s.size() && s[i] == '(') {
            std::size_t save = i;
            std::size_t depth = 0, j = i;
            do {
                if (s[j] == '(') ++depth;
                if (s[j] == ')') --depth;
                ++j;
            } while (j < s.size() && depth);
            skip();
            if (j < s.size() && s[j] == '/') {
                std::string inner = s.substr(save + 1, j - save - 2);
                Parser np(inner, mode);
                num = np.parse_poly();
                i = j + 1;
                skip();
                if (!eat('(')) {
                    Scalar d = parse_term();
                    return num / d;
                }
                std::size_t d0 = i, depth2 = 1, k = i;
                while (k < s.size() && depth2) {
                    if (s[k] == '(') ++depth2;
                    if (s[k] == ')') --depth2;
                    ++k;
                }
                Parser dp(s.substr(d0, k - d0 - 1), mode);
                Scalar den = dp.parse_poly();
                i = k;
                return num / den;
            }
            i = save;
        }
        num = parse_poly();
        skip();
        if (i < s.size() && s[i] == '/') {
            ++i;
            skip();
            if (eat('(')) {
                std::size_t d0 = i, depth2 = 1, k = i;
                while (k < s.size() && depth2) {
                    if (s[k] == '(') ++depth2;
                    if (s[k] == ')') --depth2;
                    ++k;
                }
                Parser dp(s.substr(d0, k - d0 - 1), mode);
                Scalar den = dp.parse_poly();
                i = k;
                return num / den;
            }
            Scalar den = parse_term();
            return num / den;
        }
        return num;
    }
};

}  // namespace

Cyclo parse_cyclo_impl(int e, const std::string& text) {
    Mode m = Mode::cyclo(e);
    // reuse the polynomial parser with variable z by parsing over GenericT
    // in t and substituting; simplest: scan terms directly.
    Parser p(text, m);
    // parse as sum of (rat)*z^k terms
    Cyclo acc(e, Rat(0));
    p.skip();
    bool neg = false;
    if (p.eat('-'))
        neg = true;
    else
        p.eat('+');
    while (true) {
        p.skip();
        Rat coeff(1);
        bool have = false;
        if (p.i < text.size() && (std::isdigit((unsigned char)text[p.i]))) {
            coeff = p.parse_rat();
            have = true;
        }
        long k = 0;
        p.skip();
        if (have) p.eat('*');
        p.skip();
        if (p.i < text.size() && text[p.i] == 'z') {
            ++p.i;
            k = p.eat('^') ? p.parse_int() : 1;
        } else if (!have) {
            p.fail("cyclo term expected");
        }
        Cyclo term = Cyclo::from_poly(e, Poly<Rat>::monomial(neg ? -coeff : coeff, (std::size_t)k));
        acc += term;
        p.skip();
        if (p.i < text.size() && (text[p.i] == '+' || text[p.i] == '-')) {
            neg = text[p.i] == '-';
            ++p.i;
        } else {
            break;
        }
    }
    return acc;
}

Scalar Scalar::parse(Mode m, const std::string& text) {
    Parser p(text, m);
    Scalar r = p.parse_scalar();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace heckelab
