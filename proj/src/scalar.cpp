#include "liebial/scalar.hpp"

#include <cctype>
#include <sstream>

namespace liebial {

ExpPoly ExpPoly::constant(int dim, const Rational& c) {
    ExpPoly p(dim);
    if (c != 0) {
        TermKey k{std::vector<Rational>(dim, 0), std::vector<unsigned>(dim, 0)};
        p.terms_[k] = c;
    }
    return p;
}

ExpPoly ExpPoly::variable(int dim, int i) {
    if (i < 0 || i >= dim)
        throw std::invalid_argument("variable index out of range");
    ExpPoly p(dim);
    TermKey k{std::vector<Rational>(dim, 0), std::vector<unsigned>(dim, 0)};
    k.pow[i] = 1;
    p.terms_[k] = 1;
    return p;
}

ExpPoly ExpPoly::exponential(int dim, std::vector<Rational> freq) {
    if (static_cast<int>(freq.size()) != dim)
        throw std::invalid_argument("frequency vector length mismatch");
    ExpPoly p(dim);
    TermKey k{std::move(freq), std::vector<unsigned>(dim, 0)};
    p.terms_[k] = 1;
    return p;
}

Rational ExpPoly::leadingCoeff() const {
    if (terms_.empty())
        return 0;
    return terms_.rbegin()->second;
}

void ExpPoly::addTerm(const TermKey& k, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    if (dim_ != o.dim_)
        throw std::invalid_argument("dimension mismatch");
    ExpPoly r = *this;
    for (const auto& [k, c] : o.terms_)
        r.addTerm(k, c);
    return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const { return *this + (-o); }

ExpPoly ExpPoly::operator-() const {
    ExpPoly r(dim_);
    for (const auto& [k, c] : terms_)
        r.terms_[k] = -c;
    return r;
}

ExpPoly ExpPoly::scaled(const Rational& c) const {
    ExpPoly r(dim_);
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_[k] = v * c;
    return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    if (dim_ != o.dim_)
        throw std::invalid_argument("dimension mismatch");
    ExpPoly r(dim_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            TermKey k = ka;
            for (int i = 0; i < dim_; ++i) {
                k.freq[i] += kb.freq[i];
                k.pow[i] += kb.pow[i];
            }
            r.addTerm(k, ca * cb);
        }
    }
    return r;
}

ExpPoly ExpPoly::derivative(int i) const {
    if (i < 0 || i >= dim_)
        throw std::invalid_argument("coordinate index out of range");
    ExpPoly r(dim_);
    for (const auto& [k, c] : terms_) {
        // d/dx_i (x^m e^{<l,x>}) = m_i x^{m - e_i} e^{<l,x>} + l_i x^m e^{<l,x>}
        if (k.pow[i] > 0) {
            TermKey k2 = k;
            k2.pow[i] -= 1;
            r.addTerm(k2, c * k.pow[i]);
        }
        if (k.freq[i] != 0)
            r.addTerm(k, c * k.freq[i]);
    }
    return r;
}

ScalarFn::ScalarFn(ExpPoly num, ExpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.dim() != den_.dim())
        throw std::invalid_argument("dimension mismatch");
    if (den_.isZero())
        throw std::domain_error("division by zero");
    normalize();
}

void ScalarFn::normalize() {
    if (num_.isZero()) {
        den_ = ExpPoly::constant(num_.dim(), 1);
        return;
    }
    Rational lead = den_.leadingCoeff();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool ScalarFn::constantValue(Rational* out) const {
    if (num_.isZero()) {
        if (out)
            *out = 0;
        return true;
    }
    auto isConstPoly = [](const ExpPoly& p) {
        if (p.terms().size() != 1)
            return false;
        const TermKey& k = p.terms().begin()->first;
        for (const auto& f : k.freq)
            if (f != 0)
                return false;
        for (auto m : k.pow)
            if (m != 0)
                return false;
        return true;
    };
    if (!isConstPoly(num_) || !isConstPoly(den_))
        return false;
    if (out)
        *out = num_.terms().begin()->second / den_.terms().begin()->second;
    return true;
}

ScalarFn ScalarFn::operator+(const ScalarFn& o) const {
    return ScalarFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarFn ScalarFn::operator-(const ScalarFn& o) const { return *this + (-o); }

ScalarFn ScalarFn::operator*(const ScalarFn& o) const {
    return ScalarFn(num_ * o.num_, den_ * o.den_);
}

ScalarFn ScalarFn::operator/(const ScalarFn& o) const {
    if (o.isZero())
        throw std::domain_error("division by zero");
    return ScalarFn(num_ * o.den_, den_ * o.num_);
}

ScalarFn ScalarFn::operator-() const {
    ScalarFn r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarFn ScalarFn::scaled(const Rational& c) const {
    ScalarFn r(dim());
    if (c == 0)
        return r;
    return ScalarFn(num_.scaled(c), den_);
}

ScalarFn ScalarFn::derivative(int i) const {
    // quotient rule; denominator squared
    return ScalarFn(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

bool ScalarFn::operator==(const ScalarFn& o) const {
    return (num_ * o.den_ - o.num_ * den_).isZero();
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, int dim, const std::vector<std::string>& coords)
        : text_(text), dim_(dim), coords_(coords) {}

    ScalarFn run() {
        ScalarFn f = parseExpr();
        skipWs();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skipWs();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skipWs();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ScalarFn parseExpr() {
        ScalarFn f = parseTerm();
        for (;;) {
            if (eat('+'))
                f = f + parseTerm();
            else if (eat('-'))
                f = f - parseTerm();
            else
                return f;
        }
    }

    ScalarFn parseTerm() {
        ScalarFn f = parseFactor();
        for (;;) {
            if (eat('*'))
                f = f * parseFactor();
            else if (eat('/')) {
                size_t at = pos_;
                ScalarFn g = parseFactor();
                if (g.isZero())
                    throw ParseError("division by zero", at);
                f = f / g;
            } else
                return f;
        }
    }

    ScalarFn parseFactor() {
        ScalarFn base = parseBase();
        if (eat('^')) {
            size_t at = pos_;
            skipWs();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected natural-number exponent", at);
            unsigned long n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                n = n * 10 + (text_[pos_++] - '0');
            ScalarFn r = ScalarFn::constant(dim_, 1);
            for (unsigned long i = 0; i < n; ++i)
                r = r * base;
            return r;
        }
        return base;
    }

    ScalarFn parseBase() {
        skipWs();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -parseFactor();
        }
        if (c == '(') {
            ++pos_;
            ScalarFn f = parseExpr();
            if (!eat(')'))
                throw ParseError("expected ')'", pos_);
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return parseRational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parseIdentifierOrExp();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ScalarFn parseRational() {
        Rational n = parseInteger();
        size_t save = pos_;
        if (eat('/')) {
            skipWs();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                Rational d = parseInteger();
                if (d == 0)
                    throw ParseError("zero denominator", save);
                return ScalarFn::constant(dim_, n / d);
            }
            pos_ = save;  // the '/' belongs to the enclosing term
        }
        return ScalarFn::constant(dim_, n);
    }

    Rational parseInteger() {
        skipWs();
        Rational v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    ScalarFn parseIdentifierOrExp() {
        size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        if (name == "exp") {
            if (!eat('('))
                throw ParseError("expected '(' after exp", pos_);
            size_t argAt = pos_;
            ScalarFn arg = parseExpr();
            if (!eat(')'))
                throw ParseError("expected ')'", pos_);
            return makeExponential(arg, argAt);
        }
        for (int i = 0; i < dim_; ++i)
            if (coords_[i] == name)
                return ScalarFn::variable(dim_, i);
        throw ParseError("unknown identifier '" + name + "'", at);
    }

    /// The argument of exp must be a homogeneous linear form with rational
    /// coefficients (no constant part, no exp factors, no denominators).
    ScalarFn makeExponential(const ScalarFn& arg, size_t at) {
        // a monic constant denominator is exactly 1
        if (!(arg.den() == ExpPoly::constant(dim_, 1)))
            throw ParseError("exp argument must be linear in the coordinates", at);
        const ScalarFn& flat = arg;
        std::vector<Rational> freq(dim_, 0);
        for (const auto& [k, c] : flat.num().terms()) {
            for (const auto& f : k.freq)
                if (f != 0)
                    throw ParseError("exp argument must not contain exp factors", at);
            int deg = 0, idx = -1;
            for (int i = 0; i < dim_; ++i) {
                deg += static_cast<int>(k.pow[i]);
                if (k.pow[i] == 1)
                    idx = i;
            }
            if (deg > 1)
                throw ParseError("exp argument must have total degree <= 1", at);
            if (deg == 0)
                throw ParseError("exp argument must have no constant term", at);
            freq[idx] += c;
        }
        return ScalarFn::exponential(dim_, std::move(freq));
    }

    const std::string& text_;
    int dim_;
    const std::vector<std::string>& coords_;
    size_t pos_ = 0;
};

}  // namespace

ScalarFn parseScalar(const std::string& text, int dim, const std::vector<std::string>& coords) {
    if (static_cast<int>(coords.size()) != dim)
        throw std::invalid_argument("coordinate name count must equal dim");
    return Parser(text, dim, coords).run();
}

// ---------------------------------------------------------------------------
// Printing

std::string printRational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

/// Print a homogeneous linear form <freq, x>; used inside exp(...).
std::string printLinear(const std::vector<Rational>& freq, const std::vector<std::string>& coords) {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < freq.size(); ++i) {
        if (freq[i] == 0)
            continue;
        Rational a = freq[i];
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        if (a != 1)
            out += printRational(a) + "*";
        out += coords[i];
        first = false;
    }
    return out;
}

std::string printTermBody(const TermKey& k, const std::vector<std::string>& coords) {
    std::string out;
    for (size_t i = 0; i < k.pow.size(); ++i) {
        if (k.pow[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += coords[i];
        if (k.pow[i] > 1)
            out += "^" + std::to_string(k.pow[i]);
    }
    bool hasExp = false;
    for (const auto& f : k.freq)
        if (f != 0)
            hasExp = true;
    if (hasExp) {
        if (!out.empty())
            out += "*";
        out += "exp(" + printLinear(k.freq, coords) + ")";
    }
    return out;
}

}  // namespace

std::string printExpPoly(const ExpPoly& p, const std::vector<std::string>& coords) {
    if (p.isZero())
        return "0";
    std::string out;
    bool first = true;
    // descending term order: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        std::string body = printTermBody(it->first, coords);
        if (body.empty())
            out += printRational(c);
        else if (c == 1)
            out += body;
        else
            out += printRational(c) + "*" + body;
        first = false;
    }
    return out;
}

std::string printScalar(const ScalarFn& f, const std::vector<std::string>& coords) {
    ExpPoly unit = ExpPoly::constant(f.dim(), 1);
    if (f.den() == unit)
        return printExpPoly(f.num(), coords);
    return "(" + printExpPoly(f.num(), coords) + ")/(" + printExpPoly(f.den(), coords) + ")";
}

}  // namespace liebial
