#include "ramify/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramify {

RingPtr make_ring(Prime p, std::vector<std::string> vars, MonomialOrder order) {
    if (vars.empty() || vars.size() > kMaxVars)
        throw std::invalid_argument("ring must have between 1 and 32 variables");
    for (const auto& v : vars)
        if (v.empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name: " + vars[i]);
    return std::make_shared<const PolyRing>(PolyRing{p, std::move(vars), order});
}

bool same_ring(const PolyRing& a, const PolyRing& b) noexcept {
    if (&a == &b) return true;
    return a.p == b.p && a.order == b.order && a.vars == b.vars;
}

void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (!a.ring() || !b.ring() || !same_ring(*a.ring(), *b.ring()))
        throw std::invalid_argument("polynomials belong to different rings");
}

MultiPoly MultiPoly::constant(RingPtr ring, Fp c) {
    MultiPoly r(std::move(ring));
    if (c.p != r.ring_->p.value()) throw std::invalid_argument("constant from a different prime field");
    if (!c.is_zero()) r.t_.push_back(Term{Monomial::one(r.ring_->nvars()), c});
    return r;
}

MultiPoly MultiPoly::constant(const RingPtr& ring, std::int64_t c) {
    return constant(ring, fp_of(c, ring->p));
}

MultiPoly MultiPoly::variable(RingPtr ring, int i, int exp) {
    MultiPoly r(ring);
    if (exp == 0) return constant(ring, 1);
    r.t_.push_back(Term{Monomial::var(ring->nvars(), i, exp), fp_of(1, ring->p)});
    return r;
}

MultiPoly MultiPoly::from_term(RingPtr ring, Monomial m, Fp c) {
    MultiPoly r(std::move(ring));
    if (m.n != r.ring_->nvars()) throw std::invalid_argument("monomial arity does not match ring");
    if (c.p != r.ring_->p.value()) throw std::invalid_argument("coefficient from a different prime field");
    if (!c.is_zero()) r.t_.push_back(Term{m, c});
    return r;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    MultiPoly r(std::move(ring));
    const MonomialOrder ord = r.ring_->order;
    for (const auto& t : terms) {
        if (t.m.n != r.ring_->nvars()) throw std::invalid_argument("monomial arity does not match ring");
        if (t.c.p != r.ring_->p.value()) throw std::invalid_argument("coefficient from a different prime field");
    }
    std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
        return cmp(a.m, b.m, ord) > 0;
    });
    r.t_.reserve(terms.size());
    for (auto& t : terms) {
        if (!r.t_.empty() && r.t_.back().m == t.m) {
            r.t_.back().c += t.c;
            if (r.t_.back().c.is_zero()) r.t_.pop_back();
        } else if (!t.c.is_zero()) {
            r.t_.push_back(t);
        }
    }
    return r;
}

int MultiPoly::total_degree() const noexcept {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, int(t.m.deg));
    return d;
}

const Monomial& MultiPoly::lm() const {
    if (t_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return t_[0].m;
}

const Fp& MultiPoly::lc() const {
    if (t_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return t_[0].c;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    const MonomialOrder ord = a.ring_->order;
    MultiPoly r(a.ring_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        int c = cmp(a.t_[i].m, b.t_[j].m, ord);
        if (c > 0) {
            r.t_.push_back(a.t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(b.t_[j++]);
        } else {
            Fp s = a.t_[i].c + b.t_[j].c;
            if (!s.is_zero()) r.t_.push_back(Term{a.t_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
    return r;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const Fp& c) const {
    MultiPoly r(ring_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        Fp cc = t.c * c;
        if (!cc.is_zero()) r.t_.push_back(Term{t.m * m, cc});
    }
    return r; // monomial multiplication preserves the term order
}

MultiPoly MultiPoly::sub_scaled(const Fp& c, const Monomial& m, const MultiPoly& g) const {
    const MonomialOrder ord = ring_->order;
    MultiPoly r(ring_);
    r.t_.reserve(t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
        Monomial gm = g.t_[j].m * m;
        int cc = cmp(t_[i].m, gm, ord);
        if (cc > 0) {
            r.t_.push_back(t_[i++]);
        } else if (cc < 0) {
            Fp s = -(c * g.t_[j].c);
            if (!s.is_zero()) r.t_.push_back(Term{gm, s});
            ++j;
        } else {
            Fp s = t_[i].c - c * g.t_[j].c;
            if (!s.is_zero()) r.t_.push_back(Term{gm, s});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < g.t_.size(); ++j) {
        Fp s = -(c * g.t_[j].c);
        if (!s.is_zero()) r.t_.push_back(Term{g.t_[j].m * m, s});
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (const auto& ta : a.t_)
        for (const auto& tb : b.t_) prod.push_back(Term{ta.m * tb.m, ta.c * tb.c});
    return MultiPoly::from_terms(a.ring_, std::move(prod));
}

MultiPoly operator*(const Fp& s, const MultiPoly& a) {
    if (s.p != a.ring_->p.value()) throw std::invalid_argument("scalar from a different prime field");
    MultiPoly r(a.ring_);
    if (s.is_zero()) return r;
    r.t_.reserve(a.t_.size());
    for (const auto& t : a.t_) r.t_.push_back(Term{t.m, t.c * s});
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (t_.empty()) return *this;
    return inv(t_[0].c) * *this;
}

MultiPoly MultiPoly::tail() const {
    MultiPoly r(ring_);
    if (t_.size() > 1) r.t_.assign(t_.begin() + 1, t_.end());
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw std::invalid_argument("derivative variable out of range");
    MultiPoly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        if (t.m.e[var] == 0) continue;
        Fp c = mul_small(t.c, t.m.e[var]);
        if (c.is_zero()) continue;
        Monomial m = t.m;
        m.e[var] -= 1;
        m.deg -= 1;
        r.t_.push_back(Term{m, c});
    }
    return r; // dividing the same variable out of distinct monomials keeps them distinct and ordered
}

Fp MultiPoly::eval(std::span<const Fp> point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw std::invalid_argument("evaluation point arity does not match ring");
    Fp acc = fp_of(0, ring_->p);
    for (const auto& pt : point)
        if (pt.p != ring_->p.value()) throw std::invalid_argument("evaluation point from a different prime field");
    for (const auto& t : t_) {
        Fp v = t.c;
        for (int i = 0; i < ring_->nvars(); ++i)
            if (t.m.e[i]) v *= pow(point[i], t.m.e[i]);
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::eval_partial(const std::vector<std::pair<int, Fp>>& assignments) const {
    for (const auto& [i, x] : assignments) {
        if (i < 0 || i >= ring_->nvars()) throw std::invalid_argument("assignment variable out of range");
        if (x.p != ring_->p.value()) throw std::invalid_argument("assignment from a different prime field");
    }
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
        Fp c = t.c;
        Monomial m = t.m;
        for (const auto& [i, x] : assignments) {
            if (m.e[i]) {
                c *= pow(x, m.e[i]);
                m.deg -= m.e[i];
                m.e[i] = 0;
            }
        }
        if (!c.is_zero()) out.push_back(Term{m, c});
    }
    return from_terms(ring_, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    return a.t_ == b.t_;
}

int poly_cmp(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    const MonomialOrder ord = a.ring()->order;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = cmp(ta[i].m, tb[i].m, ord);
        if (c != 0) return c;
        if (ta[i].c.v != tb[i].c.v) return ta[i].c.v < tb[i].c.v ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

MultiPoly one_like(const MultiPoly& a) { return MultiPoly::constant(a.ring(), 1); }

MultiPoly mul_small(const MultiPoly& a, std::uint64_t n) {
    return fp_of(static_cast<std::int64_t>(n % a.ring()->p.value()), a.ring()->p) * a;
}

std::string MultiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        if (!first) os << "+";
        first = false;
        bool printed = false;
        if (t.c.v != 1 || t.m.is_one()) {
            os << t.c.v;
            printed = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        std::int64_t v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            v %= static_cast<std::int64_t>(ring->p.value()); // tolerate long literals
        }
        return v;
    }

    int var_index() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected variable name");
        std::string name = s.substr(start, pos - start);
        for (int i = 0; i < ring->nvars(); ++i)
            if (ring->vars[i] == name) return i;
        fail("unknown variable '" + name + "'");
    }

    // term := [int] ('*'? factor)* with factor := var ['^' int]
    MultiPoly term() {
        skip_ws();
        Fp coeff = fp_of(1, ring->p);
        Monomial mono = Monomial::one(ring->nvars());
        bool any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = fp_of(integer(), ring->p);
            any = true;
        }
        while (true) {
            skip_ws();
            std::size_t save = pos;
            if (eat('*')) skip_ws();
            if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                int vi = var_index();
                int exp = 1;
                if (eat('^')) exp = static_cast<int>(integer());
                if (exp < 0 || exp > 255) fail("exponent out of range");
                mono = mono * Monomial::var(ring->nvars(), vi, exp);
                any = true;
            } else {
                pos = save;
                break;
            }
        }
        if (!any) fail("expected term");
        return MultiPoly::from_term(ring, mono, coeff);
    }

    MultiPoly parse() {
        MultiPoly acc(ring);
        bool neg = eat('-');
        while (true) {
            MultiPoly t = term();
            acc = neg ? acc - t : acc + t;
            skip_ws();
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else break;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return acc;
    }
};

} // namespace

MultiPoly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    return p.parse();
}

} // namespace ramify
