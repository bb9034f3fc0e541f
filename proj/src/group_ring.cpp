#include "brq/group_ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace brq {

namespace {

void require_compatible(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.base() != b.base()) throw std::invalid_argument("group ring: base-ring mismatch");
    if (a.lattice_rank() != b.lattice_rank())
        throw std::invalid_argument("group ring: lattice rank mismatch");
}

std::vector<std::string> default_names(std::size_t rank) {
    std::vector<std::string> names;
    names.reserve(rank);
    for (std::size_t i = 1; i <= rank; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

}  // namespace

GroupRingElement GroupRingElement::zero(const BaseRing& base, std::size_t rank) {
    return GroupRingElement(base, rank);
}

GroupRingElement GroupRingElement::constant(const BaseRing& base, std::size_t rank,
                                            const RingElem& c) {
    GroupRingElement e(base, rank);
    e.add_term(Exponent(rank, 0), c);
    return e;
}

GroupRingElement GroupRingElement::from_int(const BaseRing& base, std::size_t rank, const Int& n) {
    return constant(base, rank, base.from_int(n));
}

GroupRingElement GroupRingElement::monomial(const BaseRing& base, std::size_t rank,
                                            const RingElem& c, Exponent exp) {
    if (exp.size() != rank) throw std::invalid_argument("monomial: exponent length != rank");
    GroupRingElement e(base, rank);
    e.add_term(exp, c);
    return e;
}

GroupRingElement GroupRingElement::variable(const BaseRing& base, std::size_t rank,
                                            std::size_t i) {
    if (i < 1 || i > rank) throw std::invalid_argument("variable index out of range");
    Exponent e(rank, 0);
    e[i - 1] = 1;
    return monomial(base, rank, base.one(), e);
}

bool GroupRingElement::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    for (long v : e)
        if (v != 0) return false;
    return c.is_one();
}

void GroupRingElement::add_term(const Exponent& e, const RingElem& c) {
    if (e.size() != rank_) throw std::invalid_argument("add_term: exponent length != rank");
    if (c.ring() != base_) throw std::invalid_argument("add_term: coefficient in wrong ring");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        RingElem s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_compatible(*this, o);
    GroupRingElement out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(base_, rank_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    return *this + (-o);
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_compatible(*this, o);
    GroupRingElement out(base_, rank_);
    Exponent e(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (std::size_t k = 0; k < rank_; ++k) e[k] = e1[k] + e2[k];
            out.add_term(e, c1 * c2);
        }
    return out;
}

GroupRingElement GroupRingElement::scale(const RingElem& c) const {
    GroupRingElement out(base_, rank_);
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

GroupRingElement GroupRingElement::pow(long e) const {
    if (e < 0) {
        GroupRingElement inv = monomial_inverse();
        return inv.pow(-e);
    }
    GroupRingElement acc = from_int(base_, rank_, 1);
    GroupRingElement b = *this;
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue > 0) {
        if (ue & 1) acc = acc * b;
        b = b * b;
        ue >>= 1;
    }
    return acc;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    if (base_ != o.base_ || rank_ != o.rank_) return false;
    return terms_ == o.terms_;
}

GroupRingElement GroupRingElement::shift(const Exponent& shift) const {
    if (shift.size() != rank_) throw std::invalid_argument("shift: bad exponent length");
    GroupRingElement out(base_, rank_);
    Exponent e(rank_);
    for (const auto& [e1, c] : terms_) {
        for (std::size_t k = 0; k < rank_; ++k) e[k] = e1[k] + shift[k];
        out.terms_.emplace(e, c);
    }
    return out;
}

GroupRingElement GroupRingElement::monomial_inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("monomial_inverse: element is not a monomial");
    const auto& [e, c] = *terms_.begin();
    Exponent inv(rank_);
    for (std::size_t k = 0; k < rank_; ++k) inv[k] = -e[k];
    return monomial(base_, rank_, c.inverse(), inv);
}

std::string GroupRingElement::to_string() const { return to_string(default_names(rank_)); }

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
    if (names.size() != rank_) throw std::invalid_argument("to_string: name count != rank");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending lexicographic order: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool composite = cs.find_first_of("+-", 1) != std::string::npos;
        bool neg = !composite && !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (composite) cs = "(" + cs + ")";
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t k = 0; k < rank_; ++k) {
            if (e[k] == 0) continue;
            if (any_var) mono << "*";
            any_var = true;
            mono << names[k];
            if (e[k] != 1) mono << "^" << e[k];
        }
        if (!any_var) {
            os << cs;
        } else if (cs == "1") {
            os << mono.str();
        } else {
            os << cs << "*" << mono.str();
        }
    }
    return os.str();
}

UnitRecognition recognize_unit(const GroupRingElement& x) {
    const BaseRing& base = x.base();
    if (!base.is_integral_domain())
        throw std::domain_error(
            "recognize_unit: base ring " + base.to_string() +
            " is not a certified integral domain (use Z, F_p, or F_p[x]/(irreducible))");
    UnitRecognition out;
    out.coefficient = base.zero();
    if (x.is_zero()) {
        out.reason = "zero element";
        return out;
    }
    if (!x.is_monomial()) {
        out.reason = "not a monomial (" + std::to_string(x.term_count()) + " terms)";
        return out;
    }
    const auto& [e, c] = *x.terms().begin();
    if (!c.is_unit()) {
        out.reason = "coefficient " + c.to_string() + " is not a unit of " + base.to_string();
        return out;
    }
    out.is_unit = true;
    out.coefficient = c;
    out.exponent = e;
    return out;
}

// ---- parser ----

namespace {

struct GrCursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int read_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i)
            throw std::invalid_argument("expected integer at position " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }
    long read_int() {
        skip_ws();
        bool neg = consume('-');
        Int v = read_uint();
        if (neg) v = -v;
        if (!v.fits_slong_p()) throw std::invalid_argument("exponent out of range");
        return v.get_si();
    }
    std::string read_name() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i)
            throw std::invalid_argument("expected name at position " + std::to_string(start));
        return s.substr(start, i - start);
    }
};

struct GrParser {
    BaseRing base;
    std::size_t rank;
    const std::vector<std::string>& names;
    GrCursor& cur;

    GroupRingElement atom() {
        if (cur.consume('(')) {
            GroupRingElement e = expr();
            if (!cur.consume(')')) throw std::invalid_argument("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(cur.peek())))
            return GroupRingElement::from_int(base, rank, cur.read_uint());
        std::string nm = cur.read_name();
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == nm) return GroupRingElement::variable(base, rank, k + 1);
        if (base.tag() == BaseRing::Tag::UnivariateQuotient && nm == base.variable())
            return GroupRingElement::constant(base, rank, base.quotient_variable());
        throw std::invalid_argument("unknown symbol '" + nm + "'");
    }

    GroupRingElement factor() {
        GroupRingElement a = atom();
        if (cur.consume('^')) return a.pow(cur.read_int());
        return a;
    }

    GroupRingElement term() {
        GroupRingElement a = factor();
        while (cur.consume('*')) a = a * factor();
        return a;
    }

    GroupRingElement expr() {
        bool neg = cur.consume('-');
        GroupRingElement acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (cur.consume('+'))
                acc = acc + term();
            else if (cur.consume('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }
};

}  // namespace

GroupRingElement parse_group_ring_element(const BaseRing& base, std::size_t rank,
                                          const std::vector<std::string>& names,
                                          const std::string& text) {
    if (names.size() != rank) throw std::invalid_argument("parse: name count != rank");
    GrCursor cur{text};
    GrParser parser{base, rank, names, cur};
    GroupRingElement out = parser.expr();
    if (!cur.eof()) throw std::invalid_argument("trailing input in element: '" + text + "'");
    return out;
}

GroupRingElement parse_group_ring_element(const BaseRing& base, std::size_t rank,
                                          const std::string& text) {
    return parse_group_ring_element(base, rank, default_names(rank), text);
}

// ---- matrices ----

GroupRingMatrix::GroupRingMatrix(const BaseRing& base, std::size_t lattice_rank, std::size_t n)
    : base_(base), rank_(lattice_rank), n_(n) {
    entries_.assign(n * n, GroupRingElement::zero(base, lattice_rank));
}

GroupRingMatrix GroupRingMatrix::identity(const BaseRing& base, std::size_t rank, std::size_t n) {
    GroupRingMatrix m(base, rank, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::from_int(base, rank, 1);
    return m;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
    if (n_ != o.n_ || base_ != o.base_ || rank_ != o.rank_)
        throw std::invalid_argument("GroupRingMatrix: dimension or base mismatch");
    GroupRingMatrix out(base_, rank_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            GroupRingElement acc = GroupRingElement::zero(base_, rank_);
            for (std::size_t k = 0; k < n_; ++k) {
                const GroupRingElement& a = (*this)(i, k);
                const GroupRingElement& b = o(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc = acc + a * b;
            }
            out(i, j) = acc;
        }
    return out;
}

GroupRingMatrix GroupRingMatrix::operator-(const GroupRingMatrix& o) const {
    if (n_ != o.n_ || base_ != o.base_ || rank_ != o.rank_)
        throw std::invalid_argument("GroupRingMatrix: dimension or base mismatch");
    GroupRingMatrix out(base_, rank_, n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) out.entries_[i] = entries_[i] - o.entries_[i];
    return out;
}

GroupRingMatrix GroupRingMatrix::scale(const GroupRingElement& c) const {
    GroupRingMatrix out(base_, rank_, n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) out.entries_[i] = entries_[i] * c;
    return out;
}

bool GroupRingMatrix::operator==(const GroupRingMatrix& o) const {
    return n_ == o.n_ && base_ == o.base_ && rank_ == o.rank_ && entries_ == o.entries_;
}

GroupRingElement GroupRingMatrix::determinant() const {
    if (n_ == 0) return GroupRingElement::from_int(base_, rank_, 1);
    if (n_ == 1) return (*this)(0, 0);
    GroupRingElement acc = GroupRingElement::zero(base_, rank_);
    for (std::size_t j = 0; j < n_; ++j) {
        if ((*this)(0, j).is_zero()) continue;
        GroupRingMatrix minor(base_, rank_, n_ - 1);
        for (std::size_t i = 1; i < n_; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n_; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = (*this)(i, c);
            }
        }
        GroupRingElement term = (*this)(0, j) * minor.determinant();
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

GroupRingMatrix GroupRingMatrix::adjugate() const {
    GroupRingMatrix out(base_, rank_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            GroupRingMatrix minor(base_, rank_, n_ - 1);
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n_; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = (*this)(r, c);
                }
                ++rr;
            }
            GroupRingElement cof = minor.determinant();
            out(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return out;
}

}  // namespace brq
