#include "brq/det_ring.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace brq {

DetRing::DetRing(BaseRing b, std::size_t n_) : base(std::move(b)), n(n_) {
    if (n < 1) throw std::invalid_argument("DetRing: n must be >= 1");
}

std::size_t DetRing::var_index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("DetRing::var_index");
    return (i - 1) * n + (j - 1);
}

std::vector<std::string> DetRing::var_names() const {
    std::vector<std::string> names;
    names.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            names.push_back("X" + std::to_string(i) + std::to_string(j));
    return names;
}

GroupRingElement DetRing::var(std::size_t i, std::size_t j) const {
    Exponent e(var_count(), 0);
    e[var_index(i, j)] = 1;
    return GroupRingElement::monomial(base, var_count(), base.one(), e);
}

GroupRingElement determinant_poly(const DetRing& ring) {
    if (ring.n > 5) throw std::invalid_argument("determinant_poly: n is capped at 5");
    std::size_t n = ring.n;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    GroupRingElement det = ring.zero_poly();
    // iterate all permutations with their signs
    std::vector<bool> used(n, false);
    std::vector<std::size_t> stack;
    // simple recursive enumeration
    struct Rec {
        std::size_t n;
        const DetRing& ring;
        GroupRingElement& det;
        std::vector<std::size_t> perm;
        std::vector<bool> used;
        Rec(std::size_t n_, const DetRing& r, GroupRingElement& d)
            : n(n_), ring(r), det(d), perm(n_), used(n_, false) {}
        void go(std::size_t row, int sign) {
            if (row == n) {
                Exponent e(ring.var_count(), 0);
                for (std::size_t i = 0; i < n; ++i) e[ring.var_index(i + 1, perm[i] + 1)] += 1;
                det.add_term(e, ring.base.from_int(sign));
                return;
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (used[c]) continue;
                used[c] = true;
                perm[row] = c;
                // each used column before c contributes one inversion
                int inversions = 0;
                for (std::size_t d = c + 1; d < n; ++d)
                    if (used[d]) ++inversions;
                go(row + 1, inversions % 2 == 0 ? sign : -sign);
                used[c] = false;
            }
        }
    } rec(n, ring, det);
    rec.go(0, 1);
    return det;
}

GroupRingElement substitute_scalar_matrix(const GroupRingElement& f, const DetRing& ring) {
    GroupRingElement out(ring.base, 1);
    for (const auto& [e, c] : f.terms()) {
        bool keep = true;
        long tdeg = 0;
        for (std::size_t i = 1; i <= ring.n && keep; ++i)
            for (std::size_t j = 1; j <= ring.n && keep; ++j) {
                long ex = e[ring.var_index(i, j)];
                if (ex == 0) continue;
                if (i == j)
                    tdeg += ex;
                else
                    keep = false;
            }
        if (keep) out.add_term(Exponent{tdeg}, c);
    }
    return out;
}

GroupRingElement shift_diagonal_substitution(const GroupRingElement& f, const DetRing& ring) {
    GroupRingElement out = ring.zero_poly();
    GroupRingElement x11 = ring.var(1, 1);
    for (const auto& [e, c] : f.terms()) {
        GroupRingElement term = GroupRingElement::constant(ring.base, ring.var_count(), c);
        for (std::size_t i = 1; i <= ring.n; ++i)
            for (std::size_t j = 1; j <= ring.n; ++j) {
                long ex = e[ring.var_index(i, j)];
                if (ex == 0) continue;
                if (ex < 0) throw std::invalid_argument("shift substitution needs a polynomial");
                GroupRingElement factor =
                    (i == j && i >= 2) ? ring.var(i, j) + x11 : ring.var(i, j);
                term = term * factor.pow(ex);
            }
        out = out + term;
    }
    return out;
}

std::optional<GroupRingElement> divide_exact(const GroupRingElement& f,
                                             const GroupRingElement& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    const auto& lead = *d.terms().rbegin();  // lex-leading term
    RingElem lead_inv = lead.second.inverse();
    GroupRingElement q = GroupRingElement::zero(f.base(), f.lattice_rank());
    GroupRingElement r = f;
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().rbegin();
        Exponent shift(re.size());
        for (std::size_t k = 0; k < re.size(); ++k) {
            shift[k] = re[k] - lead.first[k];
            if (shift[k] < 0) return std::nullopt;
        }
        GroupRingElement t =
            GroupRingElement::monomial(f.base(), f.lattice_rank(), rc * lead_inv, shift);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

// ---- DetRingElement ----

DetRingElement::DetRingElement(DetRing ring, GroupRingElement numerator, long det_power)
    : ring_(std::move(ring)), numerator_(std::move(numerator)), det_power_(det_power) {
    if (numerator_.lattice_rank() != ring_.var_count() || numerator_.base() != ring_.base)
        throw std::invalid_argument("DetRingElement: numerator in wrong polynomial ring");
    if (det_power_ < 0) throw std::invalid_argument("DetRingElement: negative denominator power");
    for (const auto& [e, c] : numerator_.terms())
        for (long ex : e)
            if (ex < 0) throw std::invalid_argument("DetRingElement: numerator must be polynomial");
    canonicalize();
}

void DetRingElement::canonicalize() {
    if (numerator_.is_zero()) {
        det_power_ = 0;
        return;
    }
    if (det_power_ == 0) return;
    GroupRingElement det = determinant_poly(ring_);
    while (det_power_ > 0) {
        auto q = divide_exact(numerator_, det);
        if (!q) break;
        numerator_ = *q;
        --det_power_;
    }
}

DetRingElement DetRingElement::from_poly(const DetRing& ring, GroupRingElement numerator) {
    return DetRingElement(ring, std::move(numerator), 0);
}

DetRingElement DetRingElement::constant(const DetRing& ring, const RingElem& c) {
    return from_poly(ring, GroupRingElement::constant(ring.base, ring.var_count(), c));
}

DetRingElement DetRingElement::det(const DetRing& ring, long power) {
    if (power >= 0) return from_poly(ring, determinant_poly(ring).pow(power));
    return DetRingElement(ring, GroupRingElement::from_int(ring.base, ring.var_count(), 1),
                          -power);
}

DetRingElement DetRingElement::operator+(const DetRingElement& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("DetRingElement: ring mismatch");
    long p = std::max(det_power_, o.det_power_);
    GroupRingElement det = determinant_poly(ring_);
    GroupRingElement a = numerator_ * det.pow(p - det_power_);
    GroupRingElement b = o.numerator_ * det.pow(p - o.det_power_);
    return DetRingElement(ring_, a + b, p);
}

DetRingElement DetRingElement::operator-() const {
    return DetRingElement(ring_, -numerator_, det_power_);
}

DetRingElement DetRingElement::operator-(const DetRingElement& o) const { return *this + (-o); }

DetRingElement DetRingElement::operator*(const DetRingElement& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("DetRingElement: ring mismatch");
    return DetRingElement(ring_, numerator_ * o.numerator_, det_power_ + o.det_power_);
}

DetRingElement DetRingElement::pow(long e) const {
    if (e >= 0) {
        DetRingElement acc = constant(ring_, ring_.base.one());
        DetRingElement b = *this;
        long ue = e;
        while (ue > 0) {
            if (ue & 1) acc = acc * b;
            b = b * b;
            ue >>= 1;
        }
        return acc;
    }
    auto phi = try_phi_form(*this);
    if (!phi || !phi->a.is_unit())
        throw std::domain_error("pow: negative power of a non-(a*det^m) element");
    DetRingElement inv =
        DetRingElement::det(ring_, -phi->m) * constant(ring_, phi->a.inverse());
    return inv.pow(-e);
}

bool DetRingElement::operator==(const DetRingElement& o) const {
    return ring_ == o.ring_ && det_power_ == o.det_power_ && numerator_ == o.numerator_;
}

bool DetRingElement::is_one() const { return det_power_ == 0 && numerator_.is_one(); }

std::string DetRingElement::to_string() const {
    std::string num = numerator_.to_string(ring_.var_names());
    if (det_power_ == 0) return num;
    std::ostringstream os;
    os << "(" << num << ")/det^" << det_power_;
    return os.str();
}

// ---- recognition ----

std::optional<PhiImage> try_phi_form(const DetRingElement& w) {
    if (w.is_zero()) return std::nullopt;
    GroupRingElement s = substitute_scalar_matrix(w.numerator(), w.ring());
    if (s.term_count() != 1) return std::nullopt;
    const auto& [e, a] = *s.terms().begin();
    long d = e[0];
    if (d % static_cast<long>(w.ring().n) != 0) return std::nullopt;
    long k = d / static_cast<long>(w.ring().n);
    GroupRingElement candidate =
        determinant_poly(w.ring()).pow(k).scale(a);
    if (candidate != w.numerator()) return std::nullopt;
    return PhiImage{a, k - w.det_power()};
}

PhiRecognition recognize_phi_image(const DetRingElement& w, const DetRingElement& w_inv) {
    if (!(w * w_inv).is_one())
        throw std::domain_error("recognize_phi_image: w * w_inv != 1, not a unit witness");
    PhiRecognition out;
    GroupRingElement s = substitute_scalar_matrix(w.numerator(), w.ring());
    if (s.term_count() != 1) {
        out.witness = "scalar-matrix substitution is not a single term (" +
                      std::to_string(s.term_count()) + " terms)";
        return out;
    }
    const auto& [e, a] = *s.terms().begin();
    long d = e[0];
    long n = static_cast<long>(w.ring().n);
    if (d % n != 0) {
        out.witness = "scalar-matrix degree " + std::to_string(d) + " is not a multiple of n";
        return out;
    }
    long k = d / n;
    if (!a.is_unit()) {
        out.witness = "candidate coefficient " + a.to_string() + " is not a unit of " +
                      w.ring().base.to_string();
        return out;
    }
    GroupRingElement candidate = determinant_poly(w.ring()).pow(k).scale(a);
    if (candidate != w.numerator()) {
        out.witness = "no exact match against a*det^k at the forced k = " + std::to_string(k);
        return out;
    }
    out.is_image = true;
    out.image = PhiImage{a, k - w.det_power()};
    return out;
}

NonzerodivisorReport det_nonzerodivisor_probe(const DetRing& ring, std::size_t samples,
                                              unsigned long seed) {
    NonzerodivisorReport rep;
    rep.samples = samples;
    GroupRingElement det = determinant_poly(ring);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<long> expo(0, 2);
    std::uniform_int_distribution<long> coeff(1, 12);
    for (std::size_t s = 0; s < samples; ++s) {
        GroupRingElement f = ring.zero_poly();
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            Exponent e(ring.var_count(), 0);
            for (auto& v : e) v = expo(rng);
            f.add_term(e, ring.base.from_int(coeff(rng)));
        }
        if (f.is_zero()) continue;
        if ((det * f).is_zero())
            rep.violations.push_back(f.to_string(ring.var_names()));
    }
    return rep;
}

// ---- parser ----

namespace {

struct DrCursor {
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

struct DrParser {
    const DetRing& ring;
    DrCursor& cur;
    std::vector<std::string> names;

    DetRingElement atom() {
        if (cur.consume('(')) {
            DetRingElement e = expr();
            if (!cur.consume(')')) throw std::invalid_argument("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            return DetRingElement::constant(ring, ring.base.from_int(cur.read_uint()));
        }
        std::string nm = cur.read_name();
        if (nm == "det") return DetRingElement::det(ring, 1);
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == nm) {
                Exponent e(ring.var_count(), 0);
                e[k] = 1;
                return DetRingElement::from_poly(
                    ring, GroupRingElement::monomial(ring.base, ring.var_count(), ring.base.one(),
                                                     e));
            }
        if (ring.base.tag() == BaseRing::Tag::UnivariateQuotient && nm == ring.base.variable())
            return DetRingElement::constant(ring, ring.base.quotient_variable());
        throw std::invalid_argument("unknown symbol '" + nm + "'");
    }

    DetRingElement factor() {
        DetRingElement a = atom();
        if (cur.consume('^')) return a.pow(cur.read_int());
        return a;
    }

    DetRingElement term() {
        DetRingElement a = factor();
        for (;;) {
            if (cur.consume('*')) {
                a = a * factor();
            } else if (cur.consume('/')) {
                DetRingElement b = factor();
                auto phi = try_phi_form(b);
                if (!phi || !phi->a.is_unit())
                    throw std::invalid_argument("division only by unit multiples of det powers");
                a = a * DetRingElement::det(ring, -phi->m) *
                    DetRingElement::constant(ring, phi->a.inverse());
            } else {
                break;
            }
        }
        return a;
    }

    DetRingElement expr() {
        bool neg = cur.consume('-');
        DetRingElement acc = term();
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

DetRingElement parse_det_ring_element(const DetRing& ring, const std::string& text) {
    DrCursor cur{text};
    DrParser parser{ring, cur, ring.var_names()};
    DetRingElement out = parser.expr();
    if (!cur.eof()) throw std::invalid_argument("trailing input in element: '" + text + "'");
    return out;
}

}  // namespace brq
