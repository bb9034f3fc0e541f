#include "brq/base_ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace brq {

struct BaseRingImpl {
    BaseRing::Tag tag;
    Int modulus;                                // IntegersMod / PrimeField
    std::shared_ptr<const BaseRingImpl> inner;  // quotient
    std::vector<RingElem> modulus_poly;         // quotient, monic, degree >= 1
    std::string variable;                       // quotient variable name
};

BaseRing make_base_ring(std::shared_ptr<const BaseRingImpl> impl) {
    return BaseRing(std::move(impl));
}

namespace {

// ---- generic univariate polynomial helpers over RingElem ----

void poly_trim(std::vector<RingElem>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<RingElem> poly_mul(const std::vector<RingElem>& a, const std::vector<RingElem>& b,
                               const BaseRing& ring) {
    if (a.empty() || b.empty()) return {};
    std::vector<RingElem> out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    poly_trim(out);
    return out;
}

// Reduce p modulo the monic polynomial f (in place).
void poly_mod_monic(std::vector<RingElem>& p, const std::vector<RingElem>& f) {
    std::size_t df = f.size() - 1;
    poly_trim(p);
    while (p.size() > df) {
        RingElem lead = p.back();
        std::size_t shift = p.size() - 1 - df;
        for (std::size_t i = 0; i < f.size(); ++i) p[shift + i] = p[shift + i] - lead * f[i];
        poly_trim(p);
    }
}

// ---- small matrices over a commutative ring (cofactor determinant) ----

using RingMat = std::vector<std::vector<RingElem>>;

RingElem ring_det(const RingMat& m, const BaseRing& ring) {
    std::size_t n = m.size();
    if (n == 0) return ring.one();
    if (n == 1) return m[0][0];
    RingElem acc = ring.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        RingMat minor(n - 1, std::vector<RingElem>(n - 1, ring.zero()));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i - 1][cc++] = m[i][c];
            }
        }
        RingElem term = m[0][j] * ring_det(minor, ring);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RingElem ring_cofactor(const RingMat& m, std::size_t i, std::size_t j, const BaseRing& ring) {
    std::size_t n = m.size();
    RingMat minor(n - 1, std::vector<RingElem>(n - 1, ring.zero()));
    std::size_t rr = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == j) continue;
            minor[rr][cc++] = m[r][c];
        }
        ++rr;
    }
    RingElem d = ring_det(minor, ring);
    return ((i + j) % 2 == 0) ? d : -d;
}

// ---- irreducibility over F_p (Rabin's test) ----

using FpPoly = std::vector<Int>;  // coefficients mod p, ascending, trimmed

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    fp_trim(out);
    return out;
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, const Int& p) {
    fp_trim(a);
    Int lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), f.back().get_mpz_t(), p.get_mpz_t());
    while (a.size() >= f.size()) {
        Int c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            a[shift + i] = (a[shift + i] - c * f[i]) % p;
            if (a[shift + i] < 0) a[shift + i] += p;
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& f, const Int& p) {
    FpPoly result{1};
    base = fp_mod(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_mod(fp_mul(result, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, const Int& p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = (a[i] - b[i]) % p;
        if (a[i] < 0) a[i] += p;
    }
    fp_trim(a);
    return a;
}

bool fp_irreducible(const FpPoly& f, const Int& p) {
    std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    FpPoly x{0, 1};
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    if (!fp_sub(fp_powmod(x, pd, f, p), fp_mod(x, f, p), p).empty()) return false;
    std::vector<std::size_t> primes;
    std::size_t rem = d;
    for (std::size_t q = 2; q * q <= rem; ++q)
        if (rem % q == 0) {
            primes.push_back(q);
            while (rem % q == 0) rem /= q;
        }
    if (rem > 1) primes.push_back(rem);
    for (std::size_t q : primes) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d / q));
        FpPoly g = fp_gcd(fp_sub(fp_powmod(x, pk, f, p), x, p), f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

bool impl_equal(const BaseRingImpl& a, const BaseRingImpl& b) {
    if (a.tag != b.tag) return false;
    switch (a.tag) {
        case BaseRing::Tag::Integers:
            return true;
        case BaseRing::Tag::IntegersMod:
        case BaseRing::Tag::PrimeField:
            return a.modulus == b.modulus;
        case BaseRing::Tag::UnivariateQuotient: {
            if (!impl_equal(*a.inner, *b.inner)) return false;
            if (a.modulus_poly.size() != b.modulus_poly.size()) return false;
            for (std::size_t i = 0; i < a.modulus_poly.size(); ++i)
                if (a.modulus_poly[i] != b.modulus_poly[i]) return false;
            return a.variable == b.variable;
        }
    }
    return false;
}

// Render c0 + c1*v + ... (ascending degrees, suppressing units) where each
// coefficient renders via its own to_string. Composite coefficients are
// parenthesized so the output stays unambiguous.
std::string render_poly(const std::vector<RingElem>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        const RingElem& c = coeffs[d];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool composite = cs.find_first_of("+-", 1) != std::string::npos;
        bool neg = !composite && !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (composite) cs = "(" + cs + ")";
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        if (d == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace

// ---- BaseRing ----

BaseRing BaseRing::integers() {
    auto impl = std::make_shared<BaseRingImpl>();
    impl->tag = Tag::Integers;
    return make_base_ring(impl);
}

BaseRing BaseRing::integers_mod(const Int& m) {
    if (m < 2) throw std::invalid_argument("integers_mod: modulus must be >= 2");
    auto impl = std::make_shared<BaseRingImpl>();
    impl->tag = Tag::IntegersMod;
    impl->modulus = m;
    return make_base_ring(impl);
}

BaseRing BaseRing::prime_field(const Int& p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("prime_field: " + p.get_str() + " is not prime");
    auto impl = std::make_shared<BaseRingImpl>();
    impl->tag = Tag::PrimeField;
    impl->modulus = p;
    return make_base_ring(impl);
}

BaseRing BaseRing::univariate_quotient(const BaseRing& inner, std::vector<RingElem> modulus,
                                       std::string var) {
    poly_trim(modulus);
    if (modulus.size() < 2)
        throw std::invalid_argument("univariate_quotient: modulus must have degree >= 1");
    for (const auto& c : modulus)
        if (c.ring() != inner)
            throw std::invalid_argument("univariate_quotient: modulus coefficients in wrong ring");
    if (!modulus.back().is_one())
        throw std::invalid_argument("univariate_quotient: modulus must be monic");
    auto impl = std::make_shared<BaseRingImpl>();
    impl->tag = Tag::UnivariateQuotient;
    impl->inner = inner.impl_;
    impl->modulus_poly = std::move(modulus);
    impl->variable = std::move(var);
    return make_base_ring(impl);
}

BaseRing::Tag BaseRing::tag() const { return impl_->tag; }

const Int& BaseRing::modulus_int() const {
    if (impl_->tag != Tag::IntegersMod && impl_->tag != Tag::PrimeField)
        throw std::logic_error("modulus_int: not a residue ring");
    return impl_->modulus;
}

BaseRing BaseRing::inner() const {
    if (impl_->tag != Tag::UnivariateQuotient) throw std::logic_error("inner: not a quotient");
    return make_base_ring(impl_->inner);
}

const std::vector<RingElem>& BaseRing::modulus_poly() const {
    if (impl_->tag != Tag::UnivariateQuotient)
        throw std::logic_error("modulus_poly: not a quotient");
    return impl_->modulus_poly;
}

std::size_t BaseRing::modulus_degree() const { return modulus_poly().size() - 1; }

const std::string& BaseRing::variable() const {
    if (impl_->tag != Tag::UnivariateQuotient) throw std::logic_error("variable: not a quotient");
    return impl_->variable;
}

bool BaseRing::operator==(const BaseRing& other) const {
    if (impl_ == other.impl_) return true;
    return impl_equal(*impl_, *other.impl_);
}

bool BaseRing::is_integral_domain() const {
    switch (impl_->tag) {
        case Tag::Integers:
        case Tag::PrimeField:
            return true;
        case Tag::IntegersMod:
            return false;
        case Tag::UnivariateQuotient: {
            BaseRing in = inner();
            if (in.tag() != Tag::PrimeField) return false;
            const Int& p = in.modulus_int();
            FpPoly f;
            for (const auto& c : impl_->modulus_poly) f.push_back(c.integer_value());
            return fp_irreducible(f, p);
        }
    }
    return false;
}

RingElem BaseRing::zero() const { return from_int(0); }
RingElem BaseRing::one() const { return from_int(1); }

RingElem BaseRing::from_int(const Int& n) const {
    switch (impl_->tag) {
        case Tag::Integers:
            return RingElem(*this, n);
        case Tag::IntegersMod:
        case Tag::PrimeField: {
            Int r = n % impl_->modulus;
            if (r < 0) r += impl_->modulus;
            return RingElem(*this, r);
        }
        case Tag::UnivariateQuotient: {
            RingElem c = inner().from_int(n);
            std::vector<RingElem> p;
            if (!c.is_zero()) p.push_back(c);
            return RingElem(*this, std::move(p));
        }
    }
    throw std::logic_error("from_int: bad tag");
}

RingElem BaseRing::from_poly(const std::vector<RingElem>& coeffs) const {
    if (impl_->tag != Tag::UnivariateQuotient)
        throw std::logic_error("from_poly: not a quotient ring");
    BaseRing in = inner();
    std::vector<RingElem> p = coeffs;
    for (const auto& c : p)
        if (c.ring() != in) throw std::invalid_argument("from_poly: coefficient in wrong ring");
    poly_mod_monic(p, impl_->modulus_poly);
    return RingElem(*this, std::move(p));
}

RingElem BaseRing::quotient_variable() const {
    BaseRing in = inner();
    return from_poly({in.zero(), in.one()});
}

std::string BaseRing::to_string() const {
    switch (impl_->tag) {
        case Tag::Integers:
            return "Z";
        case Tag::IntegersMod:
            return "Z/" + impl_->modulus.get_str();
        case Tag::PrimeField:
            return "F" + impl_->modulus.get_str();
        case Tag::UnivariateQuotient:
            return inner().to_string() + "[" + impl_->variable + "]/(" +
                   render_poly(impl_->modulus_poly, impl_->variable) + ")";
    }
    return "?";
}

// ---- RingElem ----

namespace {
void require_same_ring(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring())
        throw std::invalid_argument("ring element operation: base-ring mismatch");
}
}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(*this, o);
    switch (ring_.tag()) {
        case BaseRing::Tag::Integers:
            return RingElem(ring_, z_ + o.z_);
        case BaseRing::Tag::IntegersMod:
        case BaseRing::Tag::PrimeField:
            return ring_.from_int(z_ + o.z_);
        case BaseRing::Tag::UnivariateQuotient: {
            std::vector<RingElem> p = poly_;
            if (p.size() < o.poly_.size()) p.resize(o.poly_.size(), ring_.inner().zero());
            for (std::size_t i = 0; i < o.poly_.size(); ++i) p[i] = p[i] + o.poly_[i];
            poly_trim(p);
            return RingElem(ring_, std::move(p));
        }
    }
    throw std::logic_error("RingElem::+");
}

RingElem RingElem::operator-() const {
    switch (ring_.tag()) {
        case BaseRing::Tag::Integers:
            return RingElem(ring_, -z_);
        case BaseRing::Tag::IntegersMod:
        case BaseRing::Tag::PrimeField:
            return ring_.from_int(-z_);
        case BaseRing::Tag::UnivariateQuotient: {
            std::vector<RingElem> p = poly_;
            for (auto& c : p) c = -c;
            return RingElem(ring_, std::move(p));
        }
    }
    throw std::logic_error("RingElem::neg");
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(*this, o);
    switch (ring_.tag()) {
        case BaseRing::Tag::Integers:
            return RingElem(ring_, z_ * o.z_);
        case BaseRing::Tag::IntegersMod:
        case BaseRing::Tag::PrimeField:
            return ring_.from_int(z_ * o.z_);
        case BaseRing::Tag::UnivariateQuotient: {
            std::vector<RingElem> p = poly_mul(poly_, o.poly_, ring_.inner());
            poly_mod_monic(p, ring_.modulus_poly());
            return RingElem(ring_, std::move(p));
        }
    }
    throw std::logic_error("RingElem::*");
}

bool RingElem::operator==(const RingElem& o) const {
    if (ring_ != o.ring_) return false;
    if (ring_.tag() == BaseRing::Tag::UnivariateQuotient) return poly_ == o.poly_;
    return z_ == o.z_;
}

bool RingElem::operator<(const RingElem& o) const {
    require_same_ring(*this, o);
    if (ring_.tag() == BaseRing::Tag::UnivariateQuotient) {
        if (poly_.size() != o.poly_.size()) return poly_.size() < o.poly_.size();
        for (std::size_t i = poly_.size(); i-- > 0;)
            if (poly_[i] != o.poly_[i]) return poly_[i] < o.poly_[i];
        return false;
    }
    return z_ < o.z_;
}

bool RingElem::is_zero() const {
    if (ring_.tag() == BaseRing::Tag::UnivariateQuotient) return poly_.empty();
    return z_ == 0;
}

bool RingElem::is_one() const { return *this == ring_.one(); }

namespace {

// Multiplication-by-u matrix on the power basis of inner[x]/(f).
std::vector<std::vector<RingElem>> mult_matrix(const RingElem& u) {
    const BaseRing& ring = u.ring();
    BaseRing in = ring.inner();
    std::size_t k = ring.modulus_degree();
    std::vector<std::vector<RingElem>> m(k, std::vector<RingElem>(k, in.zero()));
    RingElem pw = u;
    RingElem x = ring.quotient_variable();
    for (std::size_t j = 0; j < k; ++j) {
        const auto& coeffs = pw.poly_coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i) m[i][j] = coeffs[i];
        pw = pw * x;
    }
    return m;
}

}  // namespace

bool RingElem::is_unit() const {
    switch (ring_.tag()) {
        case BaseRing::Tag::Integers:
            return z_ == 1 || z_ == -1;
        case BaseRing::Tag::IntegersMod: {
            Int g;
            mpz_gcd(g.get_mpz_t(), z_.get_mpz_t(), ring_.modulus_int().get_mpz_t());
            return g == 1;
        }
        case BaseRing::Tag::PrimeField:
            return z_ != 0;
        case BaseRing::Tag::UnivariateQuotient:
            return ring_det(mult_matrix(*this), ring_.inner()).is_unit();
    }
    return false;
}

RingElem RingElem::inverse() const {
    switch (ring_.tag()) {
        case BaseRing::Tag::Integers:
            if (z_ == 1 || z_ == -1) return *this;
            throw std::domain_error("inverse: " + z_.get_str() + " is not a unit of Z");
        case BaseRing::Tag::IntegersMod:
        case BaseRing::Tag::PrimeField: {
            Int r;
            if (mpz_invert(r.get_mpz_t(), z_.get_mpz_t(), ring_.modulus_int().get_mpz_t()) == 0)
                throw std::domain_error("inverse: " + z_.get_str() + " is not a unit mod " +
                                        ring_.modulus_int().get_str());
            return RingElem(ring_, r);
        }
        case BaseRing::Tag::UnivariateQuotient: {
            BaseRing in = ring_.inner();
            auto m = mult_matrix(*this);
            RingElem det = ring_det(m, in);
            if (!det.is_unit())
                throw std::domain_error("inverse: not a unit of " + ring_.to_string());
            RingElem det_inv = det.inverse();
            // v = det^{-1} * adj(M) e_0  (first column of the adjugate)
            std::size_t k = ring_.modulus_degree();
            std::vector<RingElem> coords;
            coords.reserve(k);
            for (std::size_t i = 0; i < k; ++i)
                coords.push_back(det_inv * ring_cofactor(m, 0, i, in));
            RingElem v = ring_.from_poly(coords);
            if (!((*this) * v).is_one()) throw std::logic_error("inverse: verification failed");
            return v;
        }
    }
    throw std::logic_error("RingElem::inverse");
}

std::string RingElem::to_string() const {
    if (ring_.tag() != BaseRing::Tag::UnivariateQuotient) return z_.get_str();
    return render_poly(poly_, ring_.variable());
}

const Int& RingElem::integer_value() const {
    if (ring_.tag() == BaseRing::Tag::UnivariateQuotient)
        throw std::logic_error("integer_value: quotient element");
    return z_;
}

const std::vector<RingElem>& RingElem::poly_coeffs() const {
    if (ring_.tag() != BaseRing::Tag::UnivariateQuotient)
        throw std::logic_error("poly_coeffs: not a quotient element");
    return poly_;
}

// ---- parsing ----

namespace {

struct Cursor {
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

// Univariate expression over `ring` in the variable `var`; values are dense
// coefficient vectors over `ring`.
struct UniPolyParser {
    BaseRing ring;
    std::string var;
    Cursor& cur;

    using Poly = std::vector<RingElem>;

    Poly add(Poly x, const Poly& y, bool sub) {
        if (x.size() < y.size()) x.resize(y.size(), ring.zero());
        for (std::size_t t = 0; t < y.size(); ++t) x[t] = sub ? x[t] - y[t] : x[t] + y[t];
        poly_trim(x);
        return x;
    }

    Poly atom() {
        if (cur.consume('(')) {
            Poly e = expr();
            if (!cur.consume(')')) throw std::invalid_argument("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            RingElem c = ring.from_int(cur.read_uint());
            Poly p;
            if (!c.is_zero()) p.push_back(c);
            return p;
        }
        std::string nm = cur.read_name();
        if (nm != var) throw std::invalid_argument("unknown symbol '" + nm + "'");
        return {ring.zero(), ring.one()};
    }

    Poly factor() {
        Poly a = atom();
        if (cur.consume('^')) {
            long e = cur.read_int();
            if (e < 0) throw std::invalid_argument("negative power in polynomial");
            Poly out{ring.one()};
            for (long t = 0; t < e; ++t) out = poly_mul(out, a, ring);
            return out;
        }
        return a;
    }

    Poly term() {
        Poly a = factor();
        while (cur.consume('*')) a = poly_mul(a, factor(), ring);
        return a;
    }

    Poly expr() {
        bool neg = cur.consume('-');
        Poly acc = term();
        if (neg)
            for (auto& c : acc) c = -c;
        for (;;) {
            if (cur.consume('+'))
                acc = add(std::move(acc), term(), false);
            else if (cur.consume('-'))
                acc = add(std::move(acc), term(), true);
            else
                break;
        }
        return acc;
    }
};

}  // namespace

RingElem RingElem::parse(const BaseRing& ring, const std::string& text) {
    Cursor cur{text};
    RingElem out = [&] {
        if (ring.tag() == BaseRing::Tag::UnivariateQuotient) {
            UniPolyParser parser{ring.inner(), ring.variable(), cur};
            return ring.from_poly(parser.expr());
        }
        bool neg = cur.consume('-');
        Int v = cur.read_uint();
        return ring.from_int(neg ? Int(-v) : v);
    }();
    if (!cur.eof()) throw std::invalid_argument("trailing input in ring element: '" + text + "'");
    return out;
}

BaseRing BaseRing::parse(const std::string& text) {
    Cursor cur{text};
    std::string head = cur.read_name();
    BaseRing base = [&]() -> BaseRing {
        if (head == "Z") {
            if (cur.consume('/')) return integers_mod(cur.read_uint());
            return integers();
        }
        if (head == "GF") {
            if (!cur.consume('(')) throw std::invalid_argument("expected '(' after GF");
            Int p = cur.read_uint();
            if (!cur.consume(')')) throw std::invalid_argument("expected ')'");
            return prime_field(p);
        }
        if (head.size() > 1 && head[0] == 'F') return prime_field(Int(head.substr(1)));
        throw std::invalid_argument("unknown base ring '" + text + "'");
    }();
    if (cur.consume('[')) {
        std::string var = cur.read_name();
        if (!cur.consume(']')) throw std::invalid_argument("expected ']'");
        if (!cur.consume('/')) throw std::invalid_argument("expected '/' after ']'");
        if (!cur.consume('(')) throw std::invalid_argument("expected '(' in quotient modulus");
        UniPolyParser parser{base, var, cur};
        std::vector<RingElem> mod = parser.expr();
        if (!cur.consume(')')) throw std::invalid_argument("expected ')' closing the modulus");
        base = univariate_quotient(base, std::move(mod), var);
    }
    if (!cur.eof()) throw std::invalid_argument("trailing input in base ring: '" + text + "'");
    return base;
}

}  // namespace brq
