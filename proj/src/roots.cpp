#include "quasiphase/roots.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace quasiphase {

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& f) {
    std::vector<UPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rat& x) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

Rat cauchy_bound(const UPoly& f) {
    Rat lc = abs(f.leading());
    Rat m;
    for (int k = 0; k < f.degree(); ++k) m = std::max(m, abs(f.coeff(k)) / lc);
    return Rat(1) + m;
}

/// A point strictly inside (lo, hi) where g does not vanish.
Rat split_point(const UPoly& g, const Rat& lo, const Rat& hi) {
    Rat w = hi - lo;
    Rat m = lo + w / Rat(2);
    for (long q = 3; g.sign_at(m) == 0; ++q) m = lo + w * Rat(BigInt(q - 1), BigInt(q * 2 - 1));
    return m;
}

void isolate(const UPoly& g, const std::vector<UPoly>& seq, const Rat& lo, const Rat& hi,
             std::vector<RealRoot>& out) {
    int n = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back(RealRoot::isolated(g, lo, hi));
        return;
    }
    Rat m = split_point(g, lo, hi);
    isolate(g, seq, lo, m, out);
    isolate(g, seq, m, hi, out);
}

/// If the root is rational, its denominator divides the leading coefficient of
/// the primitive integer defining polynomial, so once the interval is narrower
/// than 1/L at most one candidate k/L remains.
RealRoot detect_rational(RealRoot r) {
    UPoly prim = primitive_integer(r.defining());
    BigInt lead = prim.leading().num();
    r.refine(Rat(BigInt(1), lead + 1));
    if (r.is_exact()) return r;
    mpz_class k;
    mpq_class scaled = r.lo().raw() * lead;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    for (int step = 0; step < 3; ++step, ++k) {
        Rat cand(k, lead);
        if (cand > r.lo() && cand < r.hi() && prim.sign_at(cand) == 0) return RealRoot::exact(cand);
    }
    return r;
}

} // namespace

RealRoot RealRoot::exact(const Rat& v) {
    RealRoot r;
    r.exact_ = true;
    r.lo_ = r.hi_ = v;
    return r;
}

RealRoot RealRoot::isolated(UPoly defining, Rat lo, Rat hi) {
    RealRoot r;
    r.exact_ = false;
    r.defining_ = std::move(defining);
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

const Rat& RealRoot::value() const {
    if (!exact_) throw std::logic_error("irrational root has no exact rational value");
    return lo_;
}

void RealRoot::refine(const Rat& width) {
    while (!exact_ && hi_ - lo_ > width) {
        Rat m = (lo_ + hi_) / Rat(2);
        int sm = defining_.sign_at(m);
        if (sm == 0) {
            *this = exact(m);
            return;
        }
        if (sm == defining_.sign_at(lo_))
            lo_ = m;
        else
            hi_ = m;
    }
}

double RealRoot::approx() const {
    if (exact_) return lo_.to_double();
    RealRoot c = *this;
    c.refine(Rat(BigInt(1), BigInt("1000000000000000000")) * (Rat(1) + abs(lo_)));
    return c.exact_ ? c.lo_.to_double() : ((c.lo_ + c.hi_) / Rat(2)).to_double();
}

int RealRoot::sign_of(const UPoly& f) const {
    if (f.is_zero()) return 0;
    if (exact_) return f.sign_at(lo_);
    UPoly g = gcd(f, defining_);
    if (g.degree() > 0 && g.sign_at(lo_) * g.sign_at(hi_) < 0) return 0;
    RealRoot c = *this;
    while (true) {
        int inside = sturm_count(f, c.lo_, c.hi_) - (f.sign_at(c.hi_) == 0 ? 1 : 0);
        if (inside == 0) break;
        c.refine((c.hi_ - c.lo_) / Rat(2));
        if (c.exact_) return f.sign_at(c.lo_);
    }
    return f.sign_at((c.lo_ + c.hi_) / Rat(2));
}

int RealRoot::compare(const Rat& r) const {
    if (exact_) return lo_ < r ? -1 : (lo_ > r ? 1 : 0);
    if (r <= lo_) return 1;
    if (r >= hi_) return -1;
    return defining_.sign_at(r) == defining_.sign_at(lo_) ? 1 : -1;
}

std::string RealRoot::str() const {
    if (exact_) return lo_.str();
    RealRoot c = *this;
    c.refine(Rat(BigInt(1), BigInt("1000000000000")));
    if (c.exact_) return c.lo_.str();
    char buf[128];
    std::snprintf(buf, sizeof buf, "[%.12f, %.12f]", c.lo_.to_double(), c.hi_.to_double());
    return buf;
}

int sturm_count(const UPoly& f, const Rat& a, const Rat& b) {
    if (f.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
    auto seq = sturm_sequence(f);
    return sign_variations(seq, a) - sign_variations(seq, b);
}

std::vector<RootWithMultiplicity> real_roots(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("real roots of the zero polynomial are undefined");
    std::vector<RootWithMultiplicity> out;
    for (const auto& [mult, factor] : squarefree_decomposition(f)) {
        Rat bound = cauchy_bound(factor);
        std::vector<RealRoot> found;
        isolate(factor, sturm_sequence(factor), -bound, bound, found);
        for (auto& r : found) out.push_back({detect_rational(std::move(r)), mult});
    }
    std::sort(out.begin(), out.end(), [](const RootWithMultiplicity& a, const RootWithMultiplicity& b) {
        if (a.root.is_exact() && b.root.is_exact()) return a.root.value() < b.root.value();
        if (a.root.is_exact()) return b.root.compare(a.root.value()) > 0;
        if (b.root.is_exact()) return a.root.compare(b.root.value()) < 0;
        return a.root.approx() < b.root.approx();
    });
    return out;
}

} // namespace quasiphase
