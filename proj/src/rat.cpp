#include "quasiphase/rat.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace quasiphase {

Rat::Rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("non-finite double has no rational value");
    return Rat(mpq_class(d));
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string Rat::str() const { return v_.get_str(); }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, int e) {
    if (e < 0) return Rat(1) / pow(r, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace quasiphase
