#include "blockcond/root_of_unity.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace blockcond {

RootOfUnity RootOfUnity::fraction(int64 a, int64 m)
{
    if (m < 1)
        throw std::invalid_argument("RootOfUnity: denominator must be positive");
    a %= m;
    if (a < 0)
        a += m;
    int64 const g = std::gcd(a, m);
    RootOfUnity r;
    if (a == 0) {
        r.num_ = 0;
        r.den_ = 1;
    } else {
        r.num_ = a / g;
        r.den_ = m / g;
    }
    return r;
}

RootOfUnity RootOfUnity::operator*(RootOfUnity const & o) const
{
    // a/m + b/n over the common denominator lcm(m, n)
    int64 const l = std::lcm(den_, o.den_);
    return fraction(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

RootOfUnity RootOfUnity::inverse() const
{
    return fraction(den_ - num_, den_);
}

RootOfUnity RootOfUnity::pow(int64 e) const
{
    int64 const r = ((e % den_) + den_) % den_;
    return fraction(num_ * r, den_);
}

std::string RootOfUnity::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream & operator<<(std::ostream & os, RootOfUnity const & z)
{
    return os << z.str();
}

} // namespace blockcond
