#ifndef BLOCKCOND_ROOT_OF_UNITY_HPP_
#define BLOCKCOND_ROOT_OF_UNITY_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace blockcond {

using int64 = std::int64_t;

/* The value e^{2*pi*i * a/m}, stored as the exponent a/m in Q/Z with
 * 0 <= a < m and gcd(a, m) = 1 (a = 0 forces m = 1). Multiplying two
 * roots of unity adds their exponents in Q/Z, so all character
 * arithmetic stays exact. The multiplicative order of the value is m.
 */
class RootOfUnity {
  public:
    RootOfUnity() = default; // the value 1, exponent 0/1

    // exponent a/m reduced into canonical form; m >= 1
    static RootOfUnity fraction(int64 a, int64 m);

    int64 numerator() const { return num_; }
    int64 denominator() const { return den_; }
    int64 order() const { return den_; }
    bool is_one() const { return num_ == 0; }

    // value multiplication = exponent addition in Q/Z
    RootOfUnity operator*(RootOfUnity const & o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(int64 e) const;

    friend auto operator<=>(RootOfUnity const &, RootOfUnity const &) = default;

    std::string str() const; // "a/m"

  private:
    int64 num_ = 0;
    int64 den_ = 1;
};

std::ostream & operator<<(std::ostream &, RootOfUnity const &);

} // namespace blockcond

#endif
