#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace spinfw::opalg
{

//! Exact complex rational re + i im.
class Scalar
{
  public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}
    Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    //! p/q with q != 0.
    static Scalar fraction(long p, long q);
    static Scalar imaginary_unit() { return Scalar(0, 1); }

    mpq_class const& re() const { return re_; }
    mpq_class const& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    Scalar& operator+=(Scalar const& o);
    Scalar& operator-=(Scalar const& o);
    Scalar& operator*=(Scalar const& o);

    friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
    friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
    friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }
    friend Scalar operator/(Scalar const& a, Scalar const& b);

    friend bool operator==(Scalar const& a, Scalar const& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    //! Multiply by i^k.
    Scalar times_i_power(int k) const;

    Scalar conj() const { return Scalar(re_, -im_); }

    //! Human-readable form, e.g. "3/4", "-i", "(1/2 + 3/2 i)".
    std::string str() const;

    double real_value() const { return re_.get_d(); }
    double imag_value() const { return im_.get_d(); }

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

//! Generalized binomial coefficient C(p/q, n) as an exact rational.
mpq_class binomial(mpq_class const& top, int n);

//! Ordinary binomial coefficient for small non-negative integers.
std::int64_t binomial_int(int n, int k);

}  // namespace spinfw::opalg
