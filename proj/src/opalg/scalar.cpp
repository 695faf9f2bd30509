#include "spinfw/opalg/scalar.hpp"

#include <sstream>

#include "spinfw/core/errors.hpp"

namespace spinfw::opalg
{

Scalar Scalar::fraction(long p, long q)
{
    if (q == 0)
    {
        throw InputError("zero denominator");
    }
    mpq_class r(p, q);
    r.canonicalize();
    return Scalar(r);
}

Scalar& Scalar::operator+=(Scalar const& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(Scalar const& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(Scalar const& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0)
    {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar operator/(Scalar const& a, Scalar const& b)
{
    mpq_class const den = b.re_ * b.re_ + b.im_ * b.im_;
    if (sgn(den) == 0)
    {
        throw InputError("division by zero scalar");
    }
    Scalar num = a * b.conj();
    return Scalar(num.re_ / den, num.im_ / den);
}

Scalar Scalar::times_i_power(int k) const
{
    switch (((k % 4) + 4) % 4)
    {
    case 0:
        return *this;
    case 1:
        return Scalar(-im_, re_);
    case 2:
        return Scalar(-re_, -im_);
    default:
        return Scalar(im_, -re_);
    }
}

std::string Scalar::str() const
{
    std::ostringstream os;
    bool const has_re = sgn(re_) != 0;
    bool const has_im = sgn(im_) != 0;
    if (!has_im)
    {
        os << re_.get_str();
        return os.str();
    }
    std::string im_str;
    if (im_ == 1)
    {
        im_str = "i";
    }
    else if (im_ == -1)
    {
        im_str = "-i";
    }
    else
    {
        im_str = im_.get_str() + " i";
    }
    if (!has_re)
    {
        return im_str;
    }
    os << "(" << re_.get_str() << (sgn(im_) > 0 ? " + " : " ");
    os << im_str << ")";
    return os.str();
}

mpq_class binomial(mpq_class const& top, int n)
{
    mpq_class out = 1;
    for (int k = 0; k < n; ++k)
    {
        out *= (top - k);
        out /= (k + 1);
    }
    out.canonicalize();
    return out;
}

std::int64_t binomial_int(int n, int k)
{
    if (k < 0 || k > n)
    {
        return 0;
    }
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i)
    {
        out = out * (n - k + i) / i;
    }
    return out;
}

}  // namespace spinfw::opalg
