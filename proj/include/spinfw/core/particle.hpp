#pragma once

namespace spinfw
{

/*!
 * Mass, charge and magnetic-moment data of a spin-1/2 particle, Gaussian units.
 *
 * The gyromagnetic ratio, the anomalous moment and the total moment are
 * tied together by  mu = gamma_m hbar / 2 = e hbar / (2 m c) + mu'.  Only the
 * named constructors can build an instance, so the three stored quantities are
 * always mutually consistent.
 */
class ParticleParams
{
  public:
    //! Build from the anomalous moment mu'.
    static ParticleParams from_anomalous_moment(double m,
                                                double e,
                                                double mu_prime,
                                                double hbar = 1,
                                                double c = 1);

    //! Build from the gyromagnetic ratio gamma_m.
    static ParticleParams from_gyromagnetic_ratio(double m,
                                                  double e,
                                                  double gamma_m,
                                                  double hbar = 1,
                                                  double c = 1);

    //! Dirac particle (g = 2): mu' = 0.
    static ParticleParams dirac(double m = 1, double e = 1, double hbar = 1,
                                double c = 1)
    {
        return from_anomalous_moment(m, e, 0, hbar, c);
    }

    double m() const { return m_; }
    double e() const { return e_; }
    double gamma_m() const { return gamma_m_; }
    double mu_prime() const { return mu_prime_; }
    double hbar() const { return hbar_; }
    double c() const { return c_; }

    //! Total magnetic moment mu = gamma_m hbar / 2.
    double mu() const { return gamma_m_ * hbar_ / 2; }

    //! Dirac value e/(mc) of the gyromagnetic ratio.
    double dirac_gyromagnetic() const { return e_ / (m_ * c_); }

    //! Anomalous part gamma_m - e/(mc).
    double anomalous_gyromagnetic() const
    {
        return gamma_m_ - dirac_gyromagnetic();
    }

  private:
    ParticleParams(double m, double e, double gamma_m, double mu_prime,
                   double hbar, double c);

    double m_;
    double e_;
    double gamma_m_;
    double mu_prime_;
    double hbar_;
    double c_;
};

}  // namespace spinfw
