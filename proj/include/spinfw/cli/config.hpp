#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinfw/classical/integrator.hpp"
#include "spinfw/core/errors.hpp"
#include "spinfw/opalg/ordering.hpp"

namespace spinfw::cli
{

enum class Mode
{
    Simulate,
    Boost,
    VerifyAlgebra,
    VerifyFw,
    Report
};

enum class Profile
{
    Default,
    NegativeResult
};

char const* mode_name(Mode m);
std::optional<Mode> parse_mode(std::string const& text);
char const* profile_name(Profile p);
std::optional<Profile> parse_profile(std::string const& text);

/*!
 * Every configurable quantity with its documented default. A config file
 * is a list of `key = value` lines; `#` starts a comment. Vectors are
 * comma separated. See the README for the key table.
 */
struct RunConfig
{
    Mode mode{Mode::Simulate};
    //! Mode named by the file's `mode` key, if any (not hashed).
    std::optional<Mode> declared_mode;

    // particle.*
    double m{1};
    double e{1};
    double mu_prime{0};
    double hbar{1};
    double c{1};

    // field.*
    std::string field_model{"uniform"};
    ThreeVector field_e0{ThreeVector::Zero()};
    ThreeVector field_b0{0, 0, 1e-2};
    double field_gradient{0};
    double field_amplitude{0};
    double field_period{1};

    // state.*
    ThreeVector x{ThreeVector::Zero()};
    ThreeVector p{ThreeVector::Zero()};
    ThreeVector s{0.5, 0, 0};

    // integrator.*  (step 0: T_L / 1000; duration 0: one Larmor period)
    std::string method{"rk4"};
    double step{0};
    double tolerance{1e-10};
    double duration{0};
    std::string prescription{"hamiltonian"};
    bool renormalize_spin{true};
    int sample_stride{1};

    // boost.*
    std::optional<ThreeVector> beta;
    ThreeVector boost_pi{0.5, 0, 0};
    ThreeVector boost_e{0, 1, 0};
    ThreeVector boost_b{0, 0, 1};
    std::vector<double> boost_amplitudes{1e-1, 1e-2, 1e-3};

    // lattice.* / fw.*
    std::vector<opalg::Case> cases{opalg::Case::I, opalg::Case::II};
    int sites{0};
    double rho{0.5};
    std::vector<double> lambdas;
    bool include_darwin{true};

    // algebra.*
    int order{8};

    // output.* and top level
    std::string out_dir{"out"};
    bool csv{true};
    std::uint64_t seed{1};
    Profile profile{Profile::Default};

    ParticleParams particle() const;
    FieldModel field() const;
    classical::IntegratorSpec integrator() const;
    //! Larmor period 2 pi / |gamma_m B| of the configured field (B from
    //! field.b0, or the model's reference field).
    double larmor_period() const;

    //! Canonical representation (sorted keys) used for hashing.
    nlohmann::json to_json() const;
};

//! Validation failure carrying every message, each anchored to a line.
class ConfigErrors : public ConfigurationError
{
  public:
    explicit ConfigErrors(std::vector<std::string> messages);
    std::vector<std::string> const& messages() const { return messages_; }

  private:
    std::vector<std::string> messages_;
};

//! Missing or unreadable config file.
class ConfigFileError : public ConfigurationError
{
  public:
    using ConfigurationError::ConfigurationError;
};

//! Reads and validates a file. Throws ConfigFileError or ConfigErrors.
RunConfig parse_config(std::string const& path);

//! Parses text; `origin` prefixes the line anchors.
RunConfig parse_config_text(std::string const& text, std::string const& origin = "<config>");

//! Range and mode checks on a complete config; throws ConfigErrors.
//! `lines` maps keys to the line they were set on (for anchoring).
void validate(RunConfig const& config, std::string const& origin = "<config>",
              std::map<std::string, int> const& lines = {});

std::vector<double> parse_number_list(std::string const& text);

//! 64-bit FNV-1a.
std::uint64_t fnv1a(std::string const& data);

}  // namespace spinfw::cli
