#include "spinfw/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

namespace spinfw::cli
{

namespace
{

std::string trim(std::string const& s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string const& text)
{
    std::string const t = trim(text);
    double value = 0;
    auto const [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    {
        throw std::invalid_argument("expected a number, got '" + t + "'");
    }
    return value;
}

long long parse_integer(std::string const& text)
{
    std::string const t = trim(text);
    long long value = 0;
    auto const [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    {
        throw std::invalid_argument("expected an integer, got '" + t + "'");
    }
    return value;
}

bool parse_bool(std::string const& text)
{
    std::string const t = trim(text);
    if (t == "true" || t == "yes" || t == "1")
    {
        return true;
    }
    if (t == "false" || t == "no" || t == "0")
    {
        return false;
    }
    throw std::invalid_argument("expected true or false, got '" + t + "'");
}

std::vector<std::string> split(std::string const& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
    {
        out.push_back(trim(item));
    }
    return out;
}

ThreeVector parse_vector(std::string const& text)
{
    auto const parts = parse_number_list(text);
    if (parts.size() != 3)
    {
        throw std::invalid_argument("expected three comma-separated numbers");
    }
    return {parts[0], parts[1], parts[2]};
}

std::string choice(std::string const& text, std::initializer_list<char const*> options)
{
    std::string const t = trim(text);
    std::string list;
    for (char const* o : options)
    {
        if (t == o)
        {
            return t;
        }
        list += list.empty() ? "" : ", ";
        list += o;
    }
    throw std::invalid_argument("expected one of " + list + ", got '" + t + "'");
}

using Setter = std::function<void(RunConfig&, std::string const&)>;

std::map<std::string, Setter> const& schema()
{
    static std::map<std::string, Setter> const table{
        {"mode",
         [](RunConfig& c, std::string const& v) {
             auto m = parse_mode(trim(v));
             if (!m)
             {
                 throw std::invalid_argument(
                     "expected simulate, boost, verify-algebra, verify-fw or report");
             }
             c.mode = *m;
             c.declared_mode = *m;
         }},
        {"particle.m", [](RunConfig& c, std::string const& v) { c.m = parse_double(v); }},
        {"particle.e", [](RunConfig& c, std::string const& v) { c.e = parse_double(v); }},
        {"particle.mu_prime",
         [](RunConfig& c, std::string const& v) { c.mu_prime = parse_double(v); }},
        {"particle.hbar", [](RunConfig& c, std::string const& v) { c.hbar = parse_double(v); }},
        {"particle.c", [](RunConfig& c, std::string const& v) { c.c = parse_double(v); }},
        {"field.model",
         [](RunConfig& c, std::string const& v) {
             c.field_model = choice(v, {"uniform", "stern-gerlach", "sinusoidal-electric",
                                        "sinusoidal-magnetic"});
         }},
        {"field.e0", [](RunConfig& c, std::string const& v) { c.field_e0 = parse_vector(v); }},
        {"field.b0", [](RunConfig& c, std::string const& v) { c.field_b0 = parse_vector(v); }},
        {"field.gradient",
         [](RunConfig& c, std::string const& v) { c.field_gradient = parse_double(v); }},
        {"field.amplitude",
         [](RunConfig& c, std::string const& v) { c.field_amplitude = parse_double(v); }},
        {"field.period",
         [](RunConfig& c, std::string const& v) { c.field_period = parse_double(v); }},
        {"state.x", [](RunConfig& c, std::string const& v) { c.x = parse_vector(v); }},
        {"state.p", [](RunConfig& c, std::string const& v) { c.p = parse_vector(v); }},
        {"state.s", [](RunConfig& c, std::string const& v) { c.s = parse_vector(v); }},
        {"integrator.method",
         [](RunConfig& c, std::string const& v) { c.method = choice(v, {"rk4", "rkf45"}); }},
        {"integrator.step", [](RunConfig& c, std::string const& v) { c.step = parse_double(v); }},
        {"integrator.tolerance",
         [](RunConfig& c, std::string const& v) { c.tolerance = parse_double(v); }},
        {"integrator.duration",
         [](RunConfig& c, std::string const& v) { c.duration = parse_double(v); }},
        {"integrator.prescription",
         [](RunConfig& c, std::string const& v) {
             c.prescription = choice(v, {"hamiltonian", "kinematic"});
         }},
        {"integrator.renormalize_spin",
         [](RunConfig& c, std::string const& v) { c.renormalize_spin = parse_bool(v); }},
        {"integrator.sample_stride",
         [](RunConfig& c, std::string const& v) {
             c.sample_stride = static_cast<int>(parse_integer(v));
         }},
        {"boost.beta", [](RunConfig& c, std::string const& v) { c.beta = parse_vector(v); }},
        {"boost.pi", [](RunConfig& c, std::string const& v) { c.boost_pi = parse_vector(v); }},
        {"boost.e_direction",
         [](RunConfig& c, std::string const& v) { c.boost_e = parse_vector(v); }},
        {"boost.b_direction",
         [](RunConfig& c, std::string const& v) { c.boost_b = parse_vector(v); }},
        {"boost.amplitudes",
         [](RunConfig& c, std::string const& v) { c.boost_amplitudes = parse_number_list(v); }},
        {"lattice.cases",
         [](RunConfig& c, std::string const& v) {
             c.cases.clear();
             for (auto const& item : split(v, ','))
             {
                 std::string const t = choice(item, {"I", "II"});
                 c.cases.push_back(t == "I" ? opalg::Case::I : opalg::Case::II);
             }
         }},
        {"lattice.sites",
         [](RunConfig& c, std::string const& v) { c.sites = static_cast<int>(parse_integer(v)); }},
        {"lattice.rho", [](RunConfig& c, std::string const& v) { c.rho = parse_double(v); }},
        {"fw.lambdas",
         [](RunConfig& c, std::string const& v) { c.lambdas = parse_number_list(v); }},
        {"fw.include_darwin",
         [](RunConfig& c, std::string const& v) { c.include_darwin = parse_bool(v); }},
        {"algebra.order",
         [](RunConfig& c, std::string const& v) { c.order = static_cast<int>(parse_integer(v)); }},
        {"output.dir", [](RunConfig& c, std::string const& v) { c.out_dir = trim(v); }},
        {"output.csv", [](RunConfig& c, std::string const& v) { c.csv = parse_bool(v); }},
        {"seed",
         [](RunConfig& c, std::string const& v) {
             long long const s = parse_integer(v);
             if (s < 0)
             {
                 throw std::invalid_argument("seed must be non-negative");
             }
             c.seed = static_cast<std::uint64_t>(s);
         }},
        {"profile",
         [](RunConfig& c, std::string const& v) {
             auto p = parse_profile(trim(v));
             if (!p)
             {
                 throw std::invalid_argument("expected default or negative-result");
             }
             c.profile = *p;
         }},
    };
    return table;
}

std::string anchor(std::string const& origin, std::map<std::string, int> const& lines,
                   std::string const& key)
{
    auto it = lines.find(key);
    std::string const where
        = it == lines.end() ? origin : origin + ":" + std::to_string(it->second);
    return where + ": " + key + ": ";
}

nlohmann::json vec_json(ThreeVector const& v)
{
    return {v.x(), v.y(), v.z()};
}

}  // namespace

char const* mode_name(Mode m)
{
    switch (m)
    {
    case Mode::Simulate:
        return "simulate";
    case Mode::Boost:
        return "boost";
    case Mode::VerifyAlgebra:
        return "verify-algebra";
    case Mode::VerifyFw:
        return "verify-fw";
    case Mode::Report:
        return "report";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string const& text)
{
    for (Mode m : {Mode::Simulate, Mode::Boost, Mode::VerifyAlgebra, Mode::VerifyFw,
                   Mode::Report})
    {
        if (text == mode_name(m))
        {
            return m;
        }
    }
    return std::nullopt;
}

char const* profile_name(Profile p)
{
    return p == Profile::Default ? "default" : "negative-result";
}

std::optional<Profile> parse_profile(std::string const& text)
{
    if (text == "default")
    {
        return Profile::Default;
    }
    if (text == "negative-result")
    {
        return Profile::NegativeResult;
    }
    return std::nullopt;
}

std::vector<double> parse_number_list(std::string const& text)
{
    std::vector<double> out;
    for (auto const& item : split(text, ','))
    {
        out.push_back(parse_double(item));
    }
    if (out.empty())
    {
        throw std::invalid_argument("expected a comma-separated list of numbers");
    }
    return out;
}

std::uint64_t fnv1a(std::string const& data)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data)
    {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

ConfigErrors::ConfigErrors(std::vector<std::string> messages)
    : ConfigurationError([&] {
          std::string all;
          for (auto const& m : messages)
          {
              all += (all.empty() ? "" : "\n") + m;
          }
          return all;
      }()),
      messages_(std::move(messages))
{
}

ParticleParams RunConfig::particle() const
{
    return ParticleParams::from_anomalous_moment(m, e, mu_prime, hbar, c);
}

FieldModel RunConfig::field() const
{
    if (field_model == "stern-gerlach")
    {
        return SternGerlachField{field_b0.z(), field_gradient};
    }
    if (field_model == "sinusoidal-electric")
    {
        return SinusoidalElectrostatic{field_amplitude, field_period};
    }
    if (field_model == "sinusoidal-magnetic")
    {
        return SinusoidalMagnetostatic{field_amplitude, field_period};
    }
    return UniformField{field_e0, field_b0};
}

double RunConfig::larmor_period() const
{
    double b = field_b0.norm();
    if (field_model == "stern-gerlach")
    {
        b = std::abs(field_b0.z());
    }
    else if (field_model == "sinusoidal-magnetic")
    {
        b = std::abs(field_amplitude);
    }
    double const rate = std::abs(particle().gamma_m()) * b;
    if (!(rate > 0))
    {
        return 0;
    }
    return 2 * std::numbers::pi / rate;
}

classical::IntegratorSpec RunConfig::integrator() const
{
    classical::IntegratorSpec spec;
    spec.method = method == "rkf45" ? classical::IntegratorMethod::RKF45
                                    : classical::IntegratorMethod::RK4;
    spec.step = step > 0 ? step : larmor_period() / 1000;
    spec.tolerance = tolerance;
    spec.prescription = prescription == "kinematic"
                            ? classical::VelocityPrescription::KinematicVelocity
                            : classical::VelocityPrescription::Hamiltonian;
    spec.renormalize_spin = renormalize_spin;
    spec.sample_stride = static_cast<std::size_t>(std::max(sample_stride, 1));
    return spec;
}

nlohmann::json RunConfig::to_json() const
{
    nlohmann::json cases_json = nlohmann::json::array();
    for (auto cs : cases)
    {
        cases_json.push_back(opalg::case_name(cs));
    }
    nlohmann::json j{
        {"mode", mode_name(mode)},
        {"particle", {{"m", m}, {"e", e}, {"mu_prime", mu_prime}, {"hbar", hbar}, {"c", c}}},
        {"field",
         {{"model", field_model},
          {"e0", vec_json(field_e0)},
          {"b0", vec_json(field_b0)},
          {"gradient", field_gradient},
          {"amplitude", field_amplitude},
          {"period", field_period}}},
        {"state", {{"x", vec_json(x)}, {"p", vec_json(p)}, {"s", vec_json(s)}}},
        {"integrator",
         {{"method", method},
          {"step", step},
          {"tolerance", tolerance},
          {"duration", duration},
          {"prescription", prescription},
          {"renormalize_spin", renormalize_spin},
          {"sample_stride", sample_stride}}},
        {"boost",
         {{"beta", beta ? vec_json(*beta) : nlohmann::json(nullptr)},
          {"pi", vec_json(boost_pi)},
          {"e_direction", vec_json(boost_e)},
          {"b_direction", vec_json(boost_b)},
          {"amplitudes", boost_amplitudes}}},
        {"lattice", {{"cases", cases_json}, {"sites", sites}, {"rho", rho}}},
        {"fw", {{"lambdas", lambdas}, {"include_darwin", include_darwin}}},
        {"algebra", {{"order", order}}},
        {"output", {{"csv", csv}}},
        {"seed", seed},
        {"profile", profile_name(profile)},
    };
    return j;
}

void validate(RunConfig const& c, std::string const& origin,
              std::map<std::string, int> const& lines)
{
    std::vector<std::string> errors;
    auto fail = [&](std::string const& key, std::string const& message) {
        errors.push_back(anchor(origin, lines, key) + message);
    };
    auto positive = [&](std::string const& key, double v) {
        if (!(v > 0) || !std::isfinite(v))
        {
            fail(key, "must be positive");
        }
    };
    positive("particle.m", c.m);
    positive("particle.hbar", c.hbar);
    positive("particle.c", c.c);
    if (!std::isfinite(c.e))
    {
        fail("particle.e", "must be finite");
    }
    if (!std::isfinite(c.mu_prime))
    {
        fail("particle.mu_prime", "must be finite");
    }
    bool const particle_ok = errors.empty();
    if (c.step < 0)
    {
        fail("integrator.step", "must be positive (0 selects T_L/1000)");
    }
    if (c.duration < 0)
    {
        fail("integrator.duration", "must be positive (0 selects one Larmor period)");
    }
    positive("integrator.tolerance", c.tolerance);
    if (c.sample_stride < 1)
    {
        fail("integrator.sample_stride", "must be at least 1");
    }
    positive("field.period", c.field_period);

    if (c.mode == Mode::Simulate)
    {
        if (particle_ok && (c.step == 0 || c.duration == 0) && c.larmor_period() == 0)
        {
            fail("integrator.step",
                 "step and duration must be given when the field has no Larmor period");
        }
    }
    if (c.mode == Mode::Boost)
    {
        if (!c.beta)
        {
            fail("boost.beta", "required for boost");
        }
        else if (!(c.beta->norm() < 1))
        {
            fail("boost.beta", "|beta| must be < 1");
        }
        if (c.boost_amplitudes.size() < 3)
        {
            fail("boost.amplitudes", "needs at least three amplitudes");
        }
        for (double a : c.boost_amplitudes)
        {
            if (!(a > 0))
            {
                fail("boost.amplitudes", "amplitudes must be positive");
                break;
            }
        }
    }
    if (c.sites != 0 && (c.sites < 8 || c.sites % 2 != 0))
    {
        fail("lattice.sites", "lattice N must be even and at least 8");
    }
    if (!(c.rho > 0) || c.rho > 0.9)
    {
        fail("lattice.rho", "cutoff ratio must lie in (0, 0.9]");
    }
    if (c.cases.empty())
    {
        fail("lattice.cases", "at least one case required");
    }
    if (!c.lambdas.empty())
    {
        bool ok = c.lambdas.size() >= 3;
        for (double l : c.lambdas)
        {
            ok = ok && l > 0;
        }
        if (ok)
        {
            double const ratio = c.lambdas[1] / c.lambdas[0];
            for (std::size_t i = 2; i < c.lambdas.size(); ++i)
            {
                ok = ok && std::abs(c.lambdas[i] / c.lambdas[i - 1] / ratio - 1) <= 1e-6;
            }
        }
        if (!ok)
        {
            fail("fw.lambdas", "needs at least three positive, geometrically spaced amplitudes");
        }
    }
    if (c.order < 1 || c.order > 12)
    {
        fail("algebra.order", "must lie in 1..12");
    }
    if (!errors.empty())
    {
        throw ConfigErrors(std::move(errors));
    }
}

RunConfig parse_config_text(std::string const& text, std::string const& origin)
{
    RunConfig config;
    std::map<std::string, int> lines;
    std::vector<std::string> errors;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw))
    {
        ++number;
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty())
        {
            continue;
        }
        std::string const where = origin + ":" + std::to_string(number) + ": ";
        auto const eq = line.find('=');
        if (eq == std::string::npos)
        {
            errors.push_back(where + "expected 'key = value'");
            continue;
        }
        std::string const key = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));
        auto const it = schema().find(key);
        if (it == schema().end())
        {
            errors.push_back(where + key + ": unknown key");
            continue;
        }
        if (lines.contains(key))
        {
            errors.push_back(where + key + ": duplicate key (first set on line "
                             + std::to_string(lines[key]) + ")");
            continue;
        }
        lines[key] = number;
        try
        {
            it->second(config, value);
        }
        catch (std::exception const& ex)
        {
            errors.push_back(where + key + ": " + ex.what());
        }
    }
    if (config.mode == Mode::Simulate && !lines.contains("field.model"))
    {
        errors.push_back(origin + ": field.model: required for simulate");
    }
    try
    {
        validate(config, origin, lines);
    }
    catch (ConfigErrors const& ex)
    {
        errors.insert(errors.end(), ex.messages().begin(), ex.messages().end());
    }
    if (!errors.empty())
    {
        // report in file order; file-level messages (no line) go first
        auto line_of = [&](std::string const& m) {
            if (m.rfind(origin + ":", 0) != 0)
            {
                return 0;
            }
            int n = 0;
            auto const* b = m.data() + origin.size() + 1;
            std::from_chars(b, m.data() + m.size(), n);
            return n;
        };
        std::stable_sort(errors.begin(), errors.end(),
                         [&](auto const& a, auto const& b) { return line_of(a) < line_of(b); });
        throw ConfigErrors(std::move(errors));
    }
    return config;
}

RunConfig parse_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigFileError("cannot read config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

}  // namespace spinfw::cli
