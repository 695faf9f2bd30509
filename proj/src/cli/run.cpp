#include "spinfw/cli/run.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <future>
#include <iomanip>
#include <sstream>

#include "spinfw/cli/report.hpp"
#include "spinfw/classical/hamiltonian.hpp"
#include "spinfw/opalg/printer.hpp"
#include "spinfw/opalg/verify.hpp"

namespace spinfw::cli
{

namespace
{

namespace fs = std::filesystem;

std::string hex(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

nlohmann::json vec(ThreeVector const& v)
{
    return {v.x(), v.y(), v.z()};
}

void write_trajectory(classical::Trajectory const& traj, FieldModel const& model,
                      ParticleParams const& params, std::string const& dir, bool csv,
                      std::vector<std::string>& artifacts)
{
    double const h0 = traj.samples.front().h_total;
    double const s0 = traj.samples.front().s_norm;
    nlohmann::json samples = nlohmann::json::array();
    std::ostringstream table;
    table << std::setprecision(17);
    table << "t,x,y,z,px,py,pz,sx,sy,sz,h_total,s_norm,h_drift,s_drift\n";
    for (auto const& q : traj.samples)
    {
        double const h_drift = (q.h_total - h0) / std::abs(h0);
        double const s_drift = (q.s_norm - s0) / s0;
        samples.push_back({{"t", q.t},
                           {"x", vec(q.state.x)},
                           {"p", vec(q.state.p)},
                           {"s", vec(q.state.s)},
                           {"h_total", q.h_total},
                           {"s_norm", q.s_norm},
                           {"h_drift", h_drift},
                           {"s_drift", s_drift}});
        if (csv)
        {
            table << q.t;
            for (auto const* v : {&q.state.x, &q.state.p, &q.state.s})
            {
                table << ',' << v->x() << ',' << v->y() << ',' << v->z();
            }
            table << ',' << q.h_total << ',' << q.s_norm << ',' << h_drift << ',' << s_drift
                  << '\n';
        }
    }
    nlohmann::json doc{{"samples", samples},
                       {"steps", traj.steps},
                       {"renormalizations", traj.renormalizations},
                       {"max_raw_spin_drift", traj.max_raw_spin_drift},
                       {"model", model.kind()},
                       {"gamma_m", params.gamma_m()}};
    write_text(dir + "/trajectory.json", canonical_dump(doc));
    artifacts.push_back("trajectory.json");
    if (csv)
    {
        write_text(dir + "/trajectory.csv", table.str());
        artifacts.push_back("trajectory.csv");
    }
}

std::vector<Check> simulate(RunConfig const& config, std::vector<std::string>& artifacts)
{
    ClassicalSetup setup;
    setup.params = config.particle();
    setup.model = config.field();
    setup.state.x = config.x;
    setup.state.p = config.p;
    setup.state.s = config.s;
    setup.integrator = config.integrator();
    setup.duration = config.duration > 0 ? config.duration : config.larmor_period();

    std::vector<Check> checks;
    classical::Trajectory traj;
    try
    {
        traj = classical::integrate(setup.state, setup.model, setup.params, setup.integrator,
                                    setup.duration);
    }
    catch (classical::IntegrationError const& ex)
    {
        traj = ex.partial();
        Check c;
        c.criterion = 2;
        c.name = "integration_completed";
        c.relation = Check::Relation::True;
        c.detail = {{"error", ex.what()}};
        checks.push_back(c);
        if (traj.samples.empty())
        {
            return checks;
        }
    }
    write_trajectory(traj, setup.model, setup.params, config.out_dir, config.csv, artifacts);

    auto const conservation = conservation_checks(setup, traj);
    checks.insert(checks.end(), conservation.begin(), conservation.end());

    auto const* uniform = std::get_if<UniformField>(&setup.model.variant());
    bool const pure_b = uniform != nullptr && uniform->e0.norm() == 0 && uniform->b0.norm() > 0;
    if (pure_b && config.p.norm() == 0 && uniform->b0.x() == 0 && uniform->b0.y() == 0)
    {
        checks.insert(checks.begin(), larmor_check(setup));
    }
    if (pure_b && config.p.norm() > 0 && config.mu_prime == 0)
    {
        Check c;
        c.criterion = 3;
        c.name = "pitch_drift";
        c.value = pitch_drift(traj, setup.model, setup.params);
        c.tolerance = 1e-8;
        c.detail = {{"steps", traj.steps}};
        checks.push_back(c);
    }
    return checks;
}

std::vector<Check> verify_algebra(RunConfig const& config, std::vector<std::string>& artifacts)
{
    auto cases = std::async(std::launch::async, [&] { return symbolic_case_checks(config.order); });
    auto ordering = std::async(std::launch::async, [] { return ordering_identity_checks(2); });
    std::vector<Check> checks = cases.get();
    auto const o = ordering.get();
    checks.insert(checks.end(), o.begin(), o.end());
    auto const d = darwin_anchor_checks();
    checks.insert(checks.end(), d.begin(), d.end());

    opalg::CanonicalForm const darwin = opalg::darwin_coefficient_symbolic();
    nlohmann::json doc{
        {"darwin_coefficient", opalg::to_json(darwin)},
        {"darwin_coefficient_text", opalg::to_text(darwin)},
        {"series_case_I_order_2", opalg::to_text(opalg::series_sqrt_expand(opalg::Case::I, 2))},
        {"series_case_II_order_2", opalg::to_text(opalg::series_sqrt_expand(opalg::Case::II, 2))},
    };
    write_text(config.out_dir + "/algebra.json", canonical_dump(doc));
    artifacts.push_back("algebra.json");
    return checks;
}

std::vector<Check> verify_fw(RunConfig const& config, std::vector<std::string>& artifacts)
{
    FwSetup setup;
    setup.cases = config.cases;
    setup.sites = config.sites;
    setup.rho = config.rho;
    setup.lambdas = config.lambdas;
    setup.include_darwin = config.include_darwin;
    setup.negative_result_profile = config.profile == Profile::NegativeResult;
    bool const case_ii
        = std::find(setup.cases.begin(), setup.cases.end(), opalg::Case::II) != setup.cases.end();

    auto spectrum = std::async(std::launch::async, [&] { return spectrum_checks(setup); });
    auto scaling = std::async(std::launch::async, [&] { return scaling_checks(setup); });
    auto parity = std::async(std::launch::async, [&] { return parity_checks(setup); });
    std::future<std::vector<Check>> negative;
    if (case_ii)
    {
        negative = std::async(std::launch::async, [&] { return negative_result_checks(setup); });
    }
    std::vector<Check> checks;
    for (auto* f : {&spectrum, &scaling, &negative, &parity})
    {
        if (f->valid())
        {
            auto const part = f->get();
            checks.insert(checks.end(), part.begin(), part.end());
        }
    }

    nlohmann::json records = nlohmann::json::array();
    for (auto const& c : checks)
    {
        if (c.criterion == 10)
        {
            records.push_back({{"case", c.detail.at("case")},
                               {"lattice", c.detail.at("lattice")},
                               {"lambda", c.detail.at("lambdas")},
                               {"residual", c.detail.at("residuals")},
                               {"slope", c.value},
                               {"tolerances", {{"target", c.target}, {"tolerance", c.tolerance}}},
                               {"pass", c.pass()}});
        }
    }
    write_text(config.out_dir + "/fw.json", canonical_dump(records));
    artifacts.push_back("fw.json");
    return checks;
}

std::string timestamp()
{
    std::time_t const now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

}  // namespace

double pitch_drift(classical::Trajectory const& traj, FieldModel const& model,
                   ParticleParams const& params)
{
    auto pitch = [&](classical::TrajectorySample const& q) {
        FieldSample const f = sample_field(model, q.state.x);
        return q.state.s.dot(kinematic_momentum(q.state.p, f.a, params).normalized());
    };
    double const p0 = pitch(traj.samples.front());
    double worst = 0;
    for (auto const& q : traj.samples)
    {
        worst = std::max(worst, std::abs(pitch(q) - p0));
    }
    return worst;
}

bool ResultRecord::pass() const
{
    for (auto const& c : checks)
    {
        if (!c.pass())
        {
            return false;
        }
    }
    return !checks.empty();
}

nlohmann::json ResultRecord::results_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (auto const& c : checks)
    {
        list.push_back(to_json(c));
    }
    return {{"run_id", run_id},
            {"config_hash", config_hash},
            {"config", config.to_json()},
            {"mode", mode_name(config.mode)},
            {"profile", profile_name(config.profile)},
            {"checks", list},
            {"artifacts", artifacts},
            {"pass", pass()}};
}

nlohmann::json ResultRecord::metadata_json() const
{
    return {{"run_id", run_id},
            {"started_at", started_at},
            {"wall_time_seconds", wall_time_seconds}};
}

ExitCode exit_code_for(ResultRecord const& record)
{
    return record.pass() ? exit_pass : exit_verification_failure;
}

ResultRecord run(RunConfig const& config)
{
    validate(config);
    auto const t0 = std::chrono::steady_clock::now();
    ResultRecord record;
    record.config = config;
    record.started_at = timestamp();
    record.config_hash = hex(fnv1a(config.to_json().dump()));
    record.run_id = std::string(mode_name(config.mode)) + "-" + record.config_hash.substr(0, 12);

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec)
    {
        throw ConfigurationError("cannot create output directory '" + config.out_dir
                                 + "': " + ec.message());
    }

    if (config.mode == Mode::Report)
    {
        nlohmann::json const results = read_json(config.out_dir + "/results.json");
        for (auto const& c : results.at("checks"))
        {
            record.checks.push_back(check_from_json(c));
        }
        record.run_id = results.value("run_id", record.run_id);
        write_text(config.out_dir + "/report.txt", render_report(results));
        record.artifacts.push_back("report.txt");
        return record;
    }

    switch (config.mode)
    {
    case Mode::Simulate:
        record.checks = simulate(config, record.artifacts);
        break;
    case Mode::Boost:
        record.checks = {boost_covariance_check(*config.beta, config.boost_pi,
                                                config.boost_e.normalized(),
                                                config.boost_b.normalized(), config.particle(),
                                                config.boost_amplitudes)};
        break;
    case Mode::VerifyAlgebra:
        record.checks = verify_algebra(config, record.artifacts);
        break;
    case Mode::VerifyFw:
        record.checks = verify_fw(config, record.artifacts);
        break;
    case Mode::Report:
        break;
    }
    record.wall_time_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    record.artifacts.push_back("results.json");
    record.artifacts.push_back("metadata.json");
    record.artifacts.push_back("report.txt");
    nlohmann::json const results = record.results_json();
    write_text(config.out_dir + "/results.json", canonical_dump(results));
    write_text(config.out_dir + "/metadata.json", canonical_dump(record.metadata_json()));
    write_text(config.out_dir + "/report.txt", render_report(results));
    return record;
}

}  // namespace spinfw::cli
