#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinfw/cli/checks.hpp"
#include "spinfw/cli/config.hpp"
#include "spinfw/cli/report.hpp"
#include "spinfw/cli/run.hpp"

using namespace spinfw;
using namespace spinfw::cli;
namespace fs = std::filesystem;

namespace
{

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch(std::string const& name)
{
    fs::path const p = fs::current_path() / "cli_scratch" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

// Messages of the ConfigErrors thrown by parse_config_text, or empty.
std::vector<std::string> errors_of(std::string const& text)
{
    try
    {
        parse_config_text(text, "t.cfg");
    }
    catch (ConfigErrors const& e)
    {
        return e.messages();
    }
    return {};
}

bool any_contains(std::vector<std::string> const& v, std::string const& needle)
{
    for (auto const& s : v)
    {
        if (s.find(needle) != std::string::npos)
        {
            return true;
        }
    }
    return false;
}

int run_binary(std::string const& args)
{
    std::string const cmd = std::string(SPINFW_BINARY) + " " + args + " > /dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("minimal simulate config fills the defaults")
{
    RunConfig const c = parse_config_text("mode = simulate\nfield.model = uniform\n");
    CHECK(c.mode == Mode::Simulate);
    REQUIRE(c.declared_mode.has_value());
    CHECK(c.field_b0 == ThreeVector(0, 0, 1e-2));
    CHECK(c.integrator().step == doctest::Approx(c.larmor_period() / 1000));
    CHECK(c.larmor_period() == doctest::Approx(2 * M_PI / (c.particle().gamma_m() * 1e-2)));
    CHECK(c.seed == 1);
    CHECK(c.profile == Profile::Default);
}

TEST_CASE("comments, blank lines and lists")
{
    RunConfig const c = parse_config_text("# comment\n\nmode = verify-fw\n"
                                          "lattice.cases = II\nfw.lambdas = 1e-3, 1e-4, 1e-5\n"
                                          "fw.include_darwin = false\n");
    CHECK(c.mode == Mode::VerifyFw);
    CHECK(c.cases == std::vector<opalg::Case>{opalg::Case::II});
    CHECK(c.lambdas == std::vector<double>{1e-3, 1e-4, 1e-5});
    CHECK_FALSE(c.include_darwin);
    CHECK(parse_number_list("1, 2.5,3e-2") == std::vector<double>{1, 2.5, 3e-2});
}

TEST_CASE("|beta| >= 1 is rejected naming boost.beta and its line")
{
    auto const e = errors_of("mode = boost\nboost.beta = 0.6, 0.8, 0\n");
    REQUIRE(e.size() == 1);
    CHECK(e[0].find("t.cfg:2") != std::string::npos);
    CHECK(e[0].find("boost.beta") != std::string::npos);
    CHECK(any_contains(errors_of("mode = boost\n"), "boost.beta"));
}

TEST_CASE("odd lattice size is rejected")
{
    auto const e = errors_of("mode = verify-fw\nlattice.sites = 15\n");
    CHECK(any_contains(e, "t.cfg:2: lattice.sites"));
}

TEST_CASE("unknown, duplicate and malformed keys; every error reported")
{
    auto const e = errors_of("mode = simulate\nfield.model = uniform\nfield.bogus = 1\n"
                             "particle.m = 1\nparticle.m = 2\njust text\nparticle.e = x\n");
    CHECK(any_contains(e, "t.cfg:3: field.bogus: unknown key"));
    CHECK(any_contains(e, "t.cfg:5: particle.m: duplicate key"));
    CHECK(any_contains(e, "t.cfg:6: expected 'key = value'"));
    CHECK(any_contains(e, "t.cfg:7: particle.e"));
    CHECK(e.size() == 4);
}

TEST_CASE("simulate needs a field model; bad values are rejected")
{
    CHECK(any_contains(errors_of("mode = simulate\n"), "field.model"));
    CHECK(any_contains(errors_of("field.model = vortex\n"), "field.model"));
    CHECK(any_contains(errors_of("particle.m = -1\n"), "particle.m"));
    CHECK(any_contains(errors_of("lattice.rho = 0.95\n"), "lattice.rho"));
    CHECK(any_contains(errors_of("fw.lambdas = 1e-3, 1e-4\n"), "fw.lambdas"));
}

TEST_CASE("missing config file")
{
    CHECK_THROWS_AS(parse_config("/nonexistent/none.cfg"), ConfigFileError);
}

TEST_CASE("FNV-1a reference values")
{
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("check relations and expected failures")
{
    Check c;
    c.value = 0.5;
    c.tolerance = 1;
    CHECK(c.pass());
    c.expected_fail = true;
    CHECK_FALSE(c.pass());
    c.relation = Check::Relation::Near;
    c.target = 2;
    c.tolerance = 0.1;
    CHECK(c.pass());
    c.relation = Check::Relation::True;
    c.value = 0;
    c.expected_fail = false;
    CHECK_FALSE(c.pass());
    auto const round = check_from_json(to_json(c));
    CHECK(round.name == c.name);
    CHECK(round.relation == c.relation);
}

TEST_CASE("every criterion has a name and a summary")
{
    CHECK(criteria().size() == 13);
    for (auto const& info : criteria())
    {
        CHECK(std::string(criterion_name(info.id)) == info.name);
        CHECK(std::string(criterion_summary(info.id)).size() > 10);
    }
}

TEST_CASE("simulate run is deterministic and writes its artifacts")
{
    RunConfig c = parse_config_text("mode = simulate\nfield.model = uniform\n");
    c.out_dir = scratch("sim_a").string();
    ResultRecord const a = run(c);
    c.out_dir = scratch("sim_b").string();
    ResultRecord const b = run(c);
    CHECK(exit_code_for(a) == exit_pass);
    CHECK(a.run_id == b.run_id);
    CHECK(slurp(fs::path(a.config.out_dir) / "results.json")
          == slurp(fs::path(b.config.out_dir) / "results.json"));
    for (char const* f : {"results.json", "metadata.json", "report.txt", "trajectory.json",
                          "trajectory.csv"})
    {
        CHECK(fs::exists(fs::path(c.out_dir) / f));
    }
    auto const meta = read_json((fs::path(c.out_dir) / "metadata.json").string());
    CHECK(meta.contains("started_at"));

    // report mode re-renders the stored results
    RunConfig r = c;
    r.mode = Mode::Report;
    ResultRecord const rep = run(r);
    CHECK(rep.checks.size() == b.checks.size());
    CHECK(slurp(fs::path(c.out_dir) / "report.txt").find("overall: PASS") != std::string::npos);
}

TEST_CASE("verify-fw without Darwin: red by default, green under the negative-result profile")
{
    RunConfig c = parse_config_text("mode = verify-fw\nlattice.cases = II\nlattice.sites = 16\n"
                                    "fw.include_darwin = false\n");
    c.out_dir = scratch("fw_default").string();
    ResultRecord const plain = run(c);
    CHECK(exit_code_for(plain) == exit_verification_failure);

    c.profile = Profile::NegativeResult;
    c.out_dir = scratch("fw_negative").string();
    ResultRecord const negative = run(c);
    CHECK(exit_code_for(negative) == exit_pass);
    bool saw_expected = false;
    for (auto const& chk : negative.checks)
    {
        saw_expected = saw_expected || chk.expected_fail;
    }
    CHECK(saw_expected);
}

TEST_CASE("binary exit codes")
{
    fs::path const dir = scratch("binary");
    std::ofstream(dir / "sim.cfg") << "mode = simulate\nfield.model = uniform\n";
    std::ofstream(dir / "bad.cfg") << "mode = boost\nboost.beta = 1, 0, 0\n";
    std::string const out = " --out " + (dir / "out").string();
    CHECK(run_binary("simulate --config " + (dir / "sim.cfg").string() + out) == 0);
    CHECK(run_binary("boost --config " + (dir / "bad.cfg").string() + out) == 2);
    CHECK(run_binary("boost --config " + (dir / "sim.cfg").string() + out) == 2);
    CHECK(run_binary("simulate --config " + (dir / "missing.cfg").string() + out) == 2);
    CHECK(run_binary("verify-fw --case II --no-darwin --lambda-list 1e-3,1e-4" + out) == 2);
    CHECK(run_binary("report" + out) == 0);
    CHECK(run_binary("frobnicate") == 2);
}
