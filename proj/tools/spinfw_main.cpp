// Command-line front end: spinfw <mode> [flags].

#include <iostream>

#include <CLI11.hpp>

#include "spinfw/cli/config.hpp"
#include "spinfw/cli/report.hpp"
#include "spinfw/cli/run.hpp"

using namespace spinfw;
using namespace spinfw::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Spin dynamics and Foldy-Wouthuysen correspondence verification"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    std::string profile;
    int order = 0;
    std::string lambda_list;
    std::vector<std::string> cases;
    bool no_darwin = false;

    for (Mode m : {Mode::Simulate, Mode::Boost, Mode::VerifyAlgebra, Mode::VerifyFw,
                   Mode::Report})
    {
        CLI::App* sub = app.add_subcommand(mode_name(m));
        sub->add_option("--config", config_path, "config file (key = value lines)");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--profile", profile, "default | negative-result")
            ->check(CLI::IsMember({"default", "negative-result"}));
        if (m == Mode::VerifyAlgebra)
        {
            sub->add_option("--order", order, "expansion order N")->check(CLI::Range(1, 12));
        }
        if (m == Mode::VerifyFw)
        {
            sub->add_option("--lambda-list", lambda_list, "comma-separated field amplitudes");
            sub->add_option("--case", cases, "I and/or II")->check(CLI::IsMember({"I", "II"}));
            sub->add_flag("--no-darwin", no_darwin, "omit the Darwin term");
        }
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return exit_configuration_error;
    }

    try
    {
        Mode const mode = *parse_mode(app.get_subcommands().front()->get_name());
        RunConfig config = config_path.empty() ? RunConfig{} : parse_config(config_path);
        if (config.declared_mode && *config.declared_mode != mode)
        {
            throw ConfigurationError(config_path + ": mode: file declares "
                                     + mode_name(*config.declared_mode) + " but the command is "
                                     + mode_name(mode));
        }
        config.mode = mode;
        auto* sub = app.get_subcommands().front();
        if (sub->count("--out") > 0)
        {
            config.out_dir = out_dir;
        }
        if (sub->count("--seed") > 0)
        {
            config.seed = seed;
        }
        if (!profile.empty())
        {
            config.profile = *parse_profile(profile);
        }
        if (order > 0)
        {
            config.order = order;
        }
        if (!lambda_list.empty())
        {
            try
            {
                config.lambdas = parse_number_list(lambda_list);
            }
            catch (std::invalid_argument const& e)
            {
                throw ConfigurationError(std::string("--lambda-list: ") + e.what());
            }
        }
        if (!cases.empty())
        {
            config.cases.clear();
            for (auto const& c : cases)
            {
                config.cases.push_back(c == "I" ? opalg::Case::I : opalg::Case::II);
            }
        }
        if (no_darwin)
        {
            config.include_darwin = false;
        }
        validate(config, config_path.empty() ? "<flags>" : config_path);

        ResultRecord const record = run(config);
        if (mode == Mode::Report)
        {
            std::cout << render_report(read_json(config.out_dir + "/results.json"));
        }
        else
        {
            std::cout << render_report(record.results_json());
            std::cout << "artifacts in " << config.out_dir << "\n";
        }
        return exit_code_for(record);
    }
    catch (ConfigurationError const& e)
    {
        std::cerr << "configuration error:\n" << e.what() << "\n";
        return exit_configuration_error;
    }
    catch (PreconditionError const& e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_configuration_error;
    }
    catch (SeriesTruncationError const& e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_configuration_error;
    }
    catch (DomainError const& e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_configuration_error;
    }
    catch (std::exception const& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    }
}
