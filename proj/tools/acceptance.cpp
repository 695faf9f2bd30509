// Acceptance suite: one PASS/FAIL line per criterion.
//   spinfw_acceptance            all criteria
//   spinfw_acceptance 3 10       selected criteria
//   --verbose                    also print every check

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>

#include "spinfw/cli/checks.hpp"
#include "spinfw/cli/report.hpp"

using namespace spinfw::cli;

namespace
{

constexpr std::uint64_t acceptance_seed = 20240531;

bool run_one(int id, bool verbose)
{
    auto const t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try
    {
        checks = run_criterion(id, acceptance_seed);
    }
    catch (std::exception const& e)
    {
        error = e.what();
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = error.empty() && !checks.empty();
    Check const* worst = nullptr;
    for (auto const& c : checks)
    {
        if (!c.pass())
        {
            pass = false;
            worst = worst == nullptr ? &c : worst;
        }
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  "
              << std::left << std::setw(28) << criterion_name(id) << std::right;
    if (!error.empty())
    {
        std::cout << "  error: " << error;
    }
    else if (worst != nullptr)
    {
        std::cout << "  first failing: " << check_line(to_json(*worst)).substr(6);
    }
    else
    {
        std::cout << "  " << checks.size() << " checks";
    }
    std::cout << "  (" << std::fixed << std::setprecision(1) << seconds << " s)"
              << std::defaultfloat << "\n";
    if (verbose)
    {
        for (auto const& c : checks)
        {
            std::cout << "      " << check_line(to_json(c)) << "\n";
            if (!c.detail.is_null())
            {
                std::cout << "        " << c.detail.dump() << "\n";
            }
        }
    }
    return pass;
}

}  // namespace

int main(int argc, char** argv)
{
    bool verbose = false;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i)
    {
        if (std::strcmp(argv[i], "--verbose") == 0 || std::strcmp(argv[i], "-v") == 0)
        {
            verbose = true;
            continue;
        }
        char* end = nullptr;
        long const id = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || id < 1 || id > 13)
        {
            std::cerr << "usage: spinfw_acceptance [--verbose] [criterion 1..13 ...]\n";
            return 2;
        }
        ids.push_back(static_cast<int>(id));
    }
    if (ids.empty())
    {
        for (auto const& c : criteria())
        {
            ids.push_back(c.id);
        }
    }
    bool all = true;
    for (int id : ids)
    {
        all = run_one(id, verbose) && all;
    }
    return all ? 0 : 1;
}
