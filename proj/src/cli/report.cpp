#include "spinfw/cli/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "spinfw/cli/checks.hpp"
#include "spinfw/cli/config.hpp"

namespace spinfw::cli
{

char const* criterion_summary(int id)
{
    switch (id)
    {
    case 1:
        return "spin rotation angle in uniform B with pi = 0 equals gamma_m B0 t";
    case 2:
        return "|s| and H_total are conserved along the Hamiltonian flow";
    case 3:
        return "for gamma_m = e/mc the pitch s . pi_hat is locked in uniform B";
    case 4:
        return "modified BMT equation agrees with the lab-frame precession at stencil order";
    case 5:
        return "analytic equations of motion equal finite differences of H_total";
    case 6:
        return "series expansion of the exact FW operator equals the Weyl-ordered closed form";
    case 7:
        return "full-algebra and Weyl orderings agree modulo pi^2 reordering";
    case 8:
        return "Darwin coefficient reduces to its Dirac and neutral-particle values";
    case 9:
        return "exact FW transform preserves the spectrum and is block diagonal";
    case 10:
        return "FW transform minus Weyl-ordered correspondence is O(lambda^2)";
    case 11:
        return "classical Darwin candidate without 1/gamma_pi underperforms the Weyl form";
    case 12:
        return "H and H' commute with parity";
    case 13:
        return "boosted precession vector matches gamma F_pi up to O(amplitude^2)";
    default:
        return "";
    }
}

std::string check_line(nlohmann::json const& j)
{
    Check const c = check_from_json(j);
    std::ostringstream os;
    os << (c.pass() ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.criterion << "] "
       << c.name << "  value=" << std::setprecision(6) << c.value;
    switch (c.relation)
    {
    case Check::Relation::Near:
        os << " target=" << c.target << " +/- " << c.tolerance;
        break;
    case Check::Relation::True:
        break;
    default:
        os << " " << relation_text(c.relation) << " " << c.tolerance;
    }
    if (c.expected_fail)
    {
        os << "  (expected to fail: " << (c.measured_ok() ? "unexpectedly met" : "failed as expected")
           << ")";
    }
    return os.str();
}

std::string render_report(nlohmann::json const& results)
{
    std::ostringstream os;
    os << "run " << results.value("run_id", "?") << "  mode " << results.value("mode", "?")
       << "  profile " << results.value("profile", "?") << "\n";
    int last = 0;
    for (auto const& check : results.at("checks"))
    {
        int const id = check.at("criterion").get<int>();
        if (id != last)
        {
            os << "\ncriterion " << id << " (" << criterion_name(id) << "): "
               << criterion_summary(id) << "\n";
            last = id;
        }
        os << "  " << check_line(check) << "\n";
    }
    bool const pass = results.value("pass", false);
    os << "\noverall: " << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string canonical_dump(nlohmann::json const& j)
{
    return j.dump(2) + "\n";
}

void write_text(std::string const& path, std::string const& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw ConfigurationError("cannot write '" + path + "'");
    }
    out << text;
}

nlohmann::json read_json(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigFileError("cannot read '" + path + "'");
    }
    try
    {
        return nlohmann::json::parse(in);
    }
    catch (nlohmann::json::exception const& ex)
    {
        throw ConfigurationError("'" + path + "' is not valid JSON: " + ex.what());
    }
}

}  // namespace spinfw::cli
