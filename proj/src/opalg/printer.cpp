#include "spinfw/opalg/printer.hpp"

#include <sstream>

namespace spinfw::opalg
{

namespace
{

char const* const param_names[param_count] = {"hbar", "c", "m", "e", "mu'"};

}  // namespace

std::string symbol_text(Symbol const& s)
{
    if (!s.is_field())
    {
        return "pi" + std::to_string(s.comp + 1);
    }
    std::string out;
    for (int j = 0; j < 3; ++j)
    {
        for (int n = 0; n < s.d[j]; ++n)
        {
            out += "d" + std::to_string(j + 1);
        }
    }
    out += s.kind == FieldKind::E ? "E" : "B";
    out += std::to_string(s.comp + 1);
    return out;
}

std::string params_text(Params const& p)
{
    std::string out;
    for (int i = 0; i < param_count; ++i)
    {
        int const n = p.exp[i];
        if (n == 0)
        {
            continue;
        }
        if (!out.empty())
        {
            out += ' ';
        }
        out += param_names[i];
        if (n != 1)
        {
            out += '^' + std::to_string(n);
        }
    }
    return out;
}

std::string slot_text(Slot s)
{
    if (s.rho == 0 && s.sigma == 0)
    {
        return "1";
    }
    std::string out;
    if (s.rho == 3)
    {
        out = "beta";
    }
    else if (s.rho != 0)
    {
        out = "rho" + std::to_string(s.rho);
    }
    if (s.sigma != 0)
    {
        if (!out.empty())
        {
            out += ' ';
        }
        out += "sigma" + std::to_string(s.sigma);
    }
    return out;
}

std::string monomial_text(Key const& k)
{
    std::string out;
    if (k.field.is_field())
    {
        out = symbol_text(k.field);
    }
    for (int j = 0; j < 3; ++j)
    {
        if (k.pi[j] == 0)
        {
            continue;
        }
        if (!out.empty())
        {
            out += ' ';
        }
        out += "pi" + std::to_string(j + 1);
        if (k.pi[j] > 1)
        {
            out += '^' + std::to_string(k.pi[j]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_text(CanonicalForm const& a)
{
    if (a.is_zero())
    {
        return "0\n";
    }
    std::ostringstream os;
    for (auto const& [k, c] : a.sorted())
    {
        std::string coef = c.str();
        if (coef.front() != '-')
        {
            coef = "+" + coef;
        }
        os << coef;
        std::string const p = params_text(k.params);
        if (!p.empty())
        {
            os << ' ' << p;
        }
        os << " [" << slot_text(k.slot) << "] " << monomial_text(k) << '\n';
    }
    return os.str();
}

nlohmann::json to_json(CanonicalForm const& a)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto const& [k, c] : a.sorted())
    {
        nlohmann::json params = nlohmann::json::object();
        for (int i = 0; i < param_count; ++i)
        {
            if (k.params.exp[i] != 0)
            {
                params[param_names[i]] = k.params.exp[i];
            }
        }
        out.push_back({
            {"coef", {{"re", c.re().get_str()}, {"im", c.im().get_str()}}},
            {"params", params},
            {"slot", slot_text(k.slot)},
            {"field", k.field.is_field() ? symbol_text(k.field) : ""},
            {"pi", {k.pi[0], k.pi[1], k.pi[2]}},
        });
    }
    return out;
}

}  // namespace spinfw::opalg
