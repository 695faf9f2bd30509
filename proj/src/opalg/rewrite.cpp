#include "spinfw/opalg/rewrite.hpp"

#include <random>

#include "spinfw/core/types.hpp"

namespace spinfw::opalg
{

namespace
{

// True when (word[k], word[k+1]) is out of canonical order.
bool is_redex(std::vector<Symbol> const& w, std::size_t k)
{
    Symbol const& a = w[k];
    Symbol const& b = w[k + 1];
    if (a.is_field())
    {
        return false;
    }
    if (b.is_field())
    {
        return true;
    }
    return a.comp > b.comp;
}

bool has_field(std::vector<Symbol> const& w)
{
    for (Symbol const& s : w)
    {
        if (s.is_field())
        {
            return true;
        }
    }
    return false;
}

Key normal_key(Term const& t)
{
    Key k;
    k.params = t.params;
    k.slot = t.slot;
    for (Symbol const& s : t.word)
    {
        if (s.is_field())
        {
            k.field = s;
        }
        else
        {
            ++k.pi[s.comp];
        }
    }
    return k;
}

}  // namespace

CanonicalForm rewrite_to_normal_form(OpExpr const& a, AlgebraOptions const& opts,
                                     RewriteStrategy strategy, std::uint64_t seed,
                                     RewriteStats* stats)
{
    std::mt19937_64 rng(seed);
    std::vector<Term> work(a.terms().begin(), a.terms().end());
    OpExpr done;
    std::uint64_t steps = 0;

    while (!work.empty())
    {
        std::size_t ti = work.size() - 1;
        if (strategy == RewriteStrategy::Random)
        {
            ti = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(rng);
        }
        Term term = std::move(work[ti]);
        work[ti] = std::move(work.back());
        work.pop_back();

        std::vector<std::size_t> redexes;
        for (std::size_t k = 0; k + 1 < term.word.size(); ++k)
        {
            if (is_redex(term.word, k))
            {
                redexes.push_back(k);
            }
        }
        if (redexes.empty())
        {
            done.add(std::move(term));
            continue;
        }
        std::size_t pos = redexes.front();
        if (strategy == RewriteStrategy::Rightmost)
        {
            pos = redexes.back();
        }
        else if (strategy == RewriteStrategy::Random)
        {
            pos = redexes[std::uniform_int_distribution<std::size_t>(
                0, redexes.size() - 1)(rng)];
        }
        ++steps;

        Symbol const left = term.word[pos];
        Symbol const right = term.word[pos + 1];
        Term swapped = term;
        std::swap(swapped.word[pos], swapped.word[pos + 1]);

        if (right.is_field())
        {
            if (!opts.commuting && !opts.uniform_fields)
            {
                Term deriv = term;
                deriv.word[pos] = right.differentiated(left.comp);
                deriv.word.erase(deriv.word.begin() + static_cast<long>(pos) + 1);
                deriv.params += Params::single(Param::Hbar);
                deriv.coef = deriv.coef.times_i_power(3);
                work.push_back(std::move(deriv));
            }
        }
        else if (!has_field(term.word) && !opts.commuting && !opts.neutral)
        {
            int const i = left.comp;
            int const j = right.comp;
            for (int l = 0; l < 3; ++l)
            {
                int const eps = levi_civita(i, j, l);
                if (eps == 0)
                {
                    continue;
                }
                Term comm = term;
                comm.word[pos] = Symbol::field(FieldKind::B, l);
                comm.word.erase(comm.word.begin() + static_cast<long>(pos) + 1);
                comm.params += Params::single(Param::Hbar) + Params::single(Param::E)
                               + Params::single(Param::C, -1);
                comm.coef = comm.coef * Scalar(0, eps);
                work.push_back(std::move(comm));
            }
        }
        work.push_back(std::move(swapped));
    }
    if (stats != nullptr)
    {
        stats->steps = steps;
    }

    CanonicalForm raw;
    for (Term const& t : done.terms())
    {
        raw.add(normal_key(t), t.coef);
    }
    // Option-dependent zeros (e > 0 when neutral, overlong derivatives).
    return apply_options(raw, opts);
}

}  // namespace spinfw::opalg
