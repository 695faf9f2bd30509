#include "spinfw/opalg/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <memory>

#include "spinfw/core/types.hpp"

namespace spinfw::opalg
{

namespace
{

std::atomic<std::uint64_t> dropped_counter{0};

using Pieces = std::vector<std::pair<Key, Scalar>>;
using Accumulator = CanonicalForm::Map;

std::uint64_t pack_pi(std::array<std::uint8_t, 3> const& a)
{
    return a[0] | (std::uint64_t{a[1]} << 8) | (std::uint64_t{a[2]} << 16);
}

// Scalar (-i)^n
Scalar minus_i_power(int n)
{
    return Scalar(1).times_i_power(3 * n);
}

class Engine
{
  public:
    explicit Engine(AlgebraOptions const& opts) : opts_(opts) {}

    AlgebraOptions const& options() const { return opts_; }

    bool admit(Key const& k) const
    {
        if (opts_.neutral && k.params[Param::E] > 0)
        {
            return false;
        }
        if (k.field.is_field())
        {
            int const order = k.field.derivative_order();
            if (order > 0 && (opts_.uniform_fields || opts_.commuting))
            {
                return false;
            }
            if (opts_.max_derivative_order >= 0
                && order > opts_.max_derivative_order)
            {
                dropped_counter.fetch_add(1, std::memory_order_relaxed);
                return false;
            }
        }
        return true;
    }

    void add(Accumulator& acc, Key const& k, Scalar const& c) const
    {
        if (c.is_zero() || !admit(k))
        {
            return;
        }
        auto [it, inserted] = acc.try_emplace(k, c);
        if (!inserted)
        {
            it->second += c;
            if (it->second.is_zero())
            {
                acc.erase(it);
            }
        }
    }

    // pi_i * (monomial k with coefficient c), accumulated into acc.
    void lmul_pi(int i, Key const& k, Scalar const& c, Accumulator& acc)
    {
        if (k.field.is_field())
        {
            Key moved = k;
            ++moved.pi[i];
            add(acc, moved, c);
            if (!opts_.commuting && !opts_.uniform_fields)
            {
                // [pi_i, f] = -i hbar (d_i f)
                Key deriv = k;
                deriv.field = k.field.differentiated(i);
                deriv.params += Params::single(Param::Hbar);
                add(acc, deriv, c.times_i_power(3));
            }
            return;
        }
        Pieces const& pieces = lmul_field_free(i, k.pi);
        for (auto const& [pk, pc] : pieces)
        {
            Key out = pk;
            out.params += k.params;
            out.slot = k.slot;
            add(acc, out, c * pc);
        }
    }

    // pi_i * pi^gamma as relative pieces (identity slot, params delta).
    Pieces const& lmul_field_free(int i, std::array<std::uint8_t, 3> const& gamma)
    {
        std::uint64_t const key = pack_pi(gamma) | (std::uint64_t(i) << 24);
        if (auto it = lmul_memo_.find(key); it != lmul_memo_.end())
        {
            return *it->second;
        }
        int j = -1;
        if (!opts_.commuting)
        {
            for (int q = 0; q < i; ++q)
            {
                if (gamma[q] > 0)
                {
                    j = q;
                    break;
                }
            }
        }
        auto result = std::make_unique<Pieces>();
        if (j < 0)
        {
            Key k;
            k.pi = gamma;
            ++k.pi[i];
            result->emplace_back(k, Scalar(1));
        }
        else
        {
            // pi_i pi_j R = pi_j (pi_i R) + [pi_i, pi_j] R
            std::array<std::uint8_t, 3> rest = gamma;
            --rest[j];
            Pieces const inner = lmul_field_free(i, rest);
            Accumulator acc;
            for (auto const& [pk, pc] : inner)
            {
                lmul_pi(j, pk, pc, acc);
            }
            if (!opts_.neutral)
            {
                for (int l = 0; l < 3; ++l)
                {
                    int const eps = levi_civita(i, j, l);
                    if (eps == 0)
                    {
                        continue;
                    }
                    Key k;
                    k.field = Symbol::field(FieldKind::B, l);
                    k.pi = rest;
                    k.params = Params::single(Param::Hbar)
                               + Params::single(Param::E)
                               + Params::single(Param::C, -1);
                    add(acc, k, Scalar(0, eps));
                }
            }
            result->assign(acc.begin(), acc.end());
        }
        auto [it, _] = lmul_memo_.emplace(key, std::move(result));
        return *it->second;
    }

    // pi^alpha * pi^beta as relative pieces.
    Pieces const& field_free_product(std::array<std::uint8_t, 3> const& alpha,
                                     std::array<std::uint8_t, 3> const& beta)
    {
        std::uint64_t const key = pack_pi(alpha) | (pack_pi(beta) << 24);
        if (auto it = product_memo_.find(key); it != product_memo_.end())
        {
            return *it->second;
        }
        auto result = std::make_unique<Pieces>();
        int first = -1;
        for (int q = 0; q < 3; ++q)
        {
            if (alpha[q] > 0)
            {
                first = q;
                break;
            }
        }
        if (first < 0)
        {
            Key k;
            k.pi = beta;
            result->emplace_back(k, Scalar(1));
        }
        else
        {
            std::array<std::uint8_t, 3> rest = alpha;
            --rest[first];
            Pieces const inner = field_free_product(rest, beta);
            Accumulator acc;
            for (auto const& [pk, pc] : inner)
            {
                lmul_pi(first, pk, pc, acc);
            }
            result->assign(acc.begin(), acc.end());
        }
        auto [it, _] = product_memo_.emplace(key, std::move(result));
        return *it->second;
    }

    // (ca ka) * (cb kb) accumulated into acc.
    void multiply_monomials(Key const& ka, Scalar const& ca, Key const& kb,
                            Scalar const& cb, Accumulator& acc)
    {
        if (ka.field.is_field() && kb.field.is_field())
        {
            return;
        }
        auto const [phase, slot] = slot_product(ka.slot, kb.slot);
        Scalar const base = (ca * cb).times_i_power(phase);
        Params const params = ka.params + kb.params;

        if (ka.field.is_field())
        {
            Key k = ka;
            k.params = params;
            k.slot = slot;
            for (int q = 0; q < 3; ++q)
            {
                k.pi[q] = static_cast<std::uint8_t>(ka.pi[q] + kb.pi[q]);
            }
            add(acc, k, base);
            return;
        }
        if (!kb.field.is_field())
        {
            for (auto const& [pk, pc] : field_free_product(ka.pi, kb.pi))
            {
                Key k = pk;
                k.params += params;
                k.slot = slot;
                add(acc, k, base * pc);
            }
            return;
        }
        // pi^alpha g = sum_gamma C(alpha, gamma) (-i hbar)^|gamma| (d^gamma g) pi^(alpha-gamma)
        bool const derivatives = !opts_.commuting && !opts_.uniform_fields;
        std::array<int, 3> const top{
            derivatives ? ka.pi[0] : 0, derivatives ? ka.pi[1] : 0,
            derivatives ? ka.pi[2] : 0};
        for (int g0 = 0; g0 <= top[0]; ++g0)
        {
            for (int g1 = 0; g1 <= top[1]; ++g1)
            {
                for (int g2 = 0; g2 <= top[2]; ++g2)
                {
                    std::array<int, 3> const g{g0, g1, g2};
                    int const total = g0 + g1 + g2;
                    Key k;
                    k.params = params + Params::single(Param::Hbar, total);
                    k.slot = slot;
                    k.field = kb.field;
                    long mult = 1;
                    for (int q = 0; q < 3; ++q)
                    {
                        k.field.d[q] = static_cast<std::uint8_t>(k.field.d[q] + g[q]);
                        k.pi[q] = static_cast<std::uint8_t>(ka.pi[q] - g[q] + kb.pi[q]);
                        mult *= static_cast<long>(binomial_int(ka.pi[q], g[q]));
                    }
                    add(acc, k, base * Scalar(mult) * minus_i_power(total));
                }
            }
        }
    }

  private:
    AlgebraOptions opts_;
    std::unordered_map<std::uint64_t, std::unique_ptr<Pieces>> lmul_memo_;
    std::unordered_map<std::uint64_t, std::unique_ptr<Pieces>> product_memo_;
};

Engine& engine_for(AlgebraOptions const& opts)
{
    thread_local std::vector<std::unique_ptr<Engine>> engines;
    for (auto& e : engines)
    {
        if (e->options() == opts)
        {
            return *e;
        }
    }
    engines.push_back(std::make_unique<Engine>(opts));
    return *engines.back();
}

CanonicalForm from_accumulator(Accumulator&& acc)
{
    CanonicalForm out;
    for (auto& [k, c] : acc)
    {
        out.add(k, c);
    }
    return out;
}

}  // namespace

std::uint64_t dropped_derivative_terms()
{
    return dropped_counter.load();
}

void reset_dropped_derivative_terms()
{
    dropped_counter.store(0);
}

std::size_t KeyHash::operator()(Key const& k) const noexcept
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    std::uint64_t p = 0;
    for (int i = 0; i < param_count; ++i)
    {
        p = (p << 8) | static_cast<std::uint8_t>(k.params.exp[i]);
    }
    mix(p);
    mix(static_cast<std::uint64_t>(k.slot.index())
        | (std::uint64_t(k.field.kind) << 4) | (std::uint64_t(k.field.comp) << 6)
        | (pack_pi(k.field.d) << 8) | (pack_pi(k.pi) << 32));
    return static_cast<std::size_t>(h ^ (h >> 29));
}

CanonicalForm CanonicalForm::scalar(Scalar s, Params p)
{
    Key k;
    k.params = p;
    return monomial(k, std::move(s));
}

CanonicalForm CanonicalForm::monomial(Key k, Scalar s)
{
    CanonicalForm out;
    out.add(k, s);
    return out;
}

void CanonicalForm::add(Key const& k, Scalar const& s)
{
    if (s.is_zero())
    {
        return;
    }
    // Reorderings of pi words agree only modulo div B = 0, so d3 B3 is
    // eliminated in favour of -(d1 B1 + d2 B2).
    if (k.field.kind == FieldKind::B && k.field.comp == 2 && k.field.d[2] > 0)
    {
        for (int j = 0; j < 2; ++j)
        {
            Key r = k;
            r.field.comp = static_cast<std::uint8_t>(j);
            r.field.d[2] = static_cast<std::uint8_t>(r.field.d[2] - 1);
            r.field.d[j] = static_cast<std::uint8_t>(r.field.d[j] + 1);
            add(r, -s);
        }
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, s);
    if (!inserted)
    {
        it->second += s;
        if (it->second.is_zero())
        {
            terms_.erase(it);
        }
    }
}

Scalar CanonicalForm::coefficient(Key const& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<std::pair<Key, Scalar>> CanonicalForm::sorted() const
{
    std::vector<std::pair<Key, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    return out;
}

CanonicalForm& CanonicalForm::operator+=(CanonicalForm const& o)
{
    for (auto const& [k, c] : o.terms_)
    {
        add(k, c);
    }
    return *this;
}

CanonicalForm& CanonicalForm::operator-=(CanonicalForm const& o)
{
    for (auto const& [k, c] : o.terms_)
    {
        add(k, -c);
    }
    return *this;
}

CanonicalForm CanonicalForm::operator-() const
{
    CanonicalForm out = *this;
    for (auto& [k, c] : out.terms_)
    {
        c = -c;
    }
    return out;
}

CanonicalForm operator*(Scalar const& s, CanonicalForm a)
{
    if (s.is_zero())
    {
        return {};
    }
    for (auto& [k, c] : a.terms_)
    {
        c *= s;
    }
    return a;
}

CanonicalForm CanonicalForm::scaled(Params const& p, Slot s) const
{
    CanonicalForm out;
    for (auto const& [k, c] : terms_)
    {
        auto const [phase, slot] = slot_product(s, k.slot);
        Key nk = k;
        nk.params += p;
        nk.slot = slot;
        out.add(nk, c.times_i_power(phase));
    }
    return out;
}

CanonicalForm canonicalize(OpExpr const& a, AlgebraOptions const& opts)
{
    Engine& eng = engine_for(opts);
    Accumulator total;
    for (Term const& t : a.terms())
    {
        // Right fold: apply the letters from the right end of the word.
        Accumulator cur;
        cur.emplace(Key{}, Scalar(1));
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
        {
            Accumulator next;
            if (it->is_field())
            {
                for (auto const& [k, c] : cur)
                {
                    if (k.field.is_field())
                    {
                        continue;
                    }
                    Key nk = k;
                    nk.field = *it;
                    eng.add(next, nk, c);
                }
            }
            else
            {
                for (auto const& [k, c] : cur)
                {
                    eng.lmul_pi(it->comp, k, c, next);
                }
            }
            cur = std::move(next);
        }
        for (auto const& [k, c] : cur)
        {
            Key nk = k;
            nk.params += t.params;
            nk.slot = t.slot;
            eng.add(total, nk, c * t.coef);
        }
    }
    return from_accumulator(std::move(total));
}

CanonicalForm multiply(CanonicalForm const& a, CanonicalForm const& b,
                       AlgebraOptions const& opts)
{
    Engine& eng = engine_for(opts);
    Accumulator acc;
    for (auto const& [ka, ca] : a.terms())
    {
        for (auto const& [kb, cb] : b.terms())
        {
            eng.multiply_monomials(ka, ca, kb, cb, acc);
        }
    }
    return from_accumulator(std::move(acc));
}

OpExpr to_expr(CanonicalForm const& a)
{
    OpExpr out;
    for (auto const& [k, c] : a.sorted())
    {
        Term t;
        t.coef = c;
        t.params = k.params;
        t.slot = k.slot;
        if (k.field.is_field())
        {
            t.word.push_back(k.field);
        }
        for (int q = 0; q < 3; ++q)
        {
            for (int n = 0; n < k.pi[q]; ++n)
            {
                t.word.push_back(Symbol::pi(q));
            }
        }
        out.add(std::move(t));
    }
    return out;
}

CanonicalForm apply_options(CanonicalForm const& a, AlgebraOptions const& opts)
{
    Engine& eng = engine_for(opts);
    Accumulator acc;
    for (auto const& [k, c] : a.terms())
    {
        eng.add(acc, k, c);
    }
    return from_accumulator(std::move(acc));
}

VectorForm pi_vector_form()
{
    VectorForm out;
    for (int i = 0; i < 3; ++i)
    {
        Key k;
        k.pi[i] = 1;
        out[i] = CanonicalForm::monomial(k);
    }
    return out;
}

VectorForm field_vector_form(FieldKind kind)
{
    VectorForm out;
    for (int i = 0; i < 3; ++i)
    {
        Key k;
        k.field = Symbol::field(kind, i);
        out[i] = CanonicalForm::monomial(k);
    }
    return out;
}

VectorForm slot_vector_form(Slot (*make)(int))
{
    VectorForm out;
    for (int i = 0; i < 3; ++i)
    {
        Key k;
        k.slot = make(i);
        out[i] = CanonicalForm::monomial(k);
    }
    return out;
}

CanonicalForm dot(VectorForm const& a, VectorForm const& b,
                  AlgebraOptions const& opts)
{
    CanonicalForm out;
    for (int i = 0; i < 3; ++i)
    {
        out += multiply(a[i], b[i], opts);
    }
    return out;
}

VectorForm cross(VectorForm const& a, VectorForm const& b,
                 AlgebraOptions const& opts)
{
    VectorForm out;
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            for (int k = 0; k < 3; ++k)
            {
                int const eps = levi_civita(i, j, k);
                if (eps != 0)
                {
                    out[i] += Scalar(eps) * multiply(a[j], b[k], opts);
                }
            }
        }
    }
    return out;
}

}  // namespace spinfw::opalg
