#include "spinfw/core/errors.hpp"

namespace spinfw
{

void throw_domain(std::string const& what)
{
    throw DomainError(what);
}

void throw_precondition(std::string const& what)
{
    throw PreconditionError(what);
}

}  // namespace spinfw
