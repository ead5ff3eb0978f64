#ifndef HYPERSTRATA_ERRORS_HPP
#define HYPERSTRATA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperstrata {

// A combinatorial consistency guarantee failed: a poset violated the
// axioms it was certified against, a shelling order was cyclic, a complex
// was not downward closed. These are never swallowed.
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration was requested beyond the documented feasible scale and
// --force was not given.
class scale_error : public std::runtime_error {
public:
    explicit scale_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperstrata

#endif
