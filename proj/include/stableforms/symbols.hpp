#ifndef STABLEFORMS_SYMBOLS_HPP
#define STABLEFORMS_SYMBOLS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace stableforms {

using SymbolId = std::size_t;

// Process-wide append-only symbol registry.  The fifteen coefficient
// symbols a12 < a13 < ... < a56 are preregistered in that order, so ids
// double as the canonical variable order for monomial comparisons.
class SymbolTable {
public:
    static SymbolId intern(const std::string& name);
    static std::string name(SymbolId id);
    static std::size_t size();

    // Id of the coefficient symbol a_ij for 1 <= i < j <= 6.
    static SymbolId coeff(int i, int j);

    // The preregistered a12..a56 block, in canonical order.
    static const std::vector<SymbolId>& canonical();

    // Ids already interned whose name matches, else nullopt semantics
    // via found flag; registration happens only through intern().
    static bool lookup(const std::string& name, SymbolId& out);
};

}  // namespace stableforms

#endif
