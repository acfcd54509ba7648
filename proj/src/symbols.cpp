#include "stableforms/symbols.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace stableforms {

namespace {

struct Registry {
    std::vector<std::string> names;
    std::unordered_map<std::string, SymbolId> ids;
    std::vector<SymbolId> canonical;
    std::mutex mu;

    Registry() {
        for (int i = 1; i <= 6; ++i) {
            for (int j = i + 1; j <= 6; ++j) {
                std::string n = "a" + std::to_string(i) + std::to_string(j);
                SymbolId id = names.size();
                ids.emplace(n, id);
                names.push_back(n);
                canonical.push_back(id);
            }
        }
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

SymbolId SymbolTable::intern(const std::string& name) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return it->second;
    SymbolId id = r.names.size();
    r.ids.emplace(name, id);
    r.names.push_back(name);
    return id;
}

std::string SymbolTable::name(SymbolId id) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    if (id >= r.names.size()) throw std::out_of_range("symbol id");
    return r.names[id];
}

std::size_t SymbolTable::size() {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return r.names.size();
}

SymbolId SymbolTable::coeff(int i, int j) {
    if (i < 1 || j <= i || j > 6) throw std::out_of_range("coeff symbol index");
    // a12..a16, a23..a26, ... laid out row by row
    int offset = 0;
    for (int row = 1; row < i; ++row) offset += 6 - row;
    return static_cast<SymbolId>(offset + (j - i - 1));
}

const std::vector<SymbolId>& SymbolTable::canonical() {
    return registry().canonical;
}

bool SymbolTable::lookup(const std::string& name, SymbolId& out) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(name);
    if (it == r.ids.end()) return false;
    out = it->second;
    return true;
}

}  // namespace stableforms
