#include "wronsk/symbol_table.hpp"

#include "wronsk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace wronsk {

namespace {

void validate_name(const std::string& name) {
    if (name.empty()) throw UsageError("empty symbol name");
    if (std::isdigit(static_cast<unsigned char>(name.front())))
        throw UsageError("symbol name may not start with a digit: " + name);
    for (char c : name) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        if (!ok)
            throw UsageError("symbol name contains a reserved character: " + name);
    }
}

} // namespace

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        validate_name(n);
        if (!seen.insert(n).second) throw UsageError("duplicate symbol name: " + n);
    }
}

SymbolsPtr SymbolTable::make(std::vector<std::string> names) {
    return SymbolsPtr(new SymbolTable(std::move(names)));
}

const SymbolsPtr& SymbolTable::scalars() {
    static const SymbolsPtr empty = make({});
    return empty;
}

SymbolsPtr SymbolTable::prefixed(const std::string& prefix, int count) {
    if (count < 0) throw UsageError("negative symbol count");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return make(std::move(names));
}

SymbolsPtr SymbolTable::ode_coefficients(int rank) {
    if (rank < 0) throw UsageError("rank must be nonnegative");
    return prefixed("e", rank + 1);
}

SymbolsPtr SymbolTable::ode_with_inits(int rank) {
    if (rank < 0) throw UsageError("rank must be nonnegative");
    std::vector<std::string> names;
    for (int i = 1; i <= rank + 1; ++i) names.push_back("e" + std::to_string(i));
    for (int i = 0; i <= rank; ++i) names.push_back("y" + std::to_string(i));
    return make(std::move(names));
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace wronsk
