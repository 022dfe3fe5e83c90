#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "umbral/umbra.hpp"

namespace umbral {

// Named umbrae. The built-ins (eps, u, chi, bell, bern, ubar, uinv) are generated
// to any requested order; user umbrae are finite moment lists. Lookups may run
// concurrently; define() takes an exclusive lock.
class Registry {
public:
    static const std::vector<std::string>& builtin_names();
    static bool is_builtin(const std::string& name);
    // Keywords of the expression language plus the indeterminates x and y.
    static bool is_reserved(const std::string& name);
    static bool is_valid_name(const std::string& name);

    bool contains(const std::string& name) const;
    // Moments a_0..a_order. Throws NameError for unknown names and
    // OrderMismatchError when a user umbra is too short.
    Umbra get(const std::string& name, unsigned order) const;
    // Highest order available; nullopt for built-ins (unbounded).
    std::optional<unsigned> max_order(const std::string& name) const;

    // Adds or replaces a user umbra. Throws NameError on built-in, reserved or
    // malformed names.
    void define(const std::string& name, const Umbra& umbra);
    bool remove(const std::string& name);

    std::map<std::string, Umbra> user_umbrae() const;

private:
    mutable std::shared_mutex mu_;
    std::map<std::string, Umbra> user_;
};

// Built-in generator, usable without a registry.
Umbra builtin_umbra(const std::string& name, unsigned order);

} // namespace umbral
