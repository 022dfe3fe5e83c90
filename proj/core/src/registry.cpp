#include "umbral/registry.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "umbral/error.hpp"

namespace umbral {

namespace {

const std::vector<std::string> kBuiltins = {"eps", "u", "chi", "bell", "bern", "ubar", "uinv"};
const std::vector<std::string> kReserved = {"inv", "cinv", "adj",   "d",     "dsum", "ddiff",
                                            "bar", "mul",  "scale", "fresh", "x",    "y"};

} // namespace

Umbra builtin_umbra(const std::string& name, unsigned order) {
    std::vector<Poly> m(order + 1);
    m[0] = Poly(1);
    if (name == "eps") {
    } else if (name == "u") {
        for (auto& v : m) v = Poly(1);
    } else if (name == "chi") {
        if (order >= 1) m[1] = Poly(1);
    } else if (name == "bell") {
        // exp(e^t - 1)
        TruncatedEGF h = TruncatedEGF::exp_t(order);
        h[0] = Poly();
        return Umbra::from_egf(egf_exp(h), name);
    } else if (name == "bern") {
        // t / (e^t - 1) = 1 / (1 + t/2! + t^2/3! + ...)
        TruncatedEGF q(order);
        for (unsigned n = 0; n <= order; ++n) q[n] = Poly(Rational(1) / factorial(n + 1));
        return Umbra::from_egf(egf_reciprocal(q), name);
    } else if (name == "ubar") {
        for (unsigned n = 0; n <= order; ++n) m[n] = Poly(factorial(n));
    } else if (name == "uinv") {
        for (unsigned n = 1; n <= order; ++n) m[n] = Poly(n % 2 == 1 ? factorial(n - 1) : -factorial(n - 1));
    } else {
        throw NameError("unknown umbra '" + name + "'");
    }
    return Umbra(std::move(m), name);
}

const std::vector<std::string>& Registry::builtin_names() { return kBuiltins; }

bool Registry::is_builtin(const std::string& name) {
    return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

bool Registry::is_reserved(const std::string& name) {
    return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

bool Registry::is_valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool Registry::contains(const std::string& name) const {
    if (is_builtin(name)) return true;
    std::shared_lock lock(mu_);
    return user_.count(name) > 0;
}

Umbra Registry::get(const std::string& name, unsigned order) const {
    if (is_builtin(name)) return builtin_umbra(name, order);
    std::shared_lock lock(mu_);
    auto it = user_.find(name);
    if (it == user_.end()) throw NameError("unknown umbra '" + name + "'");
    if (order > it->second.order())
        throw OrderMismatchError("umbra '" + name + "' is only defined up to order " +
                                 std::to_string(it->second.order()) + ", order " + std::to_string(order) +
                                 " requested");
    return it->second.truncate(order).named(name);
}

std::optional<unsigned> Registry::max_order(const std::string& name) const {
    if (is_builtin(name)) return std::nullopt;
    std::shared_lock lock(mu_);
    auto it = user_.find(name);
    if (it == user_.end()) throw NameError("unknown umbra '" + name + "'");
    return it->second.order();
}

void Registry::define(const std::string& name, const Umbra& umbra) {
    if (!is_valid_name(name)) throw NameError("invalid umbra name '" + name + "'");
    if (is_builtin(name)) throw NameError("'" + name + "' is a built-in umbra");
    if (is_reserved(name)) throw NameError("'" + name + "' is a reserved word");
    std::unique_lock lock(mu_);
    user_.insert_or_assign(name, umbra.named(name));
}

bool Registry::remove(const std::string& name) {
    std::unique_lock lock(mu_);
    return user_.erase(name) > 0;
}

std::map<std::string, Umbra> Registry::user_umbrae() const {
    std::shared_lock lock(mu_);
    return user_;
}

} // namespace umbral
