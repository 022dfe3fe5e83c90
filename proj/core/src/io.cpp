#include "umbral/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "umbral/error.hpp"

namespace umbral {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Poly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[monomial_key(e.first, e.second)] = c.to_string();
    return j;
}

Json to_json(const std::vector<Poly>& polys) {
    Json j = Json::array();
    for (const auto& p : polys) j.push_back(to_json(p));
    return j;
}

Json to_json(const Matrix& m) {
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c.to_string());
        j.push_back(std::move(r));
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw InputError("expected a rational string, got " + j.dump());
}

namespace {

// "x^a*y^b" -> (a, b)
Poly::Exponents parse_key(const std::string& key) {
    unsigned a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(key.c_str(), "x^%u*y^%u%c", &a, &b, &tail) != 2 || monomial_key(a, b) != key)
        throw InputError("bad monomial key '" + key + "'");
    return {a, b};
}

} // namespace

Poly poly_from_json(const Json& j) {
    if (!j.is_object()) return Poly(rational_from_json(j));
    Poly p;
    for (const auto& [key, value] : j.items()) {
        const auto [a, b] = parse_key(key);
        p += Poly::monomial(rational_from_json(value), a, b);
    }
    return p;
}

Rational x_coefficient(const Poly& p, unsigned k) {
    if (p.degree(Var::Y) != 0) throw InputError("table output needs polynomials in x only");
    return p.coeff(k, 0);
}

std::string csv_table(const std::vector<Poly>& polys, unsigned width) {
    std::ostringstream os;
    os << "n";
    for (unsigned k = 0; k <= width; ++k) os << ",x^" << k;
    os << "\n";
    for (std::size_t n = 0; n < polys.size(); ++n) {
        os << n;
        for (unsigned k = 0; k <= width; ++k) os << "," << x_coefficient(polys[n], k);
        os << "\n";
    }
    return os.str();
}

namespace {

// Lower-triangular rows padded with zeros to a square.
Matrix square(const Matrix& m) {
    Matrix out = m;
    for (auto& row : out) row.resize(m.size(), Rational(0));
    return out;
}

} // namespace

std::string csv_matrix(const Matrix& raw) {
    const Matrix m = square(raw);
    std::ostringstream os;
    os << "n";
    for (std::size_t k = 0; k < m.size(); ++k) os << ",k" << k;
    os << "\n";
    for (std::size_t n = 0; n < m.size(); ++n) {
        os << n;
        for (const auto& c : m[n]) os << "," << c;
        os << "\n";
    }
    return os.str();
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    const std::string body = "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
    return r.sign() < 0 ? "-\\frac{" + (-r).numerator().get_str() + "}{" + r.denominator().get_str() + "}"
                        : body;
}

std::string latex_poly(const Poly& p) {
    // Same ordering as Poly::to_string: descending total degree, then x-degree.
    std::vector<std::pair<Poly::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        auto add_var = [&mono](const char* v, unsigned d) {
            if (d == 0) return;
            mono += v;
            if (d > 1) mono += "^{" + std::to_string(d) + "}";
        };
        add_var("x", e.first);
        add_var("y", e.second);
        if (mono.empty()) out += latex_rational(mag);
        else if (mag.is_one()) out += mono;
        else out += latex_rational(mag) + " " + mono;
    }
    return out;
}

namespace {

std::string latex_array(const std::vector<std::vector<Rational>>& rows, unsigned cols, const char* var) {
    std::ostringstream os;
    os << "\\begin{array}{r|" << std::string(cols, 'r') << "}\n";
    os << "n";
    for (unsigned k = 0; k < cols; ++k) {
        if (std::string_view(var) == "k") os << " & k=" << k;
        else os << " & " << var << "^{" << k << "}";
    }
    os << " \\\\\n\\hline\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
        os << n;
        for (const auto& c : rows[n]) os << " & " << latex_rational(c);
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

} // namespace

std::string latex_table(const std::vector<Poly>& polys, unsigned width) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : polys) {
        std::vector<Rational> row;
        for (unsigned k = 0; k <= width; ++k) row.push_back(x_coefficient(p, k));
        rows.push_back(std::move(row));
    }
    return latex_array(rows, width + 1, "x");
}

std::string latex_matrix(const Matrix& m) {
    return latex_array(square(m), static_cast<unsigned>(m.size()), "k");
}

Workspace::Workspace(std::filesystem::path path) : path_(std::move(path)) {
    doc_ = {{"version", 1}, {"umbrae", Json::object()}};
}

std::filesystem::path Workspace::default_path() {
    if (const char* env = std::getenv("UMBRA_WORKSPACE"); env && *env) return env;
    return "umbrae.json";
}

void Workspace::load() {
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) {
        if (ec) throw IoError("cannot access workspace " + path_.string() + ": " + ec.message());
        doc_ = {{"version", 1}, {"umbrae", Json::object()}};
        return;
    }
    if (std::filesystem::is_directory(path_, ec)) throw IoError("workspace " + path_.string() + " is a directory");
    std::ifstream in(path_, std::ios::binary);
    if (!in) throw IoError("cannot open workspace " + path_.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IoError("workspace " + path_.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw InputError("workspace must be a JSON object");
    if (!doc.contains("version") || doc["version"] != 1)
        throw InputError("unsupported workspace version in " + path_.string());
    if (!doc.contains("umbrae")) doc["umbrae"] = Json::object();
    if (!doc["umbrae"].is_object()) throw InputError("workspace field 'umbrae' must be an object");
    for (const auto& [name, entry] : doc["umbrae"].items()) {
        if (!entry.is_object() || !entry.contains("moments") || !entry["moments"].is_array())
            throw InputError("workspace umbra '" + name + "' has no moments array");
    }
    doc_ = std::move(doc);
}

void Workspace::save() const {
    const auto dir = path_.has_parent_path() ? path_.parent_path() : std::filesystem::path(".");
    const auto tmp = dir / ("." + path_.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << doc_.dump(2) << "\n";
        out.flush();
        if (!out) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw IoError("cannot replace " + path_.string() + ": " + ec.message());
    }
}

std::vector<std::string> Workspace::names() const {
    std::vector<std::string> out;
    for (const auto& [name, entry] : doc_["umbrae"].items()) out.push_back(name);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Umbra> Workspace::get(const std::string& name) const {
    const auto& all = doc_["umbrae"];
    auto it = all.find(name);
    if (it == all.end()) return std::nullopt;
    std::vector<Poly> moments;
    for (const auto& m : (*it)["moments"]) moments.push_back(poly_from_json(m));
    return Umbra(std::move(moments), name);
}

void Workspace::put(const std::string& name, const Umbra& umbra) {
    Json moments = Json::array();
    for (const auto& m : umbra.moments())
        moments.push_back(m.is_constant() ? to_json(m.constant_value()) : to_json(m));
    auto& all = doc_["umbrae"];
    if (all.contains(name) && all[name].is_object()) all[name]["moments"] = std::move(moments);
    else all[name] = {{"moments", std::move(moments)}};
}

bool Workspace::erase(const std::string& name) { return doc_["umbrae"].erase(name) > 0; }

void Workspace::apply(Registry& registry) const {
    for (const auto& name : names()) {
        try {
            registry.define(name, *get(name));
        } catch (const NameError& e) {
            throw InputError(std::string("workspace: ") + e.what());
        } catch (const InputError& e) {
            throw InputError("workspace umbra '" + name + "': " + e.what());
        }
    }
}

} // namespace umbral
