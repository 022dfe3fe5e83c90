#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/registry.hpp"
#include "umbral/sheffer.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings; a Poly is an object from "x^a*y^b" to rationals.
Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const std::vector<Poly>& polys);
Json to_json(const Matrix& m);

// Accepts a rational string or an integer. Throws InputError.
Rational rational_from_json(const Json& j);
// Accepts anything rational_from_json does, or a Poly object.
Poly poly_from_json(const Json& j);

// Coefficient of x^k in p. Throws InputError if p involves y or the coefficient
// is not scalar.
Rational x_coefficient(const Poly& p, unsigned k);

// Row n holds the coefficients of x^0..x^width in polys[n].
std::string csv_table(const std::vector<Poly>& polys, unsigned width);
std::string csv_matrix(const Matrix& m);
std::string latex_rational(const Rational& r);
std::string latex_poly(const Poly& p);
std::string latex_table(const std::vector<Poly>& polys, unsigned width);
std::string latex_matrix(const Matrix& m);

// User umbrae persisted as
//   {"version": 1, "umbrae": {"name": {"moments": ["1", "1/2", ...]}}}
// Fields this class does not know about are kept on save.
class Workspace {
public:
    explicit Workspace(std::filesystem::path path);

    // $UMBRA_WORKSPACE, falling back to ./umbrae.json.
    static std::filesystem::path default_path();

    const std::filesystem::path& path() const noexcept { return path_; }

    // A missing file is an empty workspace. Throws IoError when the file cannot
    // be read or is not JSON, InputError when the content is not a workspace.
    void load();
    // Writes to a temporary file next to the target, then renames it over the
    // target. Throws IoError.
    void save() const;

    std::vector<std::string> names() const;
    std::optional<Umbra> get(const std::string& name) const;
    void put(const std::string& name, const Umbra& umbra);
    bool erase(const std::string& name);

    // Defines every stored umbra in the registry.
    void apply(Registry& registry) const;

private:
    std::filesystem::path path_;
    Json doc_;
};

} // namespace umbral
