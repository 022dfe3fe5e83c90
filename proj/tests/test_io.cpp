#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbral/error.hpp"
#include "umbral/io.hpp"

using namespace umbral;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("umbral_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& f) const { return path_ / f; }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

std::string read(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Json, PolyAndRationalRoundTrip) {
    const Poly p = Poly::monomial(Rational(-3, 4), 2, 1) + Poly(5);
    const Json j = to_json(p);
    EXPECT_EQ(j["x^2*y^1"], "-3/4");
    EXPECT_EQ(j["x^0*y^0"], "5");
    EXPECT_EQ(poly_from_json(j), p);
    EXPECT_EQ(to_json(Rational(1, 2)), "1/2");
    EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
    EXPECT_EQ(poly_from_json(Json("2/6")), Poly(Rational(1, 3)));
    EXPECT_THROW(poly_from_json(Json::parse(R"({"x^a": "1"})")), InputError);
    EXPECT_THROW(rational_from_json(Json(1.5)), InputError);
}

TEST(Csv, TableShape) {
    const std::vector<Poly> s = {Poly(1), Poly::x() - Poly(1), oracle::poly_in_x({1, -3, 1})};
    const std::string csv = csv_table(s, 2);
    EXPECT_EQ(csv, "n,x^0,x^1,x^2\n0,1,0,0\n1,-1,1,0\n2,1,-3,1\n");
    EXPECT_THROW(csv_table({Poly::y()}, 1), InputError);
    const Matrix m = {{Rational(1)}, {Rational(0), Rational(1, 2)}};
    EXPECT_EQ(csv_matrix(m), "n,k0,k1\n0,1,0\n1,0,1/2\n");
}

TEST(Latex, Formatting) {
    EXPECT_EQ(latex_rational(Rational(-1, 6)), "-\\frac{1}{6}");
    EXPECT_EQ(latex_poly(oracle::poly_in_x({Rational(1, 6), -1, 1})), "x^{2} - x + \\frac{1}{6}");
    EXPECT_EQ(latex_poly(Poly()), "0");
    const std::string t = latex_table({Poly(1), Poly::x()}, 1);
    EXPECT_NE(t.find("\\begin{array}{r|rr}"), std::string::npos);
}

TEST(Workspace, MissingFileIsEmpty) {
    TempDir dir;
    Workspace ws(dir / "none.json");
    ws.load();
    EXPECT_TRUE(ws.names().empty());
}

TEST(Workspace, SaveLoadAndPreserveUnknownFields) {
    TempDir dir;
    const auto path = dir / "ws.json";
    write(path, R"({"version": 1, "note": "keep me", "umbrae": {"a": {"moments": ["1", "1/2"], "tag": 3}}})");
    Workspace ws(path);
    ws.load();
    EXPECT_EQ(ws.names(), (std::vector<std::string>{"a"}));
    EXPECT_EQ(ws.get("a")->moments(), (std::vector<Poly>{Poly(1), Poly(Rational(1, 2))}));
    ws.put("a", Umbra::from_rationals({1, 2, 3}));
    ws.put("b", Umbra(std::vector<Poly>{Poly(1), Poly::x()}));
    ws.save();

    const Json j = Json::parse(read(path));
    EXPECT_EQ(j["note"], "keep me");
    EXPECT_EQ(j["umbrae"]["a"]["tag"], 3);
    EXPECT_EQ(j["umbrae"]["a"]["moments"], Json::parse(R"(["1","2","3"])"));
    EXPECT_EQ(j["umbrae"]["b"]["moments"][1]["x^1*y^0"], "1");
    for (const auto& entry : fs::directory_iterator(dir.path()))
        EXPECT_EQ(entry.path().filename(), "ws.json") << "temporary file left behind";

    Workspace again(path);
    again.load();
    Registry reg;
    again.apply(reg);
    EXPECT_EQ(reg.get("b", 1)[1], Poly::x());
    EXPECT_TRUE(again.erase("a"));
    EXPECT_FALSE(again.erase("a"));
}

TEST(Workspace, Errors) {
    TempDir dir;
    write(dir / "bad.json", "{ not json");
    Workspace bad(dir / "bad.json");
    EXPECT_THROW(bad.load(), IoError);

    write(dir / "v2.json", R"({"version": 2, "umbrae": {}})");
    Workspace v2(dir / "v2.json");
    EXPECT_THROW(v2.load(), InputError);

    write(dir / "nonunital.json", R"({"version": 1, "umbrae": {"z": {"moments": ["2"]}}})");
    Workspace nu(dir / "nonunital.json");
    nu.load();
    Registry reg;
    EXPECT_THROW(nu.apply(reg), InputError);

    write(dir / "reserved.json", R"({"version": 1, "umbrae": {"bar": {"moments": ["1"]}}})");
    Workspace rs(dir / "reserved.json");
    rs.load();
    EXPECT_THROW(rs.apply(reg), InputError);

    Workspace nowhere(dir / "missing_dir" / "ws.json");
    EXPECT_THROW(nowhere.save(), IoError);
}
