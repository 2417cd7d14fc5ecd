#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "eca/csv.hpp"
#include "eca/errors.hpp"

using namespace eca;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name) {
        path = fs::temp_directory_path() / ("eca_csv_test_" + name);
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
    void write(const std::string& text) const {
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
};

}  // namespace

TEST_CASE("round trip preserves doubles bit for bit") {
    TempFile tmp("roundtrip.csv");
    Matrix m(2, 3);
    m << 3.141592653589793, 1.0 / 3.0, 1e-300,
        -2.2250738585072014e-308, 6.02214076e23, -0.0;

    SUBCASE("with header") {
        write_csv(tmp.path.string(), {"a", "b", "c"}, m);
        const CsvTable t = load_csv(tmp.path.string(), true);
        REQUIRE(t.column_names.size() == 3);
        CHECK(t.column_names[1] == "b");
        REQUIRE(t.values.rows() == 2);
        REQUIRE(t.values.cols() == 3);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(t.values(i, j) == m(i, j));
            }
        }
    }
    SUBCASE("headerless") {
        write_csv(tmp.path.string(), {}, m);
        const CsvTable t = load_csv(tmp.path.string(), false);
        CHECK(t.column_names.empty());
        CHECK(t.values.rows() == 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(t.values(i, j) == m(i, j));
            }
        }
    }
}

TEST_CASE("parse errors carry row and column positions") {
    TempFile tmp("bad.csv");

    SUBCASE("ragged row") {
        tmp.write("a,b\n1,2\n3\n");
        try {
            load_csv(tmp.path.string(), true);
            FAIL("expected CsvParseError");
        } catch (const CsvParseError& e) {
            // Positions are physical line numbers; the ragged row is line 3.
            const std::string msg = e.what();
            CHECK(msg.find("row 3") != std::string::npos);
        }
    }
    SUBCASE("non-numeric cell") {
        tmp.write("1,2\n3,oops\n");
        try {
            load_csv(tmp.path.string(), false);
            FAIL("expected CsvParseError");
        } catch (const CsvParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("row 2") != std::string::npos);
            CHECK(msg.find("column 2") != std::string::npos);
        }
    }
    SUBCASE("empty file") {
        tmp.write("");
        CHECK_THROWS_AS(load_csv(tmp.path.string(), false), CsvParseError);
    }
    SUBCASE("header only") {
        tmp.write("a,b\n");
        CHECK_THROWS_AS(load_csv(tmp.path.string(), true), CsvParseError);
    }
    SUBCASE("interior blank line") {
        tmp.write("1,2\n\n3,4\n");
        CHECK_THROWS_AS(load_csv(tmp.path.string(), false), CsvParseError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_csv((tmp.path.string() + ".nope"), false), CsvParseError);
    }
}

TEST_CASE("line ending tolerance") {
    TempFile tmp("endings.csv");
    SUBCASE("no trailing newline") {
        tmp.write("1,2\n3,4");
        const CsvTable t = load_csv(tmp.path.string(), false);
        CHECK(t.values(1, 1) == 4.0);
    }
    SUBCASE("CRLF endings") {
        tmp.write("x,y\r\n1,2\r\n3,4\r\n");
        const CsvTable t = load_csv(tmp.path.string(), true);
        CHECK(t.column_names[0] == "x");
        CHECK(t.column_names[1] == "y");
        CHECK(t.values(0, 1) == 2.0);
        CHECK(t.values(1, 0) == 3.0);
    }
}

TEST_CASE("writer validates header width") {
    TempFile tmp("width.csv");
    Matrix m = Matrix::Zero(1, 2);
    CHECK_THROWS_AS(write_csv(tmp.path.string(), {"only_one"}, m),
                    std::invalid_argument);
}

TEST_CASE("formatting keeps seventeen significant digits") {
    CHECK(format_double(3.141592653589793) == "3.1415926535897931");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.0) == "-0");
}
