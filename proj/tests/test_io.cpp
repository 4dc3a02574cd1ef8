#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ieae/io.hpp"

using namespace ieae;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ieae-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("PGM round trip") {
    TempDir tmp;
    GrayImage img(5, 7);
    for (std::size_t i = 0; i < img.px.size(); ++i) img.px[i] = static_cast<std::uint8_t>(i * 7);
    write_pgm(tmp.file("a.pgm"), img);
    CHECK(read_pgm(tmp.file("a.pgm")) == img);
}

TEST_CASE("PGM error paths") {
    TempDir tmp;
    SUBCASE("missing file") { CHECK_THROWS_AS(read_pgm(tmp.file("nope.pgm")), ParseError); }
    SUBCASE("wrong magic") {
        std::ofstream(tmp.file("bad.pgm")) << "P2\n2 2\n255\n0 0 0 0\n";
        CHECK_THROWS_AS(read_pgm(tmp.file("bad.pgm")), ParseError);
    }
    SUBCASE("truncated pixels") {
        std::ofstream(tmp.file("short.pgm"), std::ios::binary) << "P5\n4 4\n255\nab";
        CHECK_THROWS_AS(read_pgm(tmp.file("short.pgm")), ParseError);
    }
    SUBCASE("wrong maxval") {
        std::ofstream(tmp.file("max.pgm"), std::ios::binary) << "P5\n1 1\n65535\naa";
        CHECK_THROWS_AS(read_pgm(tmp.file("max.pgm")), ParseError);
    }
    SUBCASE("comments in header are accepted") {
        std::ofstream(tmp.file("c.pgm"), std::ios::binary) << "P5\n# hello\n1 1\n255\nZ";
        const auto img = read_pgm(tmp.file("c.pgm"));
        CHECK(img.rows == 1);
        CHECK(img.px[0] == 'Z');
    }
}

TEST_CASE("sidecar metadata round trip") {
    TempDir tmp;
    SidecarMetadata meta{42, 100, 200, 3, 8, 16};
    write_sidecar(tmp.file("x.meta"), meta);
    const auto back = read_sidecar(tmp.file("x.meta"));
    CHECK(back.mu3 == 42);
    CHECK(back.orig_rows == 100);
    CHECK(back.orig_cols == 200);
    CHECK(back.rounds == 3);
    CHECK(back.p1 == 8);
    CHECK(back.p2 == 16);
}

TEST_CASE("key=value parse diagnostics carry line numbers") {
    TempDir tmp;
    std::ofstream(tmp.file("bad.key")) << "omega1=50\nnot a record\n";
    try {
        read_kv(tmp.file("bad.key"));
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find(":2:") != std::string::npos);
    }
}

TEST_CASE("key file parsing") {
    TempDir tmp;
    SUBCASE("lambda form") {
        std::ofstream(tmp.file("k.key"))
            << "omega1=50\nomega2=50\nmu1=20\nmu2=15\nmu=3.999\na=1\nb=1\nr_rounds=3\n"
               "lambda=0.123456\n";
        const auto key = read_key_file(tmp.file("k.key"));
        CHECK(key.omega1 == 50);
        CHECK(key.mu == 3.999);
        CHECK(key.rounds == 3);
        REQUIRE(key.lambda.has_value());
        CHECK(*key.lambda == 0.123456);
    }
    SUBCASE("ecg form") {
        std::ofstream(tmp.file("e.key"))
            << "omega1=1\nomega2=2\nmu1=3\nmu2=4\nmu=3.95\na=2\nb=3\nr_rounds=1\n"
               "ecg_path=/tmp/series.csv\nembed_m=4\nepsilon=0.05\n";
        const auto key = read_key_file(tmp.file("e.key"));
        REQUIRE(key.ecg_path.has_value());
        CHECK(key.embed_m == 4);
        CHECK(key.epsilon == 0.05);
    }
    SUBCASE("missing seed source") {
        std::ofstream(tmp.file("m.key"))
            << "omega1=1\nomega2=2\nmu1=3\nmu2=4\nmu=3.95\na=2\nb=3\nr_rounds=1\n";
        CHECK_THROWS_AS(read_key_file(tmp.file("m.key")), ParseError);
    }
}

TEST_CASE("CSV series") {
    TempDir tmp;
    std::ofstream(tmp.file("z.csv")) << "0.5\n-1.25\n3\n";
    CHECK(read_csv_series(tmp.file("z.csv")) == std::vector<double>{0.5, -1.25, 3.0});

    std::ofstream(tmp.file("bad.csv")) << "0.5\nxyz\n";
    CHECK_THROWS_AS(read_csv_series(tmp.file("bad.csv")), ParseError);
}
