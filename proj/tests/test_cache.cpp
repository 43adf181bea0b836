#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "fqsum/cache_io.hpp"

using namespace fqsum;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fqsum_cache_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("irreducible cache round trip") {
    TempDir dir;
    for (unsigned long qv : {2ul, 9ul, 16ul}) {
        FieldOrder q = validate_field_order(qv);
        auto t = IrreducibleCountTable::build(q, 120);
        save_irreducible(dir.path, t);
        auto t2 = load_irreducible(dir.path, q, 120);
        for (unsigned n = 1; n <= 120; ++n) CHECK(t.at(n) == t2.at(n));
    }
}

TEST_CASE("smooth cache round trip") {
    TempDir dir;
    FieldOrder q = validate_field_order(3);
    auto irr = IrreducibleCountTable::build(q, 20);
    auto t = SmoothCountTable::build(q, 4, 20, 80, irr);
    save_smooth(dir.path, t);
    auto t2 = load_smooth(dir.path, q, 4, 20, 80, irr);
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned n = 0; n <= 80; ++n) CHECK(t.psi(k, n) == t2.psi(k, n));
    }
}

TEST_CASE("corrupt cache files are rejected and rebuilt") {
    TempDir dir;
    FieldOrder q = validate_field_order(2);
    auto t = IrreducibleCountTable::build(q, 30);
    save_irreducible(dir.path, t);
    fs::path file = irreducible_cache_path(dir.path, q, 30);

    // Flip one digit of one entry.
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"99\"");  // pi'_2(10) = 99
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "\"98\"");
    std::ofstream(file) << text;

    CHECK_THROWS_AS(load_irreducible(dir.path, q, 30), std::runtime_error);
    auto rebuilt = load_or_build_irreducible(dir.path, q, 30);
    CHECK(rebuilt.at(10) == 99);
    // The rebuild overwrote the corrupt file.
    auto reloaded = load_irreducible(dir.path, q, 30);
    CHECK(reloaded.at(10) == 99);
}

TEST_CASE("inspect reports validity") {
    TempDir dir;
    FieldOrder q = validate_field_order(2);
    save_irreducible(dir.path, IrreducibleCountTable::build(q, 16));
    auto irr = IrreducibleCountTable::build(q, 6);
    save_smooth(dir.path, SmoothCountTable::build(q, 3, 6, 18, irr));
    auto infos = inspect_cache(dir.path);
    REQUIRE(infos.size() == 2);
    for (const auto& info : infos) CHECK(info.valid);

    std::ofstream(dir.path / "smooth_q2_k0_N0.json") << "{ not json";
    auto infos2 = inspect_cache(dir.path);
    REQUIRE(infos2.size() == 3);
    int invalid = 0;
    for (const auto& info : infos2) invalid += info.valid ? 0 : 1;
    CHECK(invalid == 1);
}
