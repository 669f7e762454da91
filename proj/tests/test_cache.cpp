#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "cstrig/cache.hpp"
#include "cstrig/cstrig.hpp"

using namespace cstrig;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("cstrig-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::size_t record_count(const fs::path& dir) {
    std::size_t n = 0;
    if (!fs::exists(dir)) return 0;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file()) ++n;
    return n;
}

}  // namespace

TEST_CASE("records round trip through the disk cache") {
    TempDir tmp;
    AlgebraId id = AlgebraId::parse("A3");
    Weight l1 = Weight::fundamental(3, 0);
    Weight pair = Weight{1, 0, 1};

    DominantCharacter chi;
    ZPolyQ mz;
    JacobiPolynomial jp;
    {
        Session warm(id, std::make_shared<DiskCache>(tmp.path, id));
        chi = warm.freudenthal(pair);
        mz = warm.monomial_to_z(pair);
        jp = warm.jacobi(pair);
        (void)warm.char_to_z(l1);
    }
    CHECK(record_count(tmp.path) > 0);

    Session cold(id, std::make_shared<DiskCache>(tmp.path, id));
    CHECK(cold.freudenthal(pair).mult == chi.mult);
    CHECK(cold.monomial_to_z(pair) == mz);
    CHECK(cold.char_to_z(l1) == ZPolyQ::variable(3, 0));
    CHECK(cold.jacobi(pair).coeffs == jp.coeffs);
    CHECK(cold.jacobi(pair).zform == jp.zform);
}

TEST_CASE("tampered or out-of-date records are ignored") {
    TempDir tmp;
    AlgebraId id = AlgebraId::parse("A2");
    Weight w{1, 1};

    DominantCharacter expect;
    {
        Session s(id, std::make_shared<DiskCache>(tmp.path, id));
        expect = s.freudenthal(w);
    }
    fs::path record = tmp.path / "A2" / "multiplicities" / "1,1.json";
    REQUIRE(fs::exists(record));

    // flip one digit inside the payload without updating the checksum
    std::string text;
    {
        std::ifstream in(record);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    auto pos = text.find("\"2\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"3\"");
    {
        std::ofstream out(record);
        out << text;
    }
    {
        Session s(id, std::make_shared<DiskCache>(tmp.path, id));
        CHECK(s.freudenthal(w).mult == expect.mult);  // recomputed, not the tampered value
    }

    // schema version mismatch
    {
        std::ifstream in(record);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    pos = text.find("\"schema_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 19, "\"schema_version\": 0");
    {
        std::ofstream out(record);
        out << text;
    }
    Session s(id, std::make_shared<DiskCache>(tmp.path, id));
    CHECK(s.freudenthal(w).mult == expect.mult);
}

TEST_CASE("cold and warm cache give identical results") {
    TempDir tmp;
    AlgebraId id = AlgebraId::parse("A2");
    Weight w{2, 0};

    Session plain(id);
    Session first(id, std::make_shared<DiskCache>(tmp.path, id));
    Session second(id, std::make_shared<DiskCache>(tmp.path, id));

    CHECK(first.jacobi(w).zform == plain.jacobi(w).zform);
    CHECK(second.jacobi(w).zform == plain.jacobi(w).zform);
    CHECK(second.monomial_to_z(w) == plain.monomial_to_z(w));
}
