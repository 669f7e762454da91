// Persistent record store: one JSON file per cached object, written atomically
// (temp file + rename). Records carry a schema version and a checksum of the
// canonical payload; any mismatch makes the record invisible, forcing a clean
// recompute.
#pragma once

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cstrig/session.hpp"

namespace cstrig {

inline constexpr int kCacheSchemaVersion = 1;

namespace cache_detail {

using nlohmann::json;

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline json poly_to_json(const KappaPoly& p) {
    json a = json::array();
    for (int d = 0; d <= p.degree(); ++d) a.push_back(p.coefficient(d).to_string());
    return a;
}

inline KappaPoly poly_from_json(const json& a) {
    std::vector<BigInt> coef;
    for (const auto& c : a) coef.push_back(BigInt::from_string(c.get<std::string>()));
    return KappaPoly::from_coefficients(std::move(coef));
}

inline json kr_to_json(const KappaRational& v) {
    return json{{"num", poly_to_json(v.num())}, {"den", poly_to_json(v.den())}};
}

inline KappaRational kr_from_json(const json& j) {
    return KappaRational(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json zpoly_to_json(const ZPolyQ& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json::array({e.to_string(), c.to_string()}));
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline ZPolyQ zpoly_from_json(const json& j) {
    int nvars = j.at("nvars").get<int>();
    ZPolyQ p(nvars);
    for (const auto& t : j.at("terms"))
        p.add_term(Weight::parse(t.at(0).get<std::string>(), nvars),
                   BigRational::from_string(t.at(1).get<std::string>()));
    return p;
}

inline json zpolyk_to_json(const ZPolyK& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json::array({e.to_string(), kr_to_json(c)}));
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline ZPolyK zpolyk_from_json(const json& j) {
    int nvars = j.at("nvars").get<int>();
    ZPolyK p(nvars);
    for (const auto& t : j.at("terms"))
        p.add_term(Weight::parse(t.at(0).get<std::string>(), nvars), kr_from_json(t.at(1)));
    return p;
}

}  // namespace cache_detail

class DiskCache : public RecordStore {
public:
    DiskCache(std::filesystem::path dir, AlgebraId algebra) : dir_(std::move(dir)), id_(algebra) {}

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<DominantCharacter> load_multiplicities(const Weight& key) override {
        auto payload = load("multiplicities", key);
        if (!payload) return std::nullopt;
        try {
            DominantCharacter c;
            c.highest = Weight::parse((*payload).at("highest").get<std::string>(), id_.rank);
            for (const auto& t : (*payload).at("mult"))
                c.mult.add(Weight::parse(t.at(0).get<std::string>(), id_.rank),
                           BigInt::from_string(t.at(1).get<std::string>()));
            return c;
        } catch (...) {
            return std::nullopt;
        }
    }

    void save_multiplicities(const Weight& key, const DominantCharacter& value) override {
        cache_detail::json mult = cache_detail::json::array();
        for (const auto& [w, m] : value.mult.terms())
            mult.push_back(cache_detail::json::array({w.to_string(), m.to_string()}));
        save("multiplicities", key,
             cache_detail::json{{"highest", value.highest.to_string()}, {"mult", mult}});
    }

    std::optional<ZPolyQ> load_poly(const std::string& kind, const Weight& key, int nvars) override {
        auto payload = load(kind, key);
        if (!payload) return std::nullopt;
        try {
            ZPolyQ p = cache_detail::zpoly_from_json(*payload);
            if (p.nvars() != nvars) return std::nullopt;
            return p;
        } catch (...) {
            return std::nullopt;
        }
    }

    void save_poly(const std::string& kind, const Weight& key, const ZPolyQ& value) override {
        save(kind, key, cache_detail::zpoly_to_json(value));
    }

    std::optional<JacobiPolynomial> load_jacobi(const Weight& key) override {
        auto payload = load("jacobi", key);
        if (!payload) return std::nullopt;
        try {
            JacobiPolynomial p;
            p.m = Weight::parse((*payload).at("m").get<std::string>(), id_.rank);
            for (const auto& t : (*payload).at("coeffs"))
                p.coeffs.add(Weight::parse(t.at(0).get<std::string>(), id_.rank),
                             cache_detail::kr_from_json(t.at(1)));
            p.zform = cache_detail::zpolyk_from_json((*payload).at("zform"));
            return p;
        } catch (...) {
            return std::nullopt;
        }
    }

    void save_jacobi(const Weight& key, const JacobiPolynomial& value) override {
        cache_detail::json coeffs = cache_detail::json::array();
        for (const auto& [w, c] : value.coeffs.terms())
            coeffs.push_back(cache_detail::json::array({w.to_string(), cache_detail::kr_to_json(c)}));
        save("jacobi", key,
             cache_detail::json{{"m", value.m.to_string()},
                                {"coeffs", coeffs},
                                {"zform", cache_detail::zpolyk_to_json(value.zform)}});
    }

private:
    std::filesystem::path dir_;
    AlgebraId id_;

    std::filesystem::path record_path(const std::string& kind, const Weight& key) const {
        return dir_ / id_.to_string() / kind / (key.to_string() + ".json");
    }

    std::optional<cache_detail::json> load(const std::string& kind, const Weight& key) const {
        namespace fs = std::filesystem;
        fs::path path = record_path(kind, key);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        cache_detail::json record;
        try {
            in >> record;
            if (record.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
            if (record.at("algebra").get<std::string>() != id_.to_string()) return std::nullopt;
            if (record.at("kind").get<std::string>() != kind) return std::nullopt;
            if (record.at("key").get<std::string>() != key.to_string()) return std::nullopt;
            std::string payload = record.at("payload").dump();
            if (cache_detail::fnv1a_hex(payload) != record.at("checksum").get<std::string>())
                return std::nullopt;
            return record.at("payload");
        } catch (...) {
            return std::nullopt;
        }
    }

    void save(const std::string& kind, const Weight& key, cache_detail::json payload) const {
        namespace fs = std::filesystem;
        fs::path path = record_path(kind, key);
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) return;  // cache is best-effort
        cache_detail::json record{{"schema_version", kCacheSchemaVersion},
                                  {"algebra", id_.to_string()},
                                  {"kind", kind},
                                  {"key", key.to_string()},
                                  {"checksum", cache_detail::fnv1a_hex(payload.dump())},
                                  {"payload", std::move(payload)}};
        fs::path tmp = path;
        tmp += ".tmp" + std::to_string(static_cast<unsigned long>(::getpid()));
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << record.dump(1) << "\n";
        }
        fs::rename(tmp, path, ec);
        if (ec) fs::remove(tmp, ec);
    }
};

}  // namespace cstrig
