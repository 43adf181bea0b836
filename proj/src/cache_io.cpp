#include "fqsum/cache_io.hpp"

#include <fstream>

#include "json.hpp"

namespace fqsum {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json read_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cache: cannot open " + file.string());
    json j;
    in >> j;
    return j;
}

void write_json(const std::filesystem::path& file, const json& j) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cache: cannot write " + file.string());
    out << j.dump(1) << "\n";
}

}  // namespace

std::filesystem::path irreducible_cache_path(const std::filesystem::path& dir,
                                             const FieldOrder& q, unsigned max_degree) {
    return dir / ("irreducible_q" + std::to_string(q.q) + "_N" + std::to_string(max_degree) +
                  ".json");
}

std::filesystem::path smooth_cache_path(const std::filesystem::path& dir, const FieldOrder& q,
                                        unsigned k_max, unsigned smoothness) {
    return dir / ("smooth_q" + std::to_string(q.q) + "_k" + std::to_string(k_max) + "_N" +
                  std::to_string(smoothness) + ".json");
}

void save_irreducible(const std::filesystem::path& dir, const IrreducibleCountTable& table) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "irreducible";
    j["q"] = table.field().q;
    j["max_degree"] = table.max_degree();
    json entries = json::array();
    for (unsigned n = 1; n <= table.max_degree(); ++n) entries.push_back(table.at(n).get_str());
    j["entries"] = std::move(entries);
    write_json(irreducible_cache_path(dir, table.field(), table.max_degree()), j);
}

IrreducibleCountTable load_irreducible(const std::filesystem::path& dir, const FieldOrder& q,
                                       unsigned max_degree) {
    json j = read_json(irreducible_cache_path(dir, q, max_degree));
    if (j.at("schema_version") != kSchemaVersion || j.at("kind") != "irreducible" ||
        j.at("q") != q.q || j.at("max_degree") != max_degree) {
        throw std::runtime_error("cache: irreducible header mismatch");
    }
    std::vector<mpz_class> counts;
    for (const auto& s : j.at("entries")) counts.emplace_back(s.get<std::string>(), 10);
    if (counts.size() != max_degree) throw std::runtime_error("cache: irreducible entry count");
    return IrreducibleCountTable::from_entries(q, std::move(counts));
}

IrreducibleCountTable load_or_build_irreducible(const std::filesystem::path& dir,
                                                const FieldOrder& q, unsigned max_degree) {
    try {
        return load_irreducible(dir, q, max_degree);
    } catch (const std::exception&) {
        IrreducibleCountTable t = IrreducibleCountTable::build(q, max_degree);
        save_irreducible(dir, t);
        return t;
    }
}

void save_smooth(const std::filesystem::path& dir, const SmoothCountTable& table) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "smooth";
    j["q"] = table.field().q;
    j["k_max"] = table.k_max();
    j["smoothness"] = table.smoothness();
    j["n_max"] = table.n_max();
    json rows = json::array();
    for (const auto& row : table.rows()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    write_json(smooth_cache_path(dir, table.field(), table.k_max(), table.smoothness()), j);
}

SmoothCountTable load_smooth(const std::filesystem::path& dir, const FieldOrder& q,
                             unsigned k_max, unsigned smoothness, unsigned n_max,
                             const IrreducibleCountTable& irr) {
    json j = read_json(smooth_cache_path(dir, q, k_max, smoothness));
    if (j.at("schema_version") != kSchemaVersion || j.at("kind") != "smooth" ||
        j.at("q") != q.q || j.at("k_max") != k_max || j.at("smoothness") != smoothness ||
        j.at("n_max") != n_max) {
        throw std::runtime_error("cache: smooth header mismatch");
    }
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& r : j.at("entries")) {
        std::vector<mpz_class> row;
        for (const auto& s : r) row.emplace_back(s.get<std::string>(), 10);
        rows.push_back(std::move(row));
    }
    return SmoothCountTable::from_entries(q, k_max, smoothness, n_max, std::move(rows), irr);
}

SmoothCountTable load_or_build_smooth(const std::filesystem::path& dir, const FieldOrder& q,
                                      unsigned k_max, unsigned smoothness, unsigned n_max,
                                      const IrreducibleCountTable& irr) {
    try {
        return load_smooth(dir, q, k_max, smoothness, n_max, irr);
    } catch (const std::exception&) {
        SmoothCountTable t = SmoothCountTable::build(q, k_max, smoothness, n_max, irr);
        save_smooth(dir, t);
        return t;
    }
}

std::vector<CacheEntryInfo> inspect_cache(const std::filesystem::path& dir) {
    std::vector<CacheEntryInfo> out;
    if (!std::filesystem::exists(dir)) return out;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        CacheEntryInfo info;
        info.file = f.filename().string();
        try {
            json j = read_json(f);
            info.kind = j.at("kind").get<std::string>();
            info.q = j.at("q").get<unsigned long>();
            FieldOrder q = validate_field_order(info.q);
            if (info.kind == "irreducible") {
                unsigned N = j.at("max_degree").get<unsigned>();
                info.params = "N=" + std::to_string(N);
                load_irreducible(dir, q, N);
                info.valid = true;
                info.detail = "necklace identity spot check passed";
            } else if (info.kind == "smooth") {
                unsigned k_max = j.at("k_max").get<unsigned>();
                unsigned m = j.at("smoothness").get<unsigned>();
                unsigned n_max = j.at("n_max").get<unsigned>();
                info.params = "k_max=" + std::to_string(k_max) + " N=" + std::to_string(m);
                auto irr = IrreducibleCountTable::build(q, m);
                load_smooth(dir, q, k_max, m, n_max, irr);
                info.valid = true;
                info.detail = "marginal and pi' spot checks passed";
            } else {
                info.detail = "unknown kind";
            }
        } catch (const std::exception& ex) {
            info.valid = false;
            info.detail = ex.what();
        }
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace fqsum
