#include "ribbon/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ribbon/errors.hpp"
#include "ribbon/io.hpp"

namespace ribbon {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

void atomic_write(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        os << content;
        if (!os) throw RibbonError(ErrorCode::Cache, "cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw RibbonError(ErrorCode::Cache, "cannot rename into " + target.string() + ": " + ec.message());
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_))
        throw RibbonError(ErrorCode::Cache, "cache directory unusable: " + dir_.string());
    const auto idx = dir_ / "index.json";
    if (fs::exists(idx)) {
        try {
            index_ = nlohmann::json::parse(slurp(idx)).get<std::map<std::string, std::string>>();
        } catch (const nlohmann::json::exception&) {
            index_.clear();  // rebuilt as files are saved
        }
    }
}

fs::path DiskCache::file_for(const FamilySpec& spec, int degree) const {
    std::string name = describe(spec) + " deg=" + std::to_string(degree);
    for (char& c : name)
        if (c == ' ') c = '_';
    return dir_ / (name + ".jsonl");
}

std::shared_ptr<const GradedBasis> DiskCache::load(const FamilySpec& spec, int degree) {
    const auto path = file_for(spec, degree);
    auto it = index_.find(path.filename().string());
    if (it == index_.end() || !fs::exists(path)) {
        ++misses_;
        return nullptr;
    }
    const std::string content = slurp(path);
    if (hex(fnv1a(content)) != it->second) {
        ++misses_;
        return nullptr;
    }
    std::istringstream is(content);
    try {
        auto b = std::make_shared<GradedBasis>(read_basis(is, spec, degree));
        ++hits_;
        return b;
    } catch (const RibbonError&) {
        ++misses_;
        return nullptr;
    }
}

void DiskCache::save(const GradedBasis& b) {
    std::ostringstream os;
    write_basis(os, b);
    const std::string content = os.str();
    const auto path = file_for(b.spec, b.degree);
    atomic_write(path, content);
    index_[path.filename().string()] = hex(fnv1a(content));
    write_index();
}

void DiskCache::write_index() {
    atomic_write(dir_ / "index.json", nlohmann::json(index_).dump(1) + "\n");
}

}  // namespace ribbon
