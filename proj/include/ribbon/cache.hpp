#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "ribbon/enumerate.hpp"

namespace ribbon {

std::uint64_t fnv1a(std::string_view data);

// One JSON-lines file per (family, d, g, m, degree) plus index.json mapping
// file names to content hashes.  A file whose hash disagrees with the index
// is stale and gets rebuilt.  Writes go to a temporary file and are renamed
// into place.
class DiskCache : public BasisStore {
public:
    explicit DiskCache(std::filesystem::path dir);

    std::shared_ptr<const GradedBasis> load(const FamilySpec& spec, int degree) override;
    void save(const GradedBasis& b) override;

    std::filesystem::path file_for(const FamilySpec& spec, int degree) const;
    const std::filesystem::path& dir() const { return dir_; }
    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    void write_index();

    std::filesystem::path dir_;
    std::map<std::string, std::string> index_;
    std::size_t hits_ = 0, misses_ = 0;
};

}  // namespace ribbon
