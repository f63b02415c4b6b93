#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace fgl {

/// Content-addressed result cache.  Entries are keyed by a canonical
/// request string and carry a hash of the payload; corrupted entries are
/// discarded (the caller recomputes).  The cache can change latency only,
/// never results.
class ResultCache {
public:
	ResultCache(std::filesystem::path dir, bool enabled);

	bool enabled() const { return enabled_; }
	const std::filesystem::path &dir() const { return dir_; }

	std::optional<std::string> load(const std::string &key) const;
	/// best effort; I/O failures are swallowed (recompute path stays valid)
	void store(const std::string &key, const std::string &payload) const;

	static std::uint64_t fnv1a(std::string_view data);

private:
	std::filesystem::path entry_path(const std::string &key) const;

	std::filesystem::path dir_;
	bool enabled_;
};

} // namespace fgl
