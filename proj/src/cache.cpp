#include "fgl/cache.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fgl {

using nlohmann::json;

ResultCache::ResultCache(std::filesystem::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled)
{
	if (enabled_)
	{
		std::error_code ec;
		std::filesystem::create_directories(dir_, ec);
		if (ec)
			enabled_ = false;
	}
}

std::uint64_t ResultCache::fnv1a(std::string_view data)
{
	std::uint64_t h = 14695981039346656037ull;
	for (unsigned char c : data)
	{
		h ^= c;
		h *= 1099511628211ull;
	}
	return h;
}

std::filesystem::path ResultCache::entry_path(const std::string &key) const
{
	std::ostringstream name;
	name << std::hex << fnv1a(key) << ".json";
	return dir_ / name.str();
}

std::optional<std::string> ResultCache::load(const std::string &key) const
{
	if (!enabled_)
		return std::nullopt;
	std::ifstream in(entry_path(key));
	if (!in)
		return std::nullopt;
	std::stringstream buf;
	buf << in.rdbuf();
	try
	{
		json doc = json::parse(buf.str());
		if (doc.value("schema", "") != "1" || doc.value("key", "") != key)
			return std::nullopt;
		std::string payload = doc.at("payload").get<std::string>();
		std::ostringstream h;
		h << std::hex << fnv1a(payload);
		if (doc.value("hash", "") != h.str())
			return std::nullopt; // corrupted entry: discard, recompute
		return payload;
	}
	catch (const json::exception &)
	{
		return std::nullopt;
	}
}

void ResultCache::store(const std::string &key,
                        const std::string &payload) const
{
	if (!enabled_)
		return;
	std::ostringstream h;
	h << std::hex << fnv1a(payload);
	json doc = {{"schema", "1"},
	            {"key", key},
	            {"hash", h.str()},
	            {"payload", payload}};
	std::ofstream out(entry_path(key));
	if (out)
		out << doc.dump();
}

} // namespace fgl
