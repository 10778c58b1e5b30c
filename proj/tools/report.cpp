#include "report.hpp"

#include <fmt/core.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

using namespace cubedens::cli;

auto cubedens::cli::fnv1a(std::string_view data, std::uint64_t state) -> std::uint64_t
{
    for (unsigned char c : data) {
        state ^= c;
        state *= 0x100000001b3ULL;
    }
    return state;
}

Report::Report(std::string command, std::vector<std::string> argv) :
    _command(std::move(command)),
    _argv(std::move(argv)),
    _hash(fnv1a(_command))
{
    for (const auto & a : _argv)
        add_input(a);
}

auto Report::add_input(std::string_view data) -> void
{
    _hash = fnv1a(data, fnv1a(std::string_view("\0", 1), _hash));
}

auto Report::line(std::string text) -> void
{
    _lines.push_back(std::move(text));
}

auto Report::set(const std::string & key, nlohmann::ordered_json value) -> void
{
    _results[key] = std::move(value);
}

auto Report::transcript(std::string step) -> void
{
    _transcript.push_back(std::move(step));
}

auto Report::input_hash() const -> std::string
{
    return fmt::format("{:016x}", _hash);
}

auto Report::text() const -> std::string
{
    std::string out;
    for (const auto & l : _lines)
        out += l + "\n";
    if (! _transcript.empty()) {
        out += "verification:\n";
        for (const auto & t : _transcript)
            out += "  " + t + "\n";
    }
    std::string args;
    for (const auto & a : _argv)
        args += (args.empty() ? "" : " ") + a;
    out += fmt::format("-- cubedens {} | {} | input {}\n", tool_version, args, input_hash());
    return out;
}

auto Report::json(bool with_timestamp) const -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["tool"] = "cubedens";
    j["version"] = tool_version;
    j["command"] = _command;
    j["argv"] = _argv;
    j["input_hash"] = input_hash();
    if (with_timestamp) {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
        j["timestamp"] = buf;
    }
    j["results"] = _results;
    j["verification"] = _transcript;
    return j;
}

auto Report::emit(bool json_stdout, const std::optional<std::filesystem::path> & path) const -> void
{
    auto structured = json();
    if (json_stdout)
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << text();
    if (path) {
        std::ofstream(*path) << text();
        auto sidecar = *path;
        sidecar += ".json";
        std::ofstream(sidecar) << structured.dump(2) << "\n";
    }
}

ResultCache::ResultCache(std::optional<std::filesystem::path> dir) : _dir(std::move(dir))
{
    if (_dir)
        std::filesystem::create_directories(*_dir);
}

auto ResultCache::path_for(const std::string & key) const -> std::filesystem::path
{
    return *_dir / fmt::format("{:016x}.json", fnv1a(key));
}

auto ResultCache::load(const std::string & key) -> std::optional<nlohmann::json>
{
    if (! _dir)
        return std::nullopt;
    std::lock_guard lock{_mutex};
    std::ifstream in(path_for(key));
    if (! in)
        return std::nullopt;
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || ! j.contains("key") || j["key"] != key)
        return std::nullopt;
    return j["value"];
}

auto ResultCache::store(const std::string & key, const nlohmann::json & value) -> void
{
    if (! _dir)
        return;
    std::lock_guard lock{_mutex};
    auto target = path_for(key);
    auto temp = target;
    temp += ".tmp";
    std::ofstream(temp) << nlohmann::json{{"key", key}, {"value", value}}.dump() << "\n";
    std::filesystem::rename(temp, target);
}
