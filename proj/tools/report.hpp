#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubedens::cli
{
    inline constexpr std::string_view tool_version = "0.1.0";

    [[nodiscard]] auto fnv1a(std::string_view data, std::uint64_t state = 0xcbf29ce484222325ULL) -> std::uint64_t;

    /// A command's output: human-readable lines plus a structured record.
    class Report
    {
    public:
        Report(std::string command, std::vector<std::string> argv);

        /// Folds an input (an argument, a file's contents) into the input hash.
        auto add_input(std::string_view data) -> void;
        auto line(std::string text) -> void;
        auto set(const std::string & key, nlohmann::ordered_json value) -> void;
        auto transcript(std::string step) -> void;

        [[nodiscard]] auto input_hash() const -> std::string;
        [[nodiscard]] auto text() const -> std::string;
        /// The timestamp is the only field that varies between identical runs.
        [[nodiscard]] auto json(bool with_timestamp = true) const -> nlohmann::ordered_json;

        /// Prints the text form (or the JSON form) to stdout; with a path, also writes
        /// the text to it and the JSON to the same path plus ".json".
        auto emit(bool json_stdout, const std::optional<std::filesystem::path> & path) const -> void;

    private:
        std::string _command;
        std::vector<std::string> _argv;
        std::uint64_t _hash;
        std::vector<std::string> _lines;
        std::vector<std::string> _transcript;
        nlohmann::ordered_json _results = nlohmann::ordered_json::object();
    };

    /// Expensive results stored as JSON files named by a hash of their key.
    class ResultCache
    {
    public:
        explicit ResultCache(std::optional<std::filesystem::path> dir);

        [[nodiscard]] auto enabled() const -> bool { return _dir.has_value(); }
        [[nodiscard]] auto load(const std::string & key) -> std::optional<nlohmann::json>;
        auto store(const std::string & key, const nlohmann::json & value) -> void;

    private:
        [[nodiscard]] auto path_for(const std::string & key) const -> std::filesystem::path;

        std::optional<std::filesystem::path> _dir;
        std::mutex _mutex;
    };
}
