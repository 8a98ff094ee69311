#pragma once

#include "mixsegre/document.hpp"
#include "mixsegre/segre.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mixsegre {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerdictFalse = 2;

// Command-line overrides; unset fields fall back to the document's
// [options], then to the defaults.
struct RunSettings {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> bound;
    std::optional<unsigned> rounds;
    std::optional<unsigned> nmax;
    // Wall-clock timing breaks byte-identical output, so it is opt-in.
    bool timing = false;
};

struct CommandArgs {
    std::vector<std::string> names;
    std::optional<std::pair<unsigned, unsigned>> power;
    std::optional<int> k;
};

struct Report {
    nlohmann::ordered_json json;
    int exit_code = kExitOk;
};

const std::vector<std::string>& known_commands();

GenericityConfig resolve_config(const InputDocument& doc, const RunSettings& settings);

// Dispatches one command. Engine errors propagate as mixsegre::Error.
Report run_command(const InputDocument& doc, const std::string& command, const CommandArgs& args,
                   const RunSettings& settings);

// The whitney command on two single-polynomial documents.
Report run_whitney_files(const InputDocument& f0, const InputDocument& f1, const RunSettings& settings);

// {"schema", "command", "error": {"module", "message"}}.
nlohmann::ordered_json error_report(const std::string& command, const std::string& module, const std::string& message);

} // namespace mixsegre
