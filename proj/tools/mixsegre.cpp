#include "mixsegre/error.hpp"
#include "mixsegre/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mixsegre;

int log_level() {
    const char* v = std::getenv("MIXSEGRE_LOG");
    if (!v) return 0;
    const std::string s(v);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
}

void log(int level, const std::string& message) {
    if (log_level() >= level) std::cerr << "mixsegre: " << message << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cli", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::pair<unsigned, unsigned> parse_power(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InvalidArgument("cli", "--power expects a,b");
    try {
        const unsigned long a = std::stoul(text.substr(0, comma));
        const unsigned long b = std::stoul(text.substr(comma + 1));
        if (a < 1 || b < 1 || a > 64 || b > 64) throw InvalidArgument("cli", "--power entries must lie in 1..64");
        return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
    } catch (const std::logic_error&) {
        throw InvalidArgument("cli", "--power expects a,b");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segre numbers, mixed multiplicities and integral-closure criteria at the origin"};
    std::string command;
    std::vector<std::string> inputs;
    RunSettings settings;
    std::string power;
    std::optional<int> k;
    std::string output;

    app.add_option("command", command, "segre | mixed | compare | rees | product-check | minkowski | chain | "
                                       "surface | whitney | teissier")
        ->required();
    app.add_option("inputs", inputs, "input document followed by ideal names (whitney also takes two .poly files)")
        ->required();
    app.add_option("--seed", settings.seed, "base seed for generic combinations");
    app.add_option("--bound", settings.bound, "coefficient bound for generic combinations");
    app.add_option("--rounds", settings.rounds, "verification rounds (at least 2)");
    app.add_option("--nmax", settings.nmax, "largest N sampled for Hilbert-Samuel functions");
    app.add_option("--power", power, "compare: run the battery on I1^a and I2^b, given as a,b");
    app.add_option("--k", k, "codimension for product-check and minkowski (default n)");
    app.add_option("-o,--output", output, "write the JSON report to a file instead of stdout");
    app.add_flag("--timing", settings.timing, "include wall-clock timing in the report");
    CLI11_PARSE(app, argc, argv);

    nlohmann::ordered_json json;
    int code = kExitOk;
    try {
        const auto& known = known_commands();
        if (std::find(known.begin(), known.end(), command) == known.end())
            throw InvalidArgument("cli", "unknown command '" + command + "'");
        log(1, "running " + command + " on " + inputs.front());
        Report report;
        if (command == "whitney" && inputs.size() == 2 && ends_with(inputs[0], ".poly") &&
            ends_with(inputs[1], ".poly")) {
            report = run_whitney_files(parse_input(read_file(inputs[0])), parse_input(read_file(inputs[1])), settings);
        } else {
            const InputDocument doc = parse_input(read_file(inputs.front()));
            CommandArgs args;
            args.names.assign(inputs.begin() + 1, inputs.end());
            if (!power.empty()) args.power = parse_power(power);
            args.k = k;
            report = run_command(doc, command, args, settings);
        }
        json = std::move(report.json);
        code = report.exit_code;
        log(2, "statistics " + json["statistics"].dump());
    } catch (const Error& e) {
        json = error_report(command, e.module(), e.what());
        std::cerr << "mixsegre: " << e.module() << ": " << e.what() << "\n";
        code = kExitError;
    } catch (const std::exception& e) {
        json = error_report(command, "cli", e.what());
        std::cerr << "mixsegre: " << e.what() << "\n";
        code = kExitError;
    }

    const std::string text = json.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "mixsegre: cannot write '" << output << "'\n";
            return kExitError;
        }
    }
    return code;
}
