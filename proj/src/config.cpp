#include "distilled/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "distilled/csv.hpp"
#include "distilled/error.hpp"

namespace distilled {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text)
{
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterError("invalid value '" + std::string(text) + "' for key '" + std::string(key) + "'");
    return value;
}

} // namespace

void apply_config_entry(ExperimentConfig& config, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key == "p")
        config.p = parse_number<Index>(key, value);
    else if (key == "beta")
        config.beta = parse_number<double>(key, value);
    else if (key == "num_nonzero")
        config.num_nonzero = parse_number<Index>(key, value);
    else if (key == "snr")
        config.snr = parse_number<double>(key, value);
    else if (key == "trials")
        config.trials = parse_number<Index>(key, value);
    else if (key == "decay")
        config.decay = parse_number<double>(key, value);
    else if (key == "master_seed")
        config.master_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "method")
        config.method = parse_method_selection(value);
    else if (key == "target_fdr")
        config.target_fdr = parse_number<double>(key, value);
    else if (key == "threshold_grid") {
        config.threshold_grid.clear();
        std::size_t start = 0;
        while (start <= value.size() && !value.empty()) {
            const auto comma = value.find(',', start);
            const auto item = value.substr(start, comma == std::string_view::npos ? value.size() - start : comma - start);
            config.threshold_grid.push_back(parse_number<double>(key, item));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    } else
        throw ParameterError("unknown config key '" + std::string(key) + "'");
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base)
{
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ParameterError("config line " + std::to_string(number) + ": expected key = value");
        apply_config_entry(base, view.substr(0, eq), view.substr(eq + 1));
    }
    return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open config file '" + path + "'");
    return parse_config(in, std::move(base));
}

std::string render_config(const ExperimentConfig& config)
{
    std::ostringstream os;
    os << "p = " << config.p << '\n';
    if (config.beta)
        os << "beta = " << format_real(*config.beta) << '\n';
    if (config.num_nonzero)
        os << "num_nonzero = " << *config.num_nonzero << '\n';
    os << "snr = " << format_real(config.snr) << '\n';
    os << "trials = " << config.trials << '\n';
    os << "decay = " << format_real(config.decay) << '\n';
    os << "master_seed = " << config.master_seed << '\n';
    os << "method = " << to_string(config.method) << '\n';
    if (config.target_fdr)
        os << "target_fdr = " << format_real(*config.target_fdr) << '\n';
    if (!config.threshold_grid.empty()) {
        os << "threshold_grid = ";
        for (std::size_t i = 0; i < config.threshold_grid.size(); ++i)
            os << (i ? "," : "") << format_real(config.threshold_grid[i]);
        os << '\n';
    }
    return os.str();
}

} // namespace distilled
