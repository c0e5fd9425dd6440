#include "ramify/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ramify {

namespace {

using nlohmann::ordered_json;

std::string join_parts(const std::vector<int>& parts, char sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s.push_back(sep);
        s += std::to_string(parts[i]);
    }
    return s;
}

ordered_json degree_json(const DegreeReport& rep) {
    ordered_json j;
    if (!rep.partition.empty()) j["partition"] = rep.partition;
    else j["geometry"] = rep.geometry;
    if (rep.degree) j["degree"] = *rep.degree;
    else j["degree"] = nullptr;
    ordered_json trials = ordered_json::array();
    for (const auto& t : rep.trials) {
        ordered_json row;
        row["prime"] = t.prime;
        row["seed"] = t.seed;
        if (t.value) row["value"] = *t.value;
        else row["value"] = nullptr;
        row["zero_dim"] = t.zero_dim;
        row["ms"] = t.ms;
        trials.push_back(std::move(row));
    }
    j["trials"] = std::move(trials);
    j["agreement"] = rep.agreement;
    return j;
}

ordered_json rank_json(const RankReport& rep) {
    ordered_json j;
    j["partition"] = rep.partition;
    j["dim_gr"] = rep.dim_gr;
    j["rank"] = rep.rank;
    j["maximal_variation"] = rep.maximal_variation;
    ordered_json trials = ordered_json::array();
    for (const auto& t : rep.trials) {
        ordered_json row;
        row["prime"] = t.prime;
        row["seed"] = t.seed;
        row["rank"] = t.rank;
        row["ms"] = t.ms;
        trials.push_back(std::move(row));
    }
    j["trials"] = std::move(trials);
    return j;
}

std::string fmt_ms(double ms) {
    std::ostringstream os;
    os << ms;
    return os.str();
}

} // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

std::string render_degree_report(const DegreeReport& rep, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return degree_json(rep).dump() + "\n";
        case ReportFormat::csv: {
            std::string out = "label,degree,agreement,prime,seed,value,zero_dim,ms\n";
            const std::string label = rep.partition.empty() ? rep.geometry : join_parts(rep.partition, '+');
            const std::string degree = rep.degree ? std::to_string(*rep.degree) : "";
            for (const auto& t : rep.trials) {
                out += label + ',' + degree + ',' + (rep.agreement ? "true" : "false") + ',' +
                       std::to_string(t.prime) + ',' + std::to_string(t.seed) + ',' +
                       (t.value ? std::to_string(*t.value) : "") + ',' + (t.zero_dim ? "true" : "false") + ',' +
                       fmt_ms(t.ms) + '\n';
            }
            return out;
        }
        case ReportFormat::text: {
            std::ostringstream os;
            os << (rep.partition.empty() ? rep.geometry : "(" + join_parts(rep.partition, ',') + ")");
            if (rep.degree) os << ": degree " << *rep.degree;
            else os << ": no consensus";
            os << " [" << rep.trials.size() << " trials, agreement " << (rep.agreement ? "yes" : "no") << "]\n";
            for (const auto& t : rep.trials) {
                os << "  p=" << t.prime << " seed=" << t.seed << " value=";
                if (t.value) os << *t.value;
                else os << "budget";
                os << " zero_dim=" << (t.zero_dim ? "yes" : "no") << " ms=" << t.ms << "\n";
            }
            return os.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_rank_report(const RankReport& rep, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return rank_json(rep).dump() + "\n";
        case ReportFormat::csv: {
            std::string out = "label,dim_gr,rank,maximal_variation,prime,seed,trial_rank,ms\n";
            const std::string label = join_parts(rep.partition, '+');
            for (const auto& t : rep.trials) {
                out += label + ',' + std::to_string(rep.dim_gr) + ',' + std::to_string(rep.rank) + ',' +
                       (rep.maximal_variation ? "true" : "false") + ',' + std::to_string(t.prime) + ',' +
                       std::to_string(t.seed) + ',' + std::to_string(t.rank) + ',' + fmt_ms(t.ms) + '\n';
            }
            return out;
        }
        case ReportFormat::text: {
            std::ostringstream os;
            os << "(" << join_parts(rep.partition, ',') << "): rank " << rep.rank << " of " << rep.dim_gr
               << ", maximal variation " << (rep.maximal_variation ? "yes" : "no") << " [" << rep.trials.size()
               << " trials]\n";
            for (const auto& t : rep.trials)
                os << "  p=" << t.prime << " seed=" << t.seed << " rank=" << t.rank << " ms=" << t.ms << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unhandled format");
}

} // namespace ramify
