#include "basta/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace basta {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw config_error(context.empty() ? message : context + ": " + message);
}

const json& require_key(const json& obj, const std::string& key, const std::string& context) {
    if (!obj.is_object() || !obj.contains(key)) {
        fail(context, "missing required key \"" + key + "\"");
    }
    return obj.at(key);
}

double get_double(const json& value, const std::string& context) {
    if (!value.is_number()) {
        fail(context, "expected a number");
    }
    return value.get<double>();
}

std::uint64_t get_uint(const json& value, const std::string& context) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        fail(context, "expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::string get_string(const json& value, const std::string& context) {
    if (!value.is_string()) {
        fail(context, "expected a string");
    }
    return value.get<std::string>();
}

std::vector<double> get_double_vector(const json& value, const std::string& context) {
    if (!value.is_array()) {
        fail(context, "expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(get_double(value[i], context + "[" + std::to_string(i) + "]"));
    }
    return out;
}

scheduling_rule parse_rule(const json& value, const std::string& context) {
    if (!value.is_string()) {
        fail(context, "expected a rule name string");
    }
    const auto name = value.get<std::string>();
    const auto rule = rule_from_string(name);
    if (!rule.has_value()) {
        fail(context, "unknown rule: " + name);
    }
    return *rule;
}

arrival_spec parse_arrival(const json& obj, const std::string& context) {
    const auto type = get_string(require_key(obj, "type", context), context + ".type");
    if (type == "bernoulli") {
        return bernoulli_arrival{get_double(require_key(obj, "alpha", context), context + ".alpha")};
    }
    if (type == "batch") {
        return batch_arrival{get_double_vector(require_key(obj, "pmf", context), context + ".pmf")};
    }
    if (type == "state_dependent") {
        return state_dependent_arrival{
            get_double_vector(require_key(obj, "alphas", context), context + ".alphas"),
            get_double(require_key(obj, "tail_alpha", context), context + ".tail_alpha")};
    }
    fail(context, "unknown arrival type: " + type);
}

service_spec parse_service(const json& obj, const std::string& context) {
    const auto type = get_string(require_key(obj, "type", context), context + ".type");
    if (type == "geometric") {
        return geometric_service{get_double(require_key(obj, "beta", context), context + ".beta")};
    }
    if (type == "hazard") {
        hazard_fn hazard;
        hazard.betas = get_double_vector(require_key(obj, "betas", context), context + ".betas");
        hazard.tail = get_double(require_key(obj, "tail_beta", context), context + ".tail_beta");
        return hazard_service{std::move(hazard)};
    }
    if (type == "iid") {
        return iid_service{get_double_vector(require_key(obj, "pmf", context), context + ".pmf")};
    }
    fail(context, "unknown service type: " + type);
}

json arrival_to_json(const arrival_spec& arrival) {
    json obj;
    if (const auto* bern = std::get_if<bernoulli_arrival>(&arrival)) {
        obj["type"] = "bernoulli";
        obj["alpha"] = bern->alpha;
    } else if (const auto* batch = std::get_if<batch_arrival>(&arrival)) {
        obj["type"] = "batch";
        obj["pmf"] = batch->pmf;
    } else {
        const auto& sd = std::get<state_dependent_arrival>(arrival);
        obj["type"] = "state_dependent";
        obj["alphas"] = sd.alphas;
        obj["tail_alpha"] = sd.tail_alpha;
    }
    return obj;
}

json service_to_json(const service_spec& service) {
    json obj;
    if (const auto* geo = std::get_if<geometric_service>(&service)) {
        obj["type"] = "geometric";
        obj["beta"] = geo->beta;
    } else if (const auto* haz = std::get_if<hazard_service>(&service)) {
        obj["type"] = "hazard";
        obj["betas"] = haz->hazard.betas;
        obj["tail_beta"] = haz->hazard.tail;
    } else {
        obj["type"] = "iid";
        obj["pmf"] = std::get<iid_service>(service).pmf;
    }
    return obj;
}

}  // namespace

experiment_config config_from_json(const json& doc, const std::string& context) {
    if (!doc.is_object()) {
        fail(context, "top level must be an object");
    }

    experiment_config config;
    config.model.rule = parse_rule(require_key(doc, "rule", context), context + ".rule");
    config.model.arrival = parse_arrival(require_key(doc, "arrival", context), context + ".arrival");
    config.model.service = parse_service(require_key(doc, "service", context), context + ".service");
    config.model.slots = get_uint(require_key(doc, "slots", context), context + ".slots");

    if (doc.contains("warmup")) {
        config.model.warmup = get_uint(doc.at("warmup"), context + ".warmup");
    }
    if (doc.contains("seed")) {
        config.model.seed = get_uint(doc.at("seed"), context + ".seed");
    }
    if (doc.contains("replications")) {
        config.model.replications = get_uint(doc.at("replications"), context + ".replications");
    }
    if (doc.contains("max_tracked_state")) {
        config.model.max_tracked_state =
            get_uint(doc.at("max_tracked_state"), context + ".max_tracked_state");
    }

    if (doc.contains("thresholds")) {
        const json& th = doc.at("thresholds");
        const std::string tcontext = context + ".thresholds";
        if (!th.is_object()) {
            fail(tcontext, "expected an object");
        }
        if (th.contains("rate_identity")) {
            config.thresholds.rate_identity =
                get_double(th.at("rate_identity"), tcontext + ".rate_identity");
        }
        if (th.contains("basta")) {
            config.thresholds.basta = get_double(th.at("basta"), tcontext + ".basta");
        }
        if (th.contains("epoch")) {
            config.thresholds.epoch = get_double(th.at("epoch"), tcontext + ".epoch");
        }
        if (th.contains("ladf")) {
            config.thresholds.ladf = get_double(th.at("ladf"), tcontext + ".ladf");
        }
        if (th.contains("analytic")) {
            config.thresholds.analytic = get_double(th.at("analytic"), tcontext + ".analytic");
        }
    }

    if (doc.contains("sweep")) {
        const json& sw = doc.at("sweep");
        const std::string scontext = context + ".sweep";
        if (!sw.is_object()) {
            fail(scontext, "expected an object");
        }
        sweep_grid grid;
        if (sw.contains("rule")) {
            const json& rules = sw.at("rule");
            if (!rules.is_array()) {
                fail(scontext + ".rule", "expected an array of rule names");
            }
            for (std::size_t i = 0; i < rules.size(); ++i) {
                grid.rules.push_back(
                    parse_rule(rules[i], scontext + ".rule[" + std::to_string(i) + "]"));
            }
        }
        if (sw.contains("alpha")) {
            grid.alphas = get_double_vector(sw.at("alpha"), scontext + ".alpha");
        }
        if (sw.contains("beta")) {
            grid.betas = get_double_vector(sw.at("beta"), scontext + ".beta");
        }
        config.sweep = std::move(grid);
    }

    return config;
}

experiment_config parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        // I/O problem, not a content problem; callers exit 2 on this.
        throw std::runtime_error("cannot open config file: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw config_error(path.string() + ": " + err.what());
    }
    return config_from_json(doc, path.filename().string());
}

json config_to_json(const experiment_config& config) {
    json doc;
    doc["rule"] = std::string(to_string(config.model.rule));
    doc["arrival"] = arrival_to_json(config.model.arrival);
    doc["service"] = service_to_json(config.model.service);
    doc["slots"] = config.model.slots;
    doc["warmup"] = config.model.warmup;
    doc["seed"] = config.model.seed;
    doc["replications"] = config.model.replications;
    doc["max_tracked_state"] = config.model.max_tracked_state;
    doc["thresholds"] = {{"rate_identity", config.thresholds.rate_identity},
                         {"basta", config.thresholds.basta},
                         {"epoch", config.thresholds.epoch},
                         {"ladf", config.thresholds.ladf},
                         {"analytic", config.thresholds.analytic}};
    if (config.sweep.has_value()) {
        json sw = json::object();
        if (!config.sweep->rules.empty()) {
            auto names = json::array();
            for (scheduling_rule rule : config.sweep->rules) {
                names.push_back(std::string(to_string(rule)));
            }
            sw["rule"] = std::move(names);
        }
        if (!config.sweep->alphas.empty()) {
            sw["alpha"] = config.sweep->alphas;
        }
        if (!config.sweep->betas.empty()) {
            sw["beta"] = config.sweep->betas;
        }
        doc["sweep"] = std::move(sw);
    }
    return doc;
}

}  // namespace basta
