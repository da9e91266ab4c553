#include "priorforge/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace priorforge {

namespace {

std::string describe(const Json& v)
{
    return v.dump();
}

std::vector<Rational> parse_state_vector(const Json& v, const std::vector<std::string>& states, const std::string& where)
{
    if (v.is_array()) {
        std::vector<Rational> out;
        out.reserve(v.size());
        for (const auto& x : v) {
            out.push_back(parse_rational(x));
        }
        return out;
    }
    if (v.is_object()) {
        std::vector<Rational> out(states.size());
        for (const auto& [key, x] : v.items()) {
            const auto it = std::find(states.begin(), states.end(), key);
            if (it == states.end()) {
                throw ParseError(where + ": unknown state label '" + key + "'");
            }
            out[static_cast<std::size_t>(it - states.begin())] = parse_rational(x);
        }
        return out;
    }
    throw ParseError(where + ": expected an array or an object keyed by state, got " + describe(v));
}

std::vector<std::string> parse_labels(const Json& doc, const char* key)
{
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        throw ParseError(std::string("missing array '") + key + "'");
    }
    std::vector<std::string> out;
    for (const auto& v : doc.at(key)) {
        if (v.is_string()) {
            out.push_back(v.get<std::string>());
        } else if (v.is_number_integer()) {
            out.push_back(v.dump());
        } else {
            throw ParseError(std::string("labels in '") + key + "' must be strings, got " + describe(v));
        }
    }
    return out;
}

void check_schema(const Json& doc)
{
    if (!doc.is_object()) {
        throw ParseError("document must be a JSON object");
    }
    if (doc.contains("schema")) {
        const auto& tag = doc.at("schema");
        if (!tag.is_string() || tag.get<std::string>() != kSchemaTag) {
            throw ParseError(std::string("unsupported schema tag ") + describe(tag) + ", expected \"" + kSchemaTag + "\"");
        }
    }
}

}  // namespace

Rational parse_rational(const Json& value)
{
    try {
        if (value.is_number_integer()) {
            if (value.is_number_unsigned()) {
                return Rational(mpq_class(mpz_class(value.dump(), 10)));
            }
            return Rational(value.get<std::int64_t>());
        }
        if (value.is_number_float()) {
            throw ParseError("floating-point value " + describe(value) + " rejected; write it as a string \"a/b\"");
        }
        if (value.is_string()) {
            return Rational::parse(value.get<std::string>());
        }
        if (value.is_object() && value.contains("num") && value.contains("den")) {
            const Rational num = parse_rational(value.at("num"));
            const Rational den = parse_rational(value.at("den"));
            if (!num.is_integer() || !den.is_integer()) {
                throw ParseError("num and den must be integers in " + describe(value));
            }
            if (den.is_zero()) {
                throw ParseError("zero denominator in " + describe(value));
            }
            return num / den;
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected a rational, got " + describe(value));
}

Json rational_to_json(const Rational& value)
{
    return value.str();
}

Json rationals_to_json(std::span<const Rational> values)
{
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(v.str());
    }
    return out;
}

RawStructure parse_structure(const Json& doc)
{
    check_schema(doc);
    RawStructure raw;
    raw.states = parse_labels(doc, "states");
    raw.players = parse_labels(doc, "players");

    auto state_index = [&](const Json& label, const std::string& who) -> StateIndex {
        const std::string key = label.is_string() ? label.get<std::string>() : label.dump();
        const auto it = std::find(raw.states.begin(), raw.states.end(), key);
        if (it == raw.states.end()) {
            throw PartitionError("player '" + who + "': partition names unknown state '" + key + "'");
        }
        return static_cast<StateIndex>(it - raw.states.begin());
    };

    if (!doc.contains("partitions") || !doc.at("partitions").is_object()) {
        throw ParseError("missing object 'partitions'");
    }
    const Json empty = Json::object();
    const Json& types = doc.contains("types") ? doc.at("types") : empty;
    const Json& state_types = doc.contains("state_types") ? doc.at("state_types") : empty;
    if (!types.is_object() || !state_types.is_object()) {
        throw ParseError("'types' and 'state_types' must be objects keyed by player");
    }
    for (const auto& [key, v] : doc.at("partitions").items()) {
        if (std::find(raw.players.begin(), raw.players.end(), key) == raw.players.end()) {
            throw ParseError("partition given for unknown player '" + key + "'");
        }
    }

    for (const auto& who : raw.players) {
        RawStructure::Player player;
        if (!doc.at("partitions").contains(who)) {
            throw StructureError("no partition given for player '" + who + "'");
        }
        const auto& cells = doc.at("partitions").at(who);
        if (!cells.is_array()) {
            throw ParseError("partition of player '" + who + "' must be an array of cells");
        }
        for (const auto& cell : cells) {
            if (!cell.is_array()) {
                throw ParseError("cells of player '" + who + "' must be arrays of state labels");
            }
            Cell c;
            for (const auto& label : cell) {
                c.push_back(state_index(label, who));
            }
            player.cells.push_back(std::move(c));
        }
        if (types.contains(who)) {
            const auto& per_cell = types.at(who);
            if (per_cell.is_array()) {
                for (std::size_t c = 0; c < per_cell.size(); ++c) {
                    player.cell_types.emplace(
                        c, parse_state_vector(per_cell[c], raw.states, "player '" + who + "', cell " + std::to_string(c)));
                }
            } else if (per_cell.is_object()) {
                for (const auto& [key, row] : per_cell.items()) {
                    std::size_t c = 0;
                    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), c);
                    if (ec != std::errc() || ptr != key.data() + key.size()) {
                        throw ParseError("player '" + who + "': type key '" + key + "' is not a cell index");
                    }
                    player.cell_types.emplace(c, parse_state_vector(row, raw.states, "player '" + who + "', cell " + key));
                }
            } else {
                throw ParseError("types of player '" + who + "' must be an object keyed by cell index");
            }
        }
        if (state_types.contains(who)) {
            const auto& per_state = state_types.at(who);
            if (!per_state.is_object()) {
                throw ParseError("state_types of player '" + who + "' must be an object keyed by state label");
            }
            for (const auto& [key, row] : per_state.items()) {
                const StateIndex s = state_index(Json(key), who);
                player.state_types.emplace(s, parse_state_vector(row, raw.states, "player '" + who + "', state '" + key + "'"));
            }
        }
        raw.per_player.push_back(std::move(player));
    }
    return raw;
}

InformationStructure structure_from_json(const Json& doc)
{
    return validate_structure(parse_structure(doc));
}

InformationStructure structure_from_text(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return structure_from_json(doc);
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path.string() + "': invalid JSON: " + e.what());
    }
}

InformationStructure load_structure(const std::filesystem::path& path)
{
    return structure_from_json(read_json_file(path));
}

Json structure_to_json(const InformationStructure& T)
{
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["states"] = T.state_labels();
    doc["players"] = T.player_labels();
    Json partitions = Json::object();
    Json types = Json::object();
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        Json cells = Json::array();
        Json per_cell = Json::object();
        const auto player_cells = T.cells(i);
        for (std::size_t c = 0; c < player_cells.size(); ++c) {
            Json cell = Json::array();
            for (StateIndex s : player_cells[c]) {
                cell.push_back(T.state_labels()[s]);
            }
            cells.push_back(std::move(cell));
            per_cell[std::to_string(c)] = rationals_to_json(T.cell_type(i, c).mass());
        }
        partitions[T.player_labels()[i]] = std::move(cells);
        types[T.player_labels()[i]] = std::move(per_cell);
    }
    doc["partitions"] = std::move(partitions);
    doc["types"] = std::move(types);
    return doc;
}

Distribution parse_distribution(const Json& doc, const InformationStructure& T)
{
    const Json* body = &doc;
    if (doc.is_object() && doc.contains("distribution")) {
        check_schema(doc);
        body = &doc.at("distribution");
    }
    auto mass = parse_state_vector(*body, T.state_labels(), "distribution");
    if (mass.size() != T.state_count()) {
        throw DimensionError("distribution has " + std::to_string(mass.size()) + " entries, the structure has " +
                             std::to_string(T.state_count()) + " states");
    }
    return Distribution(std::move(mass));
}

Distribution load_distribution(const std::filesystem::path& path, const InformationStructure& T)
{
    return parse_distribution(read_json_file(path), T);
}

Json distribution_to_json(const Distribution& p, const InformationStructure& T)
{
    Json out = Json::object();
    for (StateIndex s = 0; s < p.size(); ++s) {
        out[T.state_labels()[s]] = p[s].str();
    }
    return out;
}

PayoffFamily parse_payoffs(const Json& doc, const InformationStructure& T)
{
    check_schema(doc);
    if (!doc.contains("payoffs") || !doc.at("payoffs").is_object()) {
        throw ParseError("missing object 'payoffs' keyed by player");
    }
    PayoffFamily f;
    f.payoffs.assign(T.player_count(), PayoffVector::zeros(T.state_count()));
    for (const auto& [who, row] : doc.at("payoffs").items()) {
        const auto i = T.find_player(who);
        if (!i) {
            throw ParseError("payoff given for unknown player '" + who + "'");
        }
        auto values = parse_state_vector(row, T.state_labels(), "payoff of player '" + who + "'");
        if (values.size() != T.state_count()) {
            throw DimensionError("payoff of player '" + who + "' has " + std::to_string(values.size()) +
                                 " entries, expected " + std::to_string(T.state_count()));
        }
        f.payoffs[*i] = PayoffVector(std::move(values));
    }
    return f;
}

PayoffFamily load_payoffs(const std::filesystem::path& path, const InformationStructure& T)
{
    return parse_payoffs(read_json_file(path), T);
}

Json payoffs_to_json(const PayoffFamily& f, const InformationStructure& T)
{
    Json out = Json::object();
    for (PlayerIndex i = 0; i < f.payoffs.size(); ++i) {
        out[T.player_labels()[i]] = rationals_to_json(f.payoffs[i].values());
    }
    return out;
}

Json state_set_to_json(const StateSet& S, const InformationStructure& T)
{
    Json out = Json::array();
    for (StateIndex s : S) {
        out.push_back(T.state_labels().at(s));
    }
    return out;
}

}  // namespace priorforge
