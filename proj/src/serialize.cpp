#include "pcx/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace pcx {

using json = nlohmann::ordered_json;

std::string serialize_dfa(const Dfa& d) {
    json out;
    out["states"] = d.state_count;
    out["alphabet"] = d.alphabet;
    out["initial"] = d.initial;
    std::vector<int> finals;
    for (int q = 0; q < d.state_count; ++q)
        if (d.is_final(q)) finals.push_back(q);
    out["finals"] = finals;
    json rows = json::object();
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) rows[d.alphabet[l]] = d.transitions[l];
    out["transitions"] = rows;
    return out.dump();
}

Dfa parse_dfa(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("document: expected a JSON object");

    auto field = [&](const char* name) -> const json& {
        auto it = doc.find(name);
        if (it == doc.end())
            throw std::invalid_argument(std::string(name) + ": field is missing");
        return *it;
    };

    Dfa d;
    const json& states = field("states");
    if (!states.is_number_integer() || states.get<int>() <= 0)
        throw std::invalid_argument("states: must be a positive integer");
    d.state_count = states.get<int>();

    const json& alphabet = field("alphabet");
    if (!alphabet.is_array())
        throw std::invalid_argument("alphabet: expected an array of letter names");
    for (const auto& a : alphabet) {
        if (!a.is_string()) throw std::invalid_argument("alphabet: letters must be strings");
        if (d.letter_index(a.get<std::string>()) >= 0)
            throw std::invalid_argument("alphabet: duplicate letter '" + a.get<std::string>() + "'");
        d.alphabet.push_back(a.get<std::string>());
    }

    const json& initial = field("initial");
    if (!initial.is_number_integer())
        throw std::invalid_argument("initial: expected a state index");
    d.initial = initial.get<int>();
    if (d.initial < 0 || d.initial >= d.state_count)
        throw std::invalid_argument("initial: state index out of range");

    d.finals.assign(d.state_count, false);
    const json& finals = field("finals");
    if (!finals.is_array())
        throw std::invalid_argument("finals: expected an array of state indices");
    for (const auto& f : finals) {
        if (!f.is_number_integer() || f.get<int>() < 0 || f.get<int>() >= d.state_count)
            throw std::invalid_argument("finals: state index out of range");
        d.finals[f.get<int>()] = true;
    }

    const json& rows = field("transitions");
    if (!rows.is_object())
        throw std::invalid_argument("transitions: expected an object keyed by letter");
    for (const auto& letter : d.alphabet) {
        auto it = rows.find(letter);
        if (it == rows.end())
            throw std::invalid_argument("transitions: missing row for letter '" + letter + "'");
        if (!it->is_array() || it->size() != (std::size_t)d.state_count)
            throw std::invalid_argument("transitions: row for '" + letter +
                                        "' has length != state count");
        std::vector<int> row;
        for (const auto& t : *it) {
            if (!t.is_number_integer() || t.get<int>() < 0 || t.get<int>() >= d.state_count)
                throw std::invalid_argument("transitions: transition target out of range in row '" +
                                            letter + "'");
            row.push_back(t.get<int>());
        }
        d.transitions.push_back(std::move(row));
    }
    if (rows.size() != d.alphabet.size())
        throw std::invalid_argument("transitions: row for unknown letter present");

    validate(d);
    return d;
}

}  // namespace pcx
