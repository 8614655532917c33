#include "spinweave/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "spinweave/errors.hpp"

namespace spinweave {

namespace {

std::int64_t parse_radicand(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value <= 0)
        throw ParseError(std::string(whole),
                         "not a positive radicand: '" + std::string(whole) + "'");
    return value;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(key, std::string("missing field '") + key + "'");
    return j.at(key);
}

RadicalAmplitude parse_radical_term(std::string_view token, int sign, std::string_view whole) {
    auto fail = [&whole]() {
        throw ParseError(std::string(whole), "bad radical text: '" + std::string(whole) + "'");
    };
    std::int64_t radicand = 1;
    std::string_view coeff_text = token;
    std::size_t s = token.find("sqrt(");
    if (s != std::string_view::npos) {
        if (token.back() != ')') fail();
        radicand = parse_radicand(token.substr(s + 5, token.size() - s - 6), whole);
        if (s == 0) {
            coeff_text = {};
        } else {
            if (token[s - 1] != '*') fail();
            coeff_text = token.substr(0, s - 1);
        }
    }
    Rational coeff = coeff_text.empty() ? Rational(1) : parse_fraction(coeff_text);
    return RadicalAmplitude::term(coeff * sign, radicand);
}

} // namespace

Json amplitude_to_json(const RadicalAmplitude& amp) {
    Json j = Json::object();
    for (const auto& [radicand, coeff] : amp.terms())
        j[std::to_string(radicand)] = to_fraction_string(coeff);
    return j;
}

RadicalAmplitude amplitude_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError(j.dump(), "an amplitude must be a JSON object");
    RadicalAmplitude amp;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw ParseError(key, "amplitude coefficient for '" + key + "' must be a string");
        amp += RadicalAmplitude::term(parse_fraction(value.get<std::string>()),
                                      parse_radicand(key, key));
    }
    return amp;
}

std::string radical_to_text(const RadicalAmplitude& amp) {
    return amp.to_string();
}

RadicalAmplitude radical_from_text(std::string_view text) {
    if (text == "0") return {};
    if (text.empty()) throw ParseError("", "empty radical text");
    RadicalAmplitude total;
    std::size_t pos = 0;
    int sign = 1;
    if (text[0] == '-') {
        sign = -1;
        pos = 1;
    }
    while (true) {
        std::size_t plus = text.find(" + ", pos);
        std::size_t minus = text.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        std::string_view token =
            text.substr(pos, cut == std::string_view::npos ? cut : cut - pos);
        total += parse_radical_term(token, sign, text);
        if (cut == std::string_view::npos) break;
        sign = cut == minus ? -1 : 1;
        pos = cut + 3;
    }
    return total;
}

Json state_to_json(const SparseState& state) {
    Json j = Json::object();
    for (const auto& [basis, amp] : state.amplitudes()) j[basis] = amplitude_to_json(amp);
    return j;
}

SparseState state_from_json(const Json& j, int n) {
    if (!j.is_object()) throw ParseError(j.dump(), "a state must be a JSON object");
    SparseState state(n);
    for (const auto& [basis, amp] : j.items()) {
        if (basis.size() != static_cast<std::size_t>(n) || !is_valid_basis_string(basis))
            throw ParseError(basis, "'" + basis + "' is not a length-" + std::to_string(n) +
                                        " string over {+,-}");
        state.set(basis, amplitude_from_json(amp));
    }
    return state;
}

Json normalized_to_json(const SparseState& state) {
    double norm2 = inner_product(state, state).approx();
    double scale = norm2 > 0 ? 1.0 / std::sqrt(norm2) : 0.0;
    Json amplitudes = Json::object();
    char buffer[64];
    for (const auto& [basis, amp] : state.amplitudes()) {
        std::snprintf(buffer, sizeof buffer, "%.15g", amp.approx() * scale);
        amplitudes[basis] = buffer;
    }
    return Json{{"amplitudes", amplitudes}, {"approx", true}};
}

Json setup_to_json(const SetupConfig& cfg) {
    std::string polarizers;
    for (bool minus : cfg.sigma_minus) polarizers += minus ? '-' : '+';
    Json pairs = Json::object();
    for (const auto& [emitter, pair] : cfg.descent_pairs)
        pairs[std::to_string(emitter + 1)] = Json::array({pair.first + 1, pair.second + 1});
    return Json{{"chi", cfg.chi},
                {"descent_pairs", pairs},
                {"n", cfg.n},
                {"polarizers", polarizers}};
}

SetupConfig setup_from_json(const Json& j) {
    SetupConfig cfg;
    const Json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<int>() < 1 || n.get<int>() > 32)
        throw ParseError(n.dump(), "n must be an integer in 1..32");
    cfg.n = n.get<int>();

    const Json& polarizers = field(j, "polarizers");
    if (!polarizers.is_string()) throw ParseError(polarizers.dump(), "polarizers must be a string");
    std::string pol = polarizers.get<std::string>();
    if (pol.size() != static_cast<std::size_t>(cfg.n) || !is_valid_basis_string(pol))
        throw ParseError(pol, "polarizers must be a length-" + std::to_string(cfg.n) +
                                  " string over {+,-}");
    for (char c : pol) cfg.sigma_minus.push_back(c == '-');

    const Json& chi = field(j, "chi");
    if (!chi.is_array() || chi.size() != static_cast<std::size_t>(cfg.n))
        throw ParseError("chi", "chi must be an array of " + std::to_string(cfg.n) + " rows");
    for (const Json& row : chi) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cfg.n))
            throw ParseError("chi", "each chi row must list " + std::to_string(cfg.n) + " entries");
        std::vector<int> values;
        for (const Json& entry : row) {
            if (!entry.is_number_integer() || entry.get<int>() < -1 || entry.get<int>() > 1)
                throw ParseError(entry.dump(), "chi entries must be -1, 0 or 1");
            values.push_back(entry.get<int>());
        }
        cfg.chi.push_back(std::move(values));
    }

    if (j.contains("descent_pairs")) {
        const Json& pairs = j.at("descent_pairs");
        if (!pairs.is_object()) throw ParseError("descent_pairs", "descent_pairs must be an object");
        for (const auto& [key, value] : pairs.items()) {
            std::int64_t emitter = parse_radicand(key, key);
            if (emitter > cfg.n)
                throw ParseError(key, "descent emitter " + key + " outside 1.." +
                                          std::to_string(cfg.n));
            if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
                !value[1].is_number_integer())
                throw ParseError(key, "descent pair for emitter " + key +
                                          " must be [minus detector, plus detector]");
            int jm = value[0].get<int>();
            int jp = value[1].get<int>();
            if (jm < 1 || jm > cfg.n || jp < 1 || jp > cfg.n)
                throw ParseError(key, "descent pair for emitter " + key + " outside 1.." +
                                          std::to_string(cfg.n));
            cfg.descent_pairs[static_cast<int>(emitter) - 1] = {jm - 1, jp - 1};
        }
    }
    return cfg;
}

ExplicitLayout layout_from_json(const Json& j) {
    ExplicitLayout layout;
    const Json& polarizers = field(j, "polarizers");
    if (!polarizers.is_string() || !is_valid_basis_string(polarizers.get<std::string>()))
        throw ParseError(polarizers.dump(), "polarizers must be a string over {+,-}");
    for (char c : polarizers.get<std::string>()) layout.sigma_minus.push_back(c == '-');
    int n = static_cast<int>(layout.sigma_minus.size());

    if (j.contains("descent_pairs")) {
        const Json& pairs = j.at("descent_pairs");
        if (!pairs.is_object()) throw ParseError("descent_pairs", "descent_pairs must be an object");
        for (const auto& [key, value] : pairs.items()) {
            std::int64_t emitter = parse_radicand(key, key);
            if (emitter > n)
                throw ParseError(key, "descent emitter " + key + " outside 1.." + std::to_string(n));
            if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
                !value[1].is_number_integer())
                throw ParseError(key, "descent pair for emitter " + key +
                                          " must be [minus detector, plus detector]");
            int jm = value[0].get<int>();
            int jp = value[1].get<int>();
            if (jm < 1 || jm > n || jp < 1 || jp > n)
                throw ParseError(key, "descent pair for emitter " + key + " outside 1.." +
                                          std::to_string(n));
            layout.descent_pairs[static_cast<int>(emitter) - 1] = {jm - 1, jp - 1};
        }
    }
    return layout;
}

ExplicitLayout load_layout_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file, "cannot read layout file '" + file + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(file, "layout file '" + file + "' is not valid JSON: " + e.what());
    }
    return layout_from_json(j);
}

Json make_state_document(const EquivalenceReport& report, const SetupConfig& cfg,
                         const SparseState& alg, const SparseState& ref,
                         bool with_normalized) {
    Json j{{"holds", report.holds},
           {"label", Json{{"m", to_string(report.m)}, {"path", report.path.to_string()}}},
           {"n", cfg.n},
           {"ratio", radical_to_text(report.ratio)},
           {"ratio_inverse", radical_to_text(report.ratio_inverse)},
           {"schema", kSchemaVersion},
           {"setup", setup_to_json(cfg)},
           {"state_alg", state_to_json(alg)},
           {"state_ref", state_to_json(ref)}};
    if (with_normalized) j["normalized"] = normalized_to_json(alg);
    return j;
}

Json summary_to_json(const SweepSummary& summary) {
    Json checks = Json::object();
    for (const auto& [name, items] : summary.items) {
        Json array = Json::array();
        for (const SweepItem& item : items) {
            Json entry{{"holds", item.holds}, {"m", item.m}, {"path", item.path}};
            if (item.skipped) entry["skipped"] = true;
            if (!item.ratio.empty()) entry["ratio"] = item.ratio;
            array.push_back(std::move(entry));
        }
        Json counts = Json::object();
        for (const auto& [n, c] : summary.counts.at(name)) {
            Json entry{{"checked", c.checked}, {"passed", c.passed}};
            if (c.skipped != 0) entry["skipped"] = c.skipped;
            counts[std::to_string(n)] = std::move(entry);
        }
        checks[name] = Json{{"counts", std::move(counts)}, {"items", std::move(array)}};
    }
    return Json{{"all_passed", summary.all_passed},
                {"checks", std::move(checks)},
                {"n_max", summary.n_max},
                {"schema", kSchemaVersion},
                {"seed", summary.seed}};
}

} // namespace spinweave
