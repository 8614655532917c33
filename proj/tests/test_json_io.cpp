#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "spinweave/coupled_basis.hpp"
#include "spinweave/errors.hpp"
#include "spinweave/json_io.hpp"
#include "spinweave/projector.hpp"

using namespace spinweave;

TEST_CASE("amplitude objects round trip") {
    auto amp = RadicalAmplitude::term(Rational(1, 3), 6) + RadicalAmplitude::from_integer(-2);
    Json j = amplitude_to_json(amp);
    CHECK(j.dump() == R"({"1":"-2","6":"1/3"})");
    CHECK(amplitude_from_json(j) == amp);

    CHECK(amplitude_to_json(RadicalAmplitude{}).dump() == "{}");
    CHECK(amplitude_from_json(Json::parse("{}")).is_zero());
    // non-squarefree radicands are accepted and reduced on the way in
    CHECK(amplitude_from_json(Json::parse(R"({"8":"1"})")) == RadicalAmplitude::term(Rational(2), 2));

    CHECK_THROWS_AS(amplitude_from_json(Json::parse(R"({"0":"1"})")), ParseError);
    CHECK_THROWS_AS(amplitude_from_json(Json::parse(R"({"-2":"1"})")), ParseError);
    CHECK_THROWS_AS(amplitude_from_json(Json::parse(R"({"2":3})")), ParseError);
    CHECK_THROWS_AS(amplitude_from_json(Json::parse(R"({"2":"x"})")), ParseError);
    CHECK_THROWS_AS(amplitude_from_json(Json::parse("[1]")), ParseError);
}

TEST_CASE("radical text round trips") {
    CHECK(radical_to_text(RadicalAmplitude::sqrt_of(Rational(6))) == "sqrt(6)");
    CHECK(radical_from_text("sqrt(6)") == RadicalAmplitude::sqrt_of(Rational(6)));
    CHECK(radical_from_text("0").is_zero());
    CHECK(radical_from_text("-1/2*sqrt(2)") == RadicalAmplitude::term(Rational(-1, 2), 2));
    CHECK(radical_from_text("2 + sqrt(3)") ==
          RadicalAmplitude::from_integer(2) + RadicalAmplitude::sqrt_of(Rational(3)));
    CHECK(radical_from_text("1 - 1/3*sqrt(5)") ==
          RadicalAmplitude::from_integer(1) - RadicalAmplitude::term(Rational(1, 3), 5));
    CHECK(radical_from_text("sqrt(8)") == RadicalAmplitude::term(Rational(2), 2));

    static const std::int64_t pool[] = {1, 2, 3, 5, 6, 7, 10, 15};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        RadicalAmplitude v;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t)
            v += RadicalAmplitude::term(
                Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4)),
                pool[rng() % 8]);
        CHECK(radical_from_text(radical_to_text(v)) == v);
        CHECK(amplitude_from_json(amplitude_to_json(v)) == v);
    }

    CHECK_THROWS_AS(radical_from_text(""), ParseError);
    CHECK_THROWS_AS(radical_from_text("sqrt(2"), ParseError);
    CHECK_THROWS_AS(radical_from_text("sqrt(-2)"), ParseError);
    CHECK_THROWS_AS(radical_from_text("q"), ParseError);
}

TEST_CASE("states round trip with validated keys") {
    auto psi = build_coupled_state(parse_path("1/2,1,1/2"), HalfInt::half());
    Json j = state_to_json(psi);
    CHECK(j.dump() == R"({"++-":{"6":"1/3"},"+-+":{"6":"-1/6"},"-++":{"6":"-1/6"}})");
    CHECK(state_from_json(j, 3) == psi);
    CHECK_THROWS_AS(state_from_json(j, 4), ParseError);
    CHECK_THROWS_AS(state_from_json(Json::parse(R"({"+0":{"1":"1"}})"), 2), ParseError);
    CHECK_THROWS_AS(state_from_json(Json::parse("[]"), 2), ParseError);
    CHECK(state_from_json(Json::parse("{}"), 2).is_zero());
}

TEST_CASE("setups serialize to the one-based wire format") {
    ExplicitLayout layout;
    layout.sigma_minus = {true, false, true};
    layout.descent_pairs[2] = {2, 1};
    auto cfg = compile_setup(parse_path("1/2,1,1/2"), HalfInt::half(), layout);
    Json j = setup_to_json(cfg);
    CHECK(j.dump() ==
          R"({"chi":[[1,1,0],[1,1,1],[1,1,-1]],"descent_pairs":{"3":[3,2]},"n":3,"polarizers":"-+-"})");
    CHECK(setup_from_json(j) == cfg);

    CHECK_THROWS_AS(setup_from_json(Json::parse(R"({"n":3})")), ParseError);
    CHECK_THROWS_AS(
        setup_from_json(Json::parse(
            R"({"chi":[[1,2],[1,1]],"descent_pairs":{},"n":2,"polarizers":"-+"})")),
        ParseError);
    CHECK_THROWS_AS(
        setup_from_json(Json::parse(
            R"({"chi":[[1,1],[1,1]],"descent_pairs":{},"n":2,"polarizers":"-x"})")),
        ParseError);
}

TEST_CASE("layout files") {
    std::string file = "layout_io_test.json";
    {
        std::ofstream out(file);
        out << R"({"polarizers": "-+-", "descent_pairs": {"3": [3, 2]}})";
    }
    auto layout = load_layout_file(file);
    CHECK(layout.sigma_minus == std::vector<bool>{true, false, true});
    CHECK(layout.descent_pairs == std::map<int, std::pair<int, int>>{{2, {2, 1}}});
    std::remove(file.c_str());

    // the pair map may be omitted entirely for descent-free paths
    CHECK(layout_from_json(Json::parse(R"({"polarizers": "--"})")).descent_pairs.empty());

    CHECK_THROWS_AS(load_layout_file("no_such_layout.json"), Error);
    CHECK_THROWS_AS(layout_from_json(Json::parse(R"({"polarizers": 3})")), ParseError);
    CHECK_THROWS_AS(layout_from_json(Json::parse(R"({"polarizers": "-+", "descent_pairs": 3})")),
                    ParseError);
    CHECK_THROWS_AS(
        layout_from_json(Json::parse(R"({"polarizers": "-+", "descent_pairs": {"x": [1, 2]}})")),
        ParseError);
}

TEST_CASE("state documents re-serialize byte for byte") {
    auto path = parse_path("1/2,1,1/2");
    auto cfg = compile_setup(path, HalfInt::half(), AssignmentPolicy::canonical());
    auto rep = check_proportionality(path, HalfInt::half(), cfg);
    auto alg = apply_projection_sequence(cfg);
    auto ref = build_coupled_state(path, HalfInt::half());

    Json doc = make_state_document(rep, cfg, alg, ref, true);
    std::string text = doc.dump(2);
    CHECK(Json::parse(text).dump(2) == text);

    CHECK(doc["schema"] == "spinweave/1");
    CHECK(doc["n"] == 3);
    CHECK(doc["holds"] == true);
    CHECK(doc["label"]["path"] == "1/2,1,1/2");
    CHECK(doc["label"]["m"] == "1/2");
    CHECK(doc["ratio"] == "sqrt(6)");
    CHECK(doc["ratio_inverse"] == "1/6*sqrt(6)");
    CHECK(doc["normalized"]["approx"] == true);
    CHECK(doc["normalized"]["amplitudes"]["++-"] == "0.816496580927726");

    // the parsed pieces reconstruct the exact in-memory objects
    Json reparsed = Json::parse(text);
    CHECK(setup_from_json(reparsed["setup"]) == cfg);
    CHECK(state_from_json(reparsed["state_alg"], 3) == alg);
    CHECK(state_from_json(reparsed["state_ref"], 3) == ref);
    CHECK(radical_from_text(reparsed["ratio"].get<std::string>()) == rep.ratio);

    Json bare = make_state_document(rep, cfg, alg, ref, false);
    CHECK_FALSE(bare.contains("normalized"));
}

TEST_CASE("sweep summaries carry per-check arrays and counts") {
    SweepOptions opts;
    opts.n_max = 2;
    Json j = summary_to_json(full_sweep(opts));
    CHECK(j["schema"] == "spinweave/1");
    CHECK(j["all_passed"] == true);
    CHECK(j["n_max"] == 2);
    CHECK(j["seed"] == 42);
    CHECK(j["checks"].size() == 4); // proportionality, recursion, sums, ratio
    CHECK(j["checks"]["proportionality"]["items"].size() == 4);
    CHECK(j["checks"]["proportionality"]["counts"]["2"]["checked"] == 4);
    CHECK(j["checks"]["proportionality"]["counts"]["2"]["passed"] == 4);
    CHECK(j["checks"]["ratio"]["counts"]["2"]["skipped"] == 2);

    const Json& first = j["checks"]["proportionality"]["items"][0];
    CHECK(first["path"] == "1/2,0");
    CHECK(first["m"] == "0");
    CHECK(first["holds"] == true);
    CHECK(first["ratio"] == "sqrt(2)");
    CHECK_FALSE(first.contains("skipped"));
}
