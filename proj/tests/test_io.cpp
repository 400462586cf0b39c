// Copyright 2026 The fttomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "fttomo/errors.hpp"
#include "fttomo/io.hpp"
#include "fttomo/presets.hpp"
#include "fttomo/text_format.hpp"
#include "test_support.hpp"

using namespace fttomo;
using fttomo::io::json;

TEST_CASE("format and parse doubles") {
    std::mt19937_64 rng(40);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int k = 0; k < 10000; ++k) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(u(rng)) % 20);
        REQUIRE(parse_double(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(std::isinf(parse_double("inf")));
    CHECK_THROWS_AS(parse_double("0.5x"), ValidationError);
    CHECK_THROWS_AS(parse_double(""), ValidationError);
}

TEST_CASE("angle expressions") {
    CHECK(parse_angle("2.27") == 2.27);
    CHECK(parse_angle("pi") == M_PI);
    CHECK(parse_angle("-pi/2") == -M_PI / 2);
    CHECK(parse_angle("11pi/15") == doctest::Approx(11 * M_PI / 15).epsilon(1e-15));
    CHECK(parse_angle("0.5*pi") == M_PI / 2);
    CHECK_THROWS_AS(parse_angle("tau"), ValidationError);
    CHECK_THROWS_AS(parse_angle("pi/0"), ValidationError);
}

TEST_CASE("density matrix JSON") {
    const auto rho = presets::two_qubit_state();
    const json j = io::matrix_to_json(rho.matrix());
    CHECK(j.at("n_qubits") == 2);
    const json reparsed = json::parse(j.dump());
    CHECK(io::matrix_from_json(reparsed) == rho.matrix());
    CHECK(io::density_from_json(reparsed).matrix() == rho.matrix());

    json bad = j;
    bad["im"][0][1] = 0.3;
    CHECK_THROWS_AS(io::density_from_json(bad), ValidationError);

    json slightly = io::matrix_to_json(DensityMatrix::maximally_mixed(1).matrix());
    slightly["im"][0][1] = 1e-10;
    CHECK_NOTHROW(io::density_from_json(slightly));
    slightly["im"][0][1] = 1e-8;
    CHECK_THROWS_AS(io::density_from_json(slightly), ValidationError);

    json wrong_size = j;
    wrong_size["n_qubits"] = 1;
    CHECK_THROWS_AS(io::matrix_from_json(wrong_size), ValidationError);
    CHECK_THROWS_AS(io::matrix_from_json(json{{"re", 1}}), ValidationError);
}

TEST_CASE("config JSON") {
    const auto cfg = presets::two_qubit_config(5, 64, 1000, 77);
    const auto back = io::config_from_json(json::parse(io::config_to_json(cfg).dump()));
    CHECK(back.n_qubits() == 2);
    CHECK(back.plates()[0].retardance == cfg.plates()[0].retardance);
    CHECK(back.plates()[1].frequency == 5);
    CHECK(back.bins_per_period() == 64);
    CHECK(back.shots_per_bin() == 1000);
    CHECK(back.seed() == 77);
    CHECK(back.base_omega() == cfg.base_omega());

    const json text = json::parse(R"({"plates": [{"beta": "11pi/15", "frequency": 1}]})");
    const auto from_text = io::config_from_json(text);
    CHECK(from_text.plates()[0].retardance == doctest::Approx(presets::kRetardance).epsilon(1e-15));
    CHECK(from_text.bins_per_period() == 16);
    CHECK(from_text.noiseless());

    const json unordered = json::parse(
        R"({"plates": [{"beta": 2.3, "frequency": 5}, {"beta": 2.3, "frequency": 1}], "bins_per_period": 64})");
    CHECK_THROWS_AS(io::config_from_json(unordered), ValidationError);
    CHECK_THROWS_AS(io::config_from_json(json::parse(R"({"plates": [{"frequency": 1}]})")),
                    ValidationError);
    CHECK_THROWS_AS(io::config_from_json(json::parse(R"({"plates": [{"beta": true, "frequency": 1}]})")),
                    ValidationError);
}

TEST_CASE("signal CSV round trip is bit-exact") {
    std::mt19937_64 rng(41);
    for (const auto& cfg : {presets::one_qubit_config(), presets::two_qubit_config(),
                            presets::two_qubit_config(5, 64, 1000, 3)}) {
        const auto rec = synthesize(random_ginibre_state(cfg.n_qubits(), rng), cfg);
        std::ostringstream csv;
        io::write_signal_csv(csv, rec);
        const json sidecar = json::parse(io::signal_sidecar(rec, json::object()).dump());
        std::istringstream in(csv.str());
        const auto back = io::read_signal(in, sidecar);
        CHECK(back.kind == rec.kind);
        CHECK(back.times == rec.times);
        CHECK(back.table == rec.table);
        CHECK(back.period == rec.period);
    }
}

TEST_CASE("signal CSV layout and errors") {
    const auto rec = synthesize(presets::two_qubit_state(), presets::two_qubit_config(5, 64, 10, 1));
    std::ostringstream csv;
    io::write_signal_csv(csv, rec);
    const std::string text = csv.str();
    CHECK(text.rfind("t,HH,HV,VH,VV\n", 0) == 0);
    const auto second_line = text.substr(text.find('\n') + 1);
    CHECK(second_line.substr(0, second_line.find('\n')).find('.') == second_line.find('.'));

    const json sidecar = io::signal_sidecar(rec, json::object());
    CHECK(sidecar.at("kind") == "counts");
    CHECK(sidecar.at("outcomes").size() == 4);

    std::istringstream truncated(text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(io::read_signal(truncated, sidecar), ValidationError);
    std::istringstream bad_header("t,HH,HV\n");
    CHECK_THROWS_AS(io::read_signal(bad_header, sidecar), ValidationError);
}

TEST_CASE("files and hashes") {
    const auto dir = std::filesystem::temp_directory_path() / "fttomo_test_io";
    std::filesystem::create_directories(dir);
    const auto rec = synthesize(presets::one_qubit_state(), presets::one_qubit_config());
    io::save_signal(dir / "sig.csv", rec, json{{"command", "test"}});
    CHECK(std::filesystem::exists(dir / "sig.json"));
    const auto back = io::load_signal(dir / "sig.csv");
    CHECK(back.table == rec.table);
    CHECK(io::read_json_file(dir / "sig.json").at("manifest").at("command") == "test");

    CHECK(io::sidecar_path("a/b/c.csv") == std::filesystem::path("a/b/c.json"));
    CHECK_THROWS_AS(io::read_text_file(dir / "missing.csv"), IoError);
    CHECK_THROWS_AS(io::write_text_file(dir / "no_such_dir" / "x.txt", "x"), IoError);
    io::write_text_file(dir / "broken.json", "{not json");
    CHECK_THROWS_AS(io::read_json_file(dir / "broken.json"), ValidationError);

    const json a{{"x", 1}};
    CHECK(io::content_hash(a) == io::content_hash(json{{"x", 1}}));
    CHECK(io::content_hash(a) != io::content_hash(json{{"x", 2}}));
    CHECK(io::content_hash(a).size() == 16);
    std::filesystem::remove_all(dir);
}
