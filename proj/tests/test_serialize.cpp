#include <doctest.h>

#include <string>

#include "framekit/serialize.hpp"

using namespace framekit;

TEST_SUITE("serialize") {

TEST_CASE("frame JSON round trip is lossless") {
  for (const Frame& f : {singer_ogf(2), picket_ogf(3), chirp_mub(3), example_5_2()}) {
    const auto text = frame_to_json(f).dump();
    const Frame back = frame_from_json(parse_json(text));
    REQUIRE(back.size() == f.size());
    REQUIRE(back.dim() == f.dim());
    CHECK((back.vectors - f.vectors).norm() == 0.0);
    CHECK(back.labels == f.labels);
    // Serialization is deterministic.
    CHECK(frame_to_json(back).dump() == text);
  }
}

TEST_CASE("design set JSON round trip") {
  for (const DesignSet& s : {singer_set(3, 1), relative_set(4, 1),
                             make_plain_set(7, {0, 1, 3}, 1)}) {
    const auto j = design_set_to_json(s);
    const DesignSet back = design_set_from_json(j);
    CHECK(back.modulus == s.modulus);
    CHECK(back.elements == s.elements);
    CHECK(back.kind == s.kind);
    CHECK(back.provenance == s.provenance);
  }
}

TEST_CASE("design set JSON uses the documented schema") {
  const auto j = design_set_to_json(singer_set(2, 1));
  CHECK(j.at("modulus") == 7);
  CHECK(j.at("kind").contains("plain"));
  CHECK(j.at("kind").at("plain").at("K") == 3);
  CHECK(j.at("kind").at("plain").at("lambda") == 1);
  CHECK(j.at("provenance").at("trace-constructed").at("q") == 2);

  const auto r = design_set_to_json(relative_set(3, 1));
  CHECK(r.at("kind").at("relative").at("N") == 4);
  CHECK(r.at("kind").at("relative").at("L") == 2);
}

TEST_CASE("weighted frame JSON round trip") {
  const auto wf = singer_weights(singer_ogf(2));
  const auto j = weighted_frame_to_json(wf);
  const auto back = weighted_frame_from_json(j);
  CHECK(back.weights == wf.weights);
  CHECK((back.frame.vectors - wf.frame.vectors).norm() == 0.0);
}

TEST_CASE("malformed input raises ParseError") {
  try {
    parse_json("{not json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }

  auto j = frame_to_json(example_5_2());
  j["vectors"][0] = nlohmann::json::array({nlohmann::json::array({1.0, 0.0})});  // wrong length
  try {
    frame_from_json(j);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }

  auto ds = design_set_to_json(singer_set(2, 1));
  ds["kind"] = nlohmann::json::object();
  CHECK_THROWS_AS(design_set_from_json(ds), Error);
}

TEST_CASE("frames without labels parse as custom") {
  auto j = frame_to_json(example_5_2());
  j.erase("labels");
  const Frame f = frame_from_json(j);
  for (const auto& label : f.labels) CHECK(label.kind == Label::Kind::custom);
}

TEST_CASE("csv export has one row per vector") {
  const Frame f = singer_ogf(2);
  const auto csv = frame_to_csv(f);
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n' ? 1 : 0;
  CHECK(rows == 11);  // header + 10 vectors
  CHECK(csv.rfind("re_1,im_1,re_2,im_2,re_3,im_3\n", 0) == 0);
  // First vector is e_1.
  const auto line_end = csv.find('\n', csv.find('\n') + 1);
  const auto first = csv.substr(csv.find('\n') + 1, line_end - csv.find('\n') - 1);
  CHECK(first == "1,0,0,0,0,0");
}

TEST_CASE("analysis report JSON carries every field and tolerance") {
  const auto j = analysis_report_to_json(analyze(singer_ogf(2)));
  for (const char* key :
       {"n_vectors", "dim", "unit_norm", "coherence", "welch_bound", "orthoplex_bound",
        "orthoplex_applicable", "max_frame_size_bound", "within_size_cap",
        "tightness_residual", "tight_bound", "is_tight", "is_equiangular",
        "equiangular_value", "is_ogf", "tolerances"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j.at("tolerances").contains("tight"));
}

TEST_CASE("design certificate JSON") {
  const auto cert = design_sum(singer_weights(singer_ogf(2)), 2);
  const auto j = design_certificate_to_json(cert);
  CHECK(j.at("t") == 2);
  CHECK(j.at("verdict") == true);
  CHECK(j.contains("target"));
  CHECK(j.contains("achieved"));
  CHECK(j.contains("defect"));
  CHECK(j.contains("tolerance"));
}

TEST_CASE("doubles survive the JSON round trip bit-exactly") {
  const Frame f = chirp_mub(5);
  const Frame back = frame_from_json(parse_json(frame_to_json(f).dump()));
  for (std::int64_t j = 0; j < f.size(); ++j) {
    for (std::int64_t i = 0; i < f.dim(); ++i) {
      CHECK(back.vectors(i, j).real() == f.vectors(i, j).real());
      CHECK(back.vectors(i, j).imag() == f.vectors(i, j).imag());
    }
  }
}

}  // TEST_SUITE
