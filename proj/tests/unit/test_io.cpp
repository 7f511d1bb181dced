#include <gtest/gtest.h>

#include <sys/stat.h>
#include <unistd.h>

#include <filesystem>
#include <functional>

#include "generators.hpp"
#include "sseq/error.hpp"
#include "sseq/io.hpp"

using namespace sseq;
using sseq::testkit::Rng;

namespace fs = std::filesystem;

namespace {

const char* kM0Doc = R"({"components": 3, "genus": 0, "entries": [[-1, -1], [-1, -1]], "label": "first"})";

ErrorKind kind_of_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidConfig;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sseq_io_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(MatrixDocument, ParsesCounterexample) {
  const auto doc = parse_matrix_document(kM0Doc);
  EXPECT_EQ(doc.components, 3u);
  EXPECT_EQ(doc.entries, (IntMatrix{{-1, -1}, {-1, -1}}));
  EXPECT_EQ(doc.label, "first");
}

TEST(MatrixDocument, DimensionMismatchIsValidationError) {
  try {
    parse_matrix(R"({"components": 3, "genus": 0, "entries": [[1,0,0],[0,1,0],[0,0,1]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
    EXPECT_NE(std::string(e.what()).find("size"), std::string::npos);
  }
}

TEST(MatrixDocument, MalformedTextReportsPosition) {
  try {
    parse_matrix("{\n  \"components\": 3,\n  \"genus\": ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of_error([] { parse_matrix(R"({"components": 3, "genus": 0})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of_error([] { parse_matrix(R"({"components": 1, "genus": 0, "entries": [[1.5]]})"); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of_error([] { parse_matrix(R"({"components": 1, "genus": 1, "entries": [[0, 1], [0]]})"); }),
            ErrorKind::ParseError);
}

TEST(MatrixDocument, ClassicalDefaults) {
  const auto doc = parse_matrix_document(R"({"entries": [[1, 2, 3], [4, 5, 6], [7, 8, 9]]})", ValidationMode::Classical);
  EXPECT_EQ(doc.components, 1u);
  EXPECT_EQ(doc.genus, 1u);
}

TEST(MatrixDocument, BigEntriesRoundTripByteIdentical) {
  const std::string big = "123456789012345678901234567890";
  IntMatrix m{{0, 0}, {1, 0}};
  m(0, 0) = Integer(big);
  m(1, 1) = -Integer(big);
  const std::string text = serialize_matrix(OrderedSeifertMatrix{1, 1, m}, "big");
  EXPECT_NE(text.find("\"" + big + "\""), std::string::npos);
  const auto doc = parse_matrix_document(text);
  EXPECT_EQ(doc.entries, m);
  EXPECT_EQ(serialize_matrix(doc), text);
}

TEST(MatrixDocument, RandomRoundTrip) {
  Rng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testkit::random_valid_osm(rng, static_cast<std::size_t>(testkit::uniform(rng, 1, 4)),
                                             static_cast<std::size_t>(testkit::uniform(rng, 0, 2)), 50);
    EXPECT_EQ(parse_matrix(serialize_matrix(s)), s);
  }
}

TEST(Moves, RoundTripEveryKind) {
  const std::vector<Move> moves{StrongCongruence{IntMatrix{{1, 0}, {0, 1}}}, ClassicalCongruence{IntMatrix{{0, 1}, {1, 0}}},
                                Enlarge{EnlargeForm::B, {1, -2}, {1, Integer("99999999999999999999")}, 3}, Reduce{}};
  EXPECT_EQ(parse_moves(serialize_moves(moves)), moves);
  EXPECT_EQ(moves_from_json(moves_to_json(moves)), moves);
  Json witness = Json::object();
  witness["witness"] = moves_to_json(moves);
  EXPECT_EQ(moves_from_json(witness), moves);
}

TEST(Moves, ErrorsNamePosition) {
  try {
    parse_moves(R"([{"type": "reduce"}, {"type": "enlarge", "form": "C", "x": [], "y": [], "z": 0}])");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("/1/form"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of_error([] { parse_moves(R"([{"type": "twist"}])"); }), ErrorKind::ParseError);
}

TEST(Fingerprint, JsonRoundTrip) {
  Rng rng(92);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testkit::random_valid_osm(rng, static_cast<std::size_t>(testkit::uniform(rng, 1, 4)),
                                             static_cast<std::size_t>(testkit::uniform(rng, 0, 2)), 5);
    const auto fp = fingerprint(s);
    EXPECT_EQ(fingerprint_from_json(parse_json_text(format_json(fingerprint_to_json(fp)))), fp);
  }
}

TEST(FormatJson, ScalarArraysInline) {
  Json j = Json::object();
  j["b"] = Json::array({1, 2});
  j["a"] = Json::array({Json::array({1, 2}), Json::array({3, 4})});
  EXPECT_EQ(format_json(j), "{\n  \"a\": [\n    [1, 2],\n    [3, 4]\n  ],\n  \"b\": [1, 2]\n}");
}

TEST(Persist, WriteReadRoundTrip) {
  const fs::path dir = scratch_dir("rt");
  const Json report = fingerprint_to_json(fingerprint(parse_matrix(kM0Doc)));
  persist_report(report, dir / "fp.json");
  EXPECT_EQ(load_report(dir / "fp.json"), report);
  fs::remove_all(dir);
}

TEST(Persist, UnwritableDirectoryLeavesNothing) {
  if (::geteuid() == 0) {
    // root ignores permission bits; procfs refuses new files for everyone
    const fs::path target = "/proc/sseq_report.json";
    EXPECT_EQ(kind_of_error([&] { persist_report(Json::object(), target); }), ErrorKind::IoError);
    EXPECT_FALSE(fs::exists(target));
    return;
  }
  const fs::path dir = scratch_dir("ro");
  fs::permissions(dir, fs::perms::owner_read | fs::perms::owner_exec);
  EXPECT_EQ(kind_of_error([&] { persist_report(Json::object(), dir / "out.json"); }), ErrorKind::IoError);
  fs::permissions(dir, fs::perms::owner_all);
  EXPECT_TRUE(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST(Persist, MissingDirectoryIsIoError) {
  const fs::path dir = scratch_dir("missing");
  EXPECT_EQ(kind_of_error([&] { persist_report(Json::object(), dir / "no" / "such" / "out.json"); }),
            ErrorKind::IoError);
  EXPECT_FALSE(fs::exists(dir / "no"));
  EXPECT_EQ(kind_of_error([&] { load_report(dir / "absent.json"); }), ErrorKind::IoError);
  fs::remove_all(dir);
}

TEST(Batch, FingerprintsAndPairwiseTable) {
  const Json catalog = parse_json_text(R"({"matrices": [
    {"components": 3, "genus": 0, "entries": [[-1, -1], [-1, -1]], "label": "M0"},
    {"components": 3, "genus": 0, "entries": [[-1, 0], [0, 0]], "label": "M1"},
    {"components": 1, "genus": 1, "entries": [[-1, 1], [0, -1]]},
    {"components": 3, "genus": 0, "entries": [[0, 1], [0, 0]]}
  ]})");
  const Json out = run_batch(catalog);
  EXPECT_EQ(out["count"], 4);
  EXPECT_EQ(out["distinguishes"][0][1], Json::array({"linking"}));
  EXPECT_EQ(out["distinguishes"][0][0], Json::array());
  EXPECT_EQ(out["distinguishes"][0][2], "component_count_mismatch");
  EXPECT_TRUE(out["distinguishes"][0][3].is_null());
  EXPECT_EQ(out["entries"][3]["error"]["kind"], "ValidationError");

  const fs::path dir = scratch_dir("batch");
  persist_report(out, dir / "batch.json");
  EXPECT_EQ(load_report(dir / "batch.json"), run_batch(catalog));
  fs::remove_all(dir);
}
