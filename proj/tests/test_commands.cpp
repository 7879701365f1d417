#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "phdiv/commands.hpp"
#include "phdiv/io.hpp"
#include "support.hpp"

using namespace phdiv;
namespace fs = std::filesystem;

namespace {

class CommandTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("phdiv_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& content) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p;
    }

    fs::path write_cloud(const std::string& name, const PointCloud& cloud) {
        std::ostringstream s;
        for (std::size_t k = 0; k < cloud.dim(); ++k) s << (k ? "," : "") << "x" << k;
        if (cloud.has_labels()) s << ",label";
        s << "\n";
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            for (std::size_t k = 0; k < cloud.dim(); ++k) {
                s << (k ? "," : "") << io::format_number(cloud.point(i)[k]);
            }
            if (cloud.has_labels()) s << "," << (*cloud.labels())[i];
            s << "\n";
        }
        return write(name, s.str());
    }

    static std::string read(const fs::path& p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    static nlohmann::json read_json(const fs::path& p) { return nlohmann::json::parse(read(p)); }

    fs::path dir_;
};

}  // namespace

TEST_F(CommandTest, DiversityDefaults) {
    std::mt19937_64 rng(61);
    RunConfig c;
    c.input_path = write_cloud("points.csv", fixtures::random_cloud(rng, 20, 3));
    c.output_dir = dir_ / "out";
    std::ostringstream log;
    ASSERT_EQ(cmd_diversity(c, log), kExitOk) << log.str();
    const auto j = read_json(c.output_dir / "report.json");
    EXPECT_TRUE(j["peh"]["h0"].contains("q1"));
    EXPECT_TRUE(j["peh"]["h0"].contains("q20"));
    EXPECT_TRUE(j["vendi_score"].is_number());
    EXPECT_EQ(j["meta"]["metric"], "euclidean");
    EXPECT_EQ(j["config"]["metric"], "euclidean");
    EXPECT_EQ(read(c.output_dir / "diagram_h0.csv").rfind("k,birth,death,lifetime\n", 0), 0u);
    EXPECT_NE(read(c.output_dir / "diagram_h0.csv").find(",inf,inf"), std::string::npos);
    EXPECT_TRUE(fs::exists(c.output_dir / "diagram_h1.csv"));
}

TEST_F(CommandTest, DiversityDistancesWithOrders) {
    RunConfig c;
    c.input_path = write("dist.csv", "0,1,2,1\n1,0,1,2\n2,1,0,1\n1,2,1,0\n");
    c.input_kind = InputKind::distances;
    c.metric_given = true;
    c.orders = {1, 2, 20};
    c.output_dir = dir_;
    std::ostringstream log;
    ASSERT_EQ(cmd_diversity(c, log), kExitOk) << log.str();
    EXPECT_NE(log.str().find("ignored"), std::string::npos);
    const auto j = read_json(dir_ / "report.json");
    EXPECT_EQ(j["peh"]["h1"].size(), 3u);
    EXPECT_TRUE(j["vendi_score"].is_null());
    EXPECT_EQ(j["meta"]["metric"], "precomputed");
}

TEST_F(CommandTest, OracleModeAgrees) {
    std::mt19937_64 rng(62);
    RunConfig c;
    c.input_path = write_cloud("tiny.csv", fixtures::random_cloud(rng, 10, 2));
    c.output_dir = dir_;
    c.oracle = true;
    std::ostringstream log;
    ASSERT_EQ(cmd_diversity(c, log), kExitOk) << log.str();
    EXPECT_EQ(read_json(dir_ / "report.json")["oracle_match"], true);
}

TEST_F(CommandTest, SizeAndInputErrors) {
    std::mt19937_64 rng(63);
    RunConfig c;
    c.input_path = write_cloud("p.csv", fixtures::random_cloud(rng, 30, 2));
    c.output_dir = dir_;
    c.max_n = 20;
    std::ostringstream log;
    EXPECT_EQ(cmd_diversity(c, log), kExitSizeLimit);

    c.input_path = dir_ / "missing.csv";
    EXPECT_EQ(cmd_diversity(c, log), kExitFailure);

    c.input_path = write("bad.csv", "0,1\n3,0\n");
    c.input_kind = InputKind::distances;
    EXPECT_EQ(cmd_diversity(c, log), kExitFailure);
}

TEST_F(CommandTest, SelectWritesBalancedSubsets) {
    std::mt19937_64 rng(64);
    RunConfig c;
    c.input_path = write_cloud("labelled.csv", fixtures::random_cloud(rng, 60, 3, true));
    c.per_class = 10;
    c.seed = 7;
    c.output_dir = dir_ / "a";
    c.measure = true;
    std::ostringstream log;
    ASSERT_EQ(cmd_select(c, log), kExitOk) << log.str();
    for (const char* kind : {"closest", "farthest", "random"}) {
        const std::string csv = read(c.output_dir / (std::string("subset_") + kind + ".csv"));
        EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21) << kind;
        EXPECT_TRUE(fs::exists(c.output_dir / (std::string("report_") + kind + ".json")));
    }
    const auto meta = read_json(c.output_dir / "subsets.json");
    EXPECT_EQ(meta["subsets"]["closest"]["lower_half"], 30);
    EXPECT_EQ(meta["config"]["seed"], 7);

    // Same seed, byte-identical output.
    RunConfig again = c;
    again.output_dir = dir_ / "b";
    ASSERT_EQ(cmd_select(again, log), kExitOk);
    for (const char* file : {"subset_closest.csv", "subset_farthest.csv", "subset_random.csv"}) {
        EXPECT_EQ(read(c.output_dir / file), read(again.output_dir / file));
    }
}

TEST_F(CommandTest, SelectNeedsLabels) {
    std::mt19937_64 rng(65);
    RunConfig c;
    c.input_path = write_cloud("plain.csv", fixtures::random_cloud(rng, 10, 2));
    c.output_dir = dir_;
    std::ostringstream log;
    EXPECT_EQ(cmd_select(c, log), kExitFailure);
    EXPECT_NE(log.str().find("labels required"), std::string::npos);
}

TEST_F(CommandTest, MdsSquareAndSubsets) {
    RunConfig c;
    c.input_path = write("square.csv", "x,y,label\n0,0,0\n1,0,1\n1,1,0\n0,1,1\n");
    c.output_dir = dir_;
    c.subset_files = {write("subset_closest.csv", "index,label\n0,0\n1,1\n")};
    std::ostringstream log;
    ASSERT_EQ(cmd_mds(c, log), kExitOk) << log.str();
    EXPECT_NE(log.str().find("exact"), std::string::npos);
    const std::string svg = read(dir_ / "mds.svg");
    // Two subset markers plus two background markers, legend excluded.
    const auto body = svg.substr(0, svg.find("<g font-family"));
    std::size_t markers = 0;
    for (const char* tag : {"<circle", "<rect x", "<polygon"}) {
        for (auto pos = body.find(tag); pos != std::string::npos; pos = body.find(tag, pos + 1)) ++markers;
    }
    EXPECT_EQ(markers, 4u);
    const std::string csv = read(dir_ / "mds.csv");
    EXPECT_EQ(csv.rfind("x,y,label,subset_kind\n", 0), 0u);
    EXPECT_NE(csv.find(",closest\n"), std::string::npos);
}

TEST_F(CommandTest, MdsCosineWarns) {
    std::mt19937_64 rng(66);
    RunConfig c;
    c.input_path = write_cloud("p.csv", fixtures::random_cloud(rng, 25, 4));
    c.metric = Metric::cosine;
    c.output_dir = dir_;
    std::ostringstream log;
    ASSERT_EQ(cmd_mds(c, log), kExitOk) << log.str();
    EXPECT_NE(log.str().find("non_euclidean"), std::string::npos);
}
