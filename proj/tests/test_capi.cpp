#include <cmath>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "obslab/obslab.h"

namespace {

const char* kTwoLines = R"({"scenario": "two-lines", "K": 4, "samples": 10, "T": "9*pi",
                            "observation": {"alpha": "pi/2", "beta": "pi/2"}})";

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(obslab_version(), OBSLAB_VERSION); }

TEST(CApi, RunAndFree) {
    obslab_experiment* e = nullptr;
    ASSERT_EQ(obslab_experiment_from_json(kTwoLines, &e), OBSLAB_OK);
    obslab_report* r = nullptr;
    ASSERT_EQ(obslab_run(e, "verify", &r), OBSLAB_OK);
    EXPECT_EQ(obslab_report_passed(r), 1);
    EXPECT_NE(std::string(obslab_report_json(r)).find("\"command\": \"verify\""), std::string::npos);
    EXPECT_EQ(obslab_report_csv(r), nullptr);
    obslab_report_free(r);

    ASSERT_EQ(obslab_experiment_set_seed(e, 7), OBSLAB_OK);
    ASSERT_EQ(obslab_run(e, "verify", &r), OBSLAB_OK);
    EXPECT_NE(std::string(obslab_report_json(r)).find("\"seed\": 7"), std::string::npos);
    obslab_report_free(r);
    obslab_experiment_free(e);
}

TEST(CApi, ErrorCodes) {
    obslab_experiment* e = nullptr;
    EXPECT_EQ(obslab_experiment_from_json("{not json", &e), OBSLAB_ERR_CONFIG);
    EXPECT_EQ(e, nullptr);
    EXPECT_STRNE(obslab_last_error(), "");
    EXPECT_EQ(obslab_experiment_from_file("/nonexistent/config.json", &e), OBSLAB_ERR_IO);

    ASSERT_EQ(obslab_experiment_from_json(R"({"scenario": "two-lines", "K": 3, "T": 20,
                                             "observation": {"alpha": "pi/2", "beta": "pi/2"}})", &e),
              OBSLAB_OK);
    obslab_report* r = nullptr;
    EXPECT_EQ(obslab_run(e, "verify", &r), OBSLAB_ERR_PRECONDITION);
    EXPECT_EQ(r, nullptr);
    EXPECT_EQ(obslab_run(e, "bogus", &r), OBSLAB_ERR_CONFIG);
    EXPECT_EQ(obslab_run(nullptr, "verify", &r), OBSLAB_ERR_CONFIG);
    obslab_experiment_free(e);
    obslab_experiment_free(nullptr);
    obslab_report_free(nullptr);
}

TEST(CApi, ScanCsv) {
    obslab_experiment* e = nullptr;
    ASSERT_EQ(obslab_experiment_from_json(R"({"scenario": "two-lines", "K": 3, "T_scan": [20, 30],
                                             "observation": {"alpha": "pi/2", "beta": "pi/2"}})", &e),
              OBSLAB_OK);
    obslab_report* r = nullptr;
    ASSERT_EQ(obslab_run(e, "scan-t", &r), OBSLAB_OK);
    ASSERT_NE(obslab_report_csv(r), nullptr);
    EXPECT_EQ(std::string(obslab_report_csv(r)).rfind("T,c_min,c_predicted,pass\n", 0), 0u);
    obslab_report_free(r);
    obslab_experiment_free(e);
}

TEST(CApi, DirectNumerics) {
    double value = 0.0;
    int n = -1;
    ASSERT_EQ(obslab_m_ab(M_PI / 4.0, 3.0 * M_PI / 4.0, &value, &n), OBSLAB_OK);
    EXPECT_NEAR(value, M_PI / 4.0 - 1.0 / 6.0, 1e-14);
    EXPECT_EQ(n, 3);
    EXPECT_EQ(obslab_m_ab(2.0, 1.0, &value, &n), OBSLAB_ERR_CONFIG);

    int p = 0;
    double m = 0.0, M = 0.0;
    ASSERT_EQ(obslab_symmetry_constants(M_PI / 5.0, &p, &m, &M), OBSLAB_OK);
    EXPECT_EQ(p, 5);
    EXPECT_NEAR(m, std::pow(std::sin(M_PI / 5.0), 2), 1e-15);
    EXPECT_NEAR(M, std::pow(std::sin(2.0 * M_PI / 5.0), 2), 1e-15);

    double gamma = 0.0;
    int64_t k = 0;
    ASSERT_EQ(obslab_gamma_hat(1, 1000, &gamma, &k), OBSLAB_OK);
    EXPECT_NEAR(gamma, 6.0 - 4.0 * std::sqrt(2.0), 1e-12);
    EXPECT_EQ(k, 2);

    double threshold = 0.0, c = 0.0;
    int has_c = -1;
    ASSERT_EQ(obslab_predicted_constant("two-lines", 9.0 * M_PI, 0, 0, 1, 1, 1, 1, &threshold, &has_c, &c), OBSLAB_OK);
    EXPECT_EQ(has_c, 1);
    EXPECT_NEAR(c, 34.0 / (9.0 * M_PI), 1e-14);
    EXPECT_NEAR(threshold, 8.0 * M_PI, 1e-13);
    ASSERT_EQ(obslab_predicted_constant("two-lines", 7.0 * M_PI, 0, 0, 1, 1, 1, 1, &threshold, &has_c, &c), OBSLAB_OK);
    EXPECT_EQ(has_c, 0);
    EXPECT_EQ(obslab_predicted_constant("unknown", 1, 0, 0, 1, 1, 1, 1, &threshold, &has_c, &c), OBSLAB_ERR_CONFIG);
}
