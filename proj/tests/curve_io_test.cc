// Copyright 2026 The cohqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohqec/curve_io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

namespace cohqec {
namespace {

FailureCurve sample() {
    FailureCurve c;
    c.metadata = {{"code", "rep:3"}, {"noise", "ln:x:normal:0:0.1"}, {"seed", "5"}};
    c.points = {{1, 0.1, 0.01, 10}, {2, 1.0 / 3.0, 0.0, 10}, {3, 2.9802e-4, 1e-17, 10}};
    return c;
}

TEST(CurveIoTest, RoundTripIsExact) {
    std::stringstream ss;
    write_curve(sample(), ss);
    EXPECT_EQ(read_curve(ss), sample());
}

TEST(CurveIoTest, LayoutOfWrittenFile) {
    std::ostringstream os;
    write_curve(sample(), os);
    EXPECT_EQ(os.str(),
              "# code=rep:3\n# noise=ln:x:normal:0:0.1\n# seed=5\n"
              "cycle,mean_failure,std_error,trials\n"
              "1,0.1,0.01,10\n2,0.3333333333333333,0,10\n3,0.00029802,1e-17,10\n");
}

TEST(CurveIoTest, PredictedCurvesAddSourceColumn) {
    FailureCurve c = sample();
    c.source = "predicted";
    for (auto &pt : c.points) {
        pt.trials = 0;
        pt.std_error = 0;
    }
    std::stringstream ss;
    write_curve(c, ss);
    EXPECT_NE(ss.str().find("trials,source\n"), std::string::npos);
    EXPECT_NE(ss.str().find(",0,0,predicted\n"), std::string::npos);
    EXPECT_EQ(read_curve(ss), c);
}

TEST(CurveIoTest, WriteRejectsInvalidRows) {
    std::ostringstream os;
    FailureCurve c = sample();
    c.points[0].trials = 0;
    EXPECT_THROW(write_curve(c, os), SchemaError);
    c = sample();
    c.points[0].mean_failure = 1.5;
    EXPECT_THROW(write_curve(c, os), SchemaError);
    c = sample();
    c.points[0].std_error = -1;
    EXPECT_THROW(write_curve(c, os), SchemaError);
    c = sample();
    c.points[0].mean_failure = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(write_curve(c, os), SchemaError);
}

TEST(CurveIoTest, ReadRejectsMalformedInput) {
    auto parse = [](const std::string &text) {
        std::istringstream is(text);
        return read_curve(is);
    };
    EXPECT_THROW(parse("cycle,mean_failure,std_error,trials\n1,0.1,0.01\n"), SchemaError);
    EXPECT_THROW(parse("cycle,mean_failure,std_error,trials\n1,0.1,0.01,10,extra\n"), SchemaError);
    EXPECT_THROW(parse("cycle,mean,std_error,trials\n"), SchemaError);
    EXPECT_THROW(parse("cycle,mean_failure,std_error,trials\n1,abc,0.01,10\n"), SchemaError);
    EXPECT_THROW(parse(""), SchemaError);
    EXPECT_NO_THROW(parse("cycle,mean_failure,std_error,trials\n"));
}

TEST(CurveIoTest, FormatDoubleRoundTrips) {
    for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 6.25e-8, 2.2250738585072014e-308}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(CurveIoTest, FileRoundTrip) {
    auto path = (std::filesystem::temp_directory_path() / "cohqec_curve_io_test.csv").string();
    write_curve(sample(), path);
    EXPECT_EQ(read_curve(path), sample());
    std::filesystem::remove(path);
    EXPECT_ANY_THROW(read_curve(path));
}

}  // namespace
}  // namespace cohqec
