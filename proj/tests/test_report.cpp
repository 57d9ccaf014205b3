#include <sstream>

#include <gtest/gtest.h>

#include <mrpot/report.hpp>

using namespace mrpot::report;

TEST(Format, FixedDecimals)
{
    EXPECT_EQ(fixed(-0.12052976936, 7), "-0.1205298");
    EXPECT_EQ(fixed(-1e-12, 7), "0.0000000");
    EXPECT_EQ(fixed(5.140717171, decimals_for("eV")), "5.14071717");
    EXPECT_EQ(fixed(std::nan(""), 3), "nan");
    EXPECT_EQ(decimals_for("au"), 7);
}

TEST(Format, CsvQuoting)
{
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(ReportRow, DeltaConvention)
{
    report_row r;
    r.energy_analytic = -0.1205297;
    auto const w = with_numeric(r, -0.1205271);
    EXPECT_DOUBLE_EQ(*w.delta, -0.1205297 - -0.1205271);
}

TEST(ReportRow, CsvShape)
{
    report_row r;
    r.state_label = "2p";
    r.n = 0;
    r.l = 1;
    r.inv_b = 0.025;
    r.alpha = 0.75;
    r.scheme = "case1";
    r.energy_analytic = -0.12052977;
    r.units = "au";
    std::ostringstream out;
    write_csv(out, report_columns(), std::vector<report_row>{r, with_numeric(r, -0.1205271)});
    EXPECT_EQ(out.str(),
              "state,n,l,inv_b,alpha,scheme,energy_analytic,energy_numeric,delta,units,error\n"
              "2p,0,1,0.0250,0.7500,case1,-0.1205298,,,au,\n"
              "2p,0,1,0.0250,0.7500,case1,-0.1205298,-0.1205271,-2.670000e-06,au,\n");
}

TEST(ReportRow, JsonDocument)
{
    report_row r;
    r.state_label = "3d";
    r.units = "eV";
    r.error = "bracket";
    auto const doc = document("compare", std::vector<report_row>{r});
    EXPECT_EQ(doc["schema"], "mrpot-report");
    EXPECT_EQ(doc["schema_version"], 1);
    EXPECT_EQ(doc["rows"][0]["state"], "3d");
    EXPECT_TRUE(doc["rows"][0]["energy_numeric"].is_null());
    EXPECT_EQ(doc["rows"][0]["error"], "bracket");
    EXPECT_TRUE(doc["summary"].is_object());
}

TEST(TableCell, FieldsAndProvenance)
{
    table_cell c;
    c.table = 1;
    c.state_label = "2p";
    c.inv_b = 0.1;
    c.alpha = 1.5;
    c.column = "numerov";
    c.method = "numerov exact centrifugal";
    c.value = 0.0615;
    c.units = "au";
    c.provenance = "repo-generated";
    auto const f = to_fields(c);
    ASSERT_EQ(f.size(), table_columns().size());
    EXPECT_EQ(f[11], "");
    EXPECT_EQ(f[12], "");
    auto const j = to_json(c);
    EXPECT_TRUE(j["published"].is_null());
    EXPECT_TRUE(j["molecule"].is_null());
    EXPECT_EQ(j["provenance"], "repo-generated");
}
