#include "cliquebounds/report.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cliquebounds/generators.hpp"

namespace cliquebounds {
namespace {

ReportOptions exact_options() {
  ReportOptions o;
  o.exact = true;
  return o;
}

TEST(ComputeRecordTest, CycleFive) {
  const auto rec = compute_record("c5", cycle_graph(5), exact_options());
  EXPECT_EQ(rec.wei, Weight(5, 3));
  EXPECT_EQ(rec.wei_independence, Weight(5, 3));
  EXPECT_EQ(rec.r_alpha, 2u);
  EXPECT_EQ(rec.r_beta, 2u);
  EXPECT_EQ(rec.alpha_just, Justification::theorem_1);
  EXPECT_EQ(rec.beta_just, Justification::theorem_2);
  EXPECT_EQ(rec.phi, 2u);
  EXPECT_EQ(rec.omega, 2u);
  EXPECT_FALSE(rec.improved);
  EXPECT_FALSE(rec.violation);
  EXPECT_FALSE(rec.error);
}

TEST(ComputeRecordTest, TriangleWithIsolatedVerticesImproves) {
  const Graph g = disjoint_union(complete_graph(3), Graph::edgeless(3));
  const auto rec = compute_record("k3+3k1", g, exact_options());
  EXPECT_EQ(rec.wei, Weight(5, 4));
  EXPECT_EQ(rec.r_alpha, 3u);
  EXPECT_TRUE(rec.improved);
  EXPECT_EQ(rec.omega, 3u);
}

TEST(ComputeRecordTest, TuranAllEqual) {
  const auto rec = compute_record("t93", turan_graph(9, 3), exact_options());
  EXPECT_EQ(rec.wei, Weight(3));
  EXPECT_EQ(rec.r_alpha, 3u);
  EXPECT_EQ(rec.r_beta, 3u);
  EXPECT_EQ(rec.phi, 3u);
  EXPECT_EQ(rec.omega, 3u);
}

TEST(ComputeRecordTest, OracleCapBecomesErrorNotViolation) {
  const auto rec = compute_record("c13", cycle_graph(13), exact_options());
  EXPECT_EQ(rec.failure, BoundRecord::Failure::oracle_limit);
  EXPECT_TRUE(rec.error);
  EXPECT_FALSE(rec.violation);
  EXPECT_FALSE(rec.phi);
  EXPECT_EQ(rec.r_alpha, 2u);
}

TEST(ConsistencyTest, DetectsBrokenChains) {
  auto rec = compute_record("c5", cycle_graph(5), exact_options());
  EXPECT_FALSE(check_consistency(rec));
  rec.omega = 1;
  EXPECT_TRUE(check_consistency(rec));
  rec.omega = 2;
  rec.phi = 1;  // below W = 5/3
  EXPECT_TRUE(check_consistency(rec));
}

TEST(RunReportTest, OrderPreservedAcrossThreads) {
  std::vector<GraphSource> sources;
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    sources.push_back({GeneratorSpec::parse("gnp:11,0.5", seed)});
  sources.push_back({GeneratorSpec::parse("nonsense")});
  sources.push_back({FileSource{"/nonexistent/graph.dimacs", std::nullopt}});
  ReportOptions serial = exact_options();
  ReportOptions parallel = exact_options();
  parallel.threads = 8;
  const auto a = run_report(sources, serial);
  const auto b = run_report(sources, parallel);
  std::ostringstream ca, cb;
  write_csv(ca, a);
  write_csv(cb, b);
  EXPECT_EQ(ca.str(), cb.str());
  ASSERT_EQ(a.size(), sources.size());
  for (std::size_t i = 0; i < 40; ++i) EXPECT_EQ(a[i].name, sources[i].name());
  EXPECT_EQ(a[40].failure, BoundRecord::Failure::usage);
  EXPECT_EQ(a[41].failure, BoundRecord::Failure::load);
}

TEST(WriterTest, CsvColumnsAndExactFields) {
  std::ostringstream out;
  write_csv(out, {compute_record("c5", cycle_graph(5), exact_options()),
                  compute_record("pet", petersen_graph(), ReportOptions{})});
  EXPECT_EQ(out.str(),
            "name,n,m,wei_num,wei_den,indep_num,indep_den,r_alpha,alpha_just,r_beta,beta_just,phi,"
            "omega,improved\n"
            "c5,5,5,5,3,5,3,2,THEOREM_1,2,THEOREM_2,2,2,false\n"
            "pet,10,15,10,7,5,2,2,THEOREM_1,2,THEOREM_2,,,false\n");
}

TEST(WriterTest, CsvQuotesAwkwardNames) {
  std::ostringstream out;
  write_csv(out, {compute_record("a,\"b\"", complete_graph(2), ReportOptions{})});
  EXPECT_NE(out.str().find("\"a,\"\"b\"\"\",2,"), std::string::npos);
}

TEST(WriterTest, JsonLines) {
  std::ostringstream out;
  write_jsonl(out, {compute_record("c5", cycle_graph(5), exact_options()),
                    compute_record("c13", cycle_graph(13), exact_options())});
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  const auto first = nlohmann::json::parse(line);
  EXPECT_EQ(first["wei_num"], "5");
  EXPECT_EQ(first["wei_den"], "3");
  EXPECT_EQ(first["phi"], 2);
  EXPECT_EQ(first["alpha_just"], "THEOREM_1");
  std::getline(in, line);
  const auto second = nlohmann::json::parse(line);
  EXPECT_TRUE(second["phi"].is_null());
  EXPECT_TRUE(second.contains("error"));
}

TEST(WriterTest, TableShowsExactAndDecimal) {
  std::ostringstream out;
  write_table(out, {compute_record("c5", cycle_graph(5), exact_options())});
  EXPECT_NE(out.str().find("5/3 (≈ 1.667)"), std::string::npos);
}

TEST(SweepTest, ReproducibleWithNonzeroImprovement) {
  const SweepOptions opts{12, 0.3, 100, 5};
  const auto a = run_sweep(opts);
  const auto b = run_sweep(opts);
  EXPECT_EQ(a.instances, 100u);
  EXPECT_EQ(a.improved_any, b.improved_any);
  EXPECT_GT(a.improvement_fraction(), 0.0);
  std::ostringstream ja, jb;
  write_sweep(ja, a, true);
  write_sweep(jb, b, true);
  EXPECT_EQ(ja.str(), jb.str());
  EXPECT_EQ(nlohmann::json::parse(ja.str())["seed"], 5);
}

}  // namespace
}  // namespace cliquebounds
