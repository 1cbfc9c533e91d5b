// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knapwin/harness/costs.h"
#include "knapwin/harness/experiment.h"
#include "knapwin/harness/generate.h"
#include "knapwin/harness/ingest.h"
#include "knapwin/knapwindow.h"

namespace knapwin::harness {
namespace {

double AssignOne(const std::string& scheme, const Payload& payload,
                 CostContext context = {}, uint64_t seed = 1) {
  Rng rng(seed);
  return CostModel::Parse(scheme, 1).Assign(payload, context, rng)[0];
}

TokenBag BagOfLength(double length, int64_t followers = 0) {
  TokenBag bag;
  bag.counts = {{0, length}};
  bag.followers = followers;
  return bag;
}

std::string ErrorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

TEST(CostSchemeTest, UniformK) {
  EXPECT_DOUBLE_EQ(AssignOne("uniform_k:10", BagOfLength(3)), 0.1);
}

TEST(CostSchemeTest, Length) {
  CostContext context;
  context.mean_length = 5.0;
  EXPECT_DOUBLE_EQ(AssignOne("length:10", BagOfLength(10), context), 0.2);
  EXPECT_DOUBLE_EQ(AssignOne("length(10)", BagOfLength(10), context), 0.2);
  EXPECT_DOUBLE_EQ(AssignOne("length:10", ItemSet{{1, 2, 3, 4, 5}}, context),
                   0.1);
  EXPECT_NE(ErrorOf([] { AssignOne("length:10", ModularValue{1.0}); }), "");
}

TEST(CostSchemeTest, InfluenceFallsWithFollowers) {
  CostContext context;
  context.mean_followers = 100.0;
  const double few = AssignOne("influence:10:0.3", BagOfLength(1, 0), context);
  const double some = AssignOne("influence:10:0.3", BagOfLength(1, 500), context);
  const double many = AssignOne("influence:10:0.3", BagOfLength(1, 100000), context);
  EXPECT_DOUBLE_EQ(few, 0.3);
  EXPECT_LT(some, few);
  EXPECT_LT(many, some);
  EXPECT_GE(many, 0.01);
}

TEST(CostSchemeTest, IidIsSeededAndInRange) {
  Rng a(42), b(42);
  auto model = CostModel::Parse("iid:0.02:0.08", 3);
  EXPECT_EQ(model.d(), 3);
  for (int i = 0; i < 200; ++i) {
    auto x = model.Assign(ModularValue{1}, {}, a);
    auto y = model.Assign(ModularValue{1}, {}, b);
    EXPECT_EQ(x, y);
    for (double c : x) {
      EXPECT_GE(c, 0.02);
      EXPECT_LE(c, 0.08);
    }
  }
  EXPECT_EQ(CostModel::Parse("uniform(0.02,0.08)", 1).schemes()[0].kind,
            CostScheme::Kind::kIidUniform);
}

TEST(CostSchemeTest, ComposesAcrossKnapsacks) {
  Rng rng(1);
  CostContext context;
  context.mean_length = 5.0;
  auto model = CostModel::Parse("uniform_k:10+length:10", 2);
  EXPECT_EQ(model.Assign(BagOfLength(10), context, rng),
            (std::vector<double>{0.1, 0.2}));
}

TEST(CostSchemeTest, Errors) {
  EXPECT_THROW(CostModel::Parse("bogus:1", 1), std::invalid_argument);
  EXPECT_THROW(CostModel::Parse("fixed:0.1+fixed:0.2", 3), std::invalid_argument);
  EXPECT_THROW(CostModel::Parse("iid:0.5:0.1", 1), std::invalid_argument);
  EXPECT_THROW(CostModel::Parse("fixed:x", 1), std::invalid_argument);
  const std::string msg = ErrorOf([] { AssignOne("fixed:1.5", ModularValue{1}); });
  EXPECT_NE(msg.find("fixed"), std::string::npos) << msg;
  EXPECT_NE(ErrorOf([] { AssignOne("uniform_k:0.5", ModularValue{1}); }), "");
}

IngestOptions Options(UtilityKind utility, std::string cost = "", int d = 1) {
  IngestOptions o;
  o.utility = utility;
  o.cost_model = std::move(cost);
  o.d = d;
  o.seed = 5;
  return o;
}

TEST(IngestTest, FeatureVectorsJsonl) {
  std::istringstream in(
      R"({"payload": {"features": [0.1, 0.2]}, "costs": [0.3]}
{"payload": {"features": [0.4, 0.5]}, "costs": [0.2, 0.9]}
{"payload": {"features": [0.6, 0.7]}, "costs": [1.0]}
)");
  auto data = ParseJsonl(in, Options(UtilityKind::kIvm));
  ASSERT_EQ(data.elements.size(), 3u);
  EXPECT_EQ(data.feature_dim, 2u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(data.elements[i]->ordinal(), i + 1);
  EXPECT_DOUBLE_EQ(data.elements[1]->costs()[0], 0.2);
  EXPECT_EQ(data.elements[1]->dimension(), 1);
}

TEST(IngestTest, MissingCostsUseTheSchemeDeterministically) {
  const std::string text = "{\"payload\": {\"value\": 0.5}}\n"
                           "{\"payload\": {\"value\": 0.7}}\n";
  std::istringstream a(text), b(text);
  auto x = ParseJsonl(a, Options(UtilityKind::kModular, "uniform(0.02,0.08)"));
  auto y = ParseJsonl(b, Options(UtilityKind::kModular, "uniform(0.02,0.08)"));
  for (size_t i = 0; i < 2; ++i) {
    const double c = x.elements[i]->costs()[0];
    EXPECT_GE(c, 0.02);
    EXPECT_LE(c, 0.08);
    EXPECT_EQ(c, y.elements[i]->costs()[0]);
  }
}

TEST(IngestTest, ErrorsCarryLineNumbers) {
  std::istringstream bad_cost("{\"payload\": {\"value\": 1}, \"costs\": [0.5]}\n"
                              "{\"payload\": {\"value\": 1}, \"costs\": [1.5]}\n");
  auto msg = ErrorOf([&] { ParseJsonl(bad_cost, Options(UtilityKind::kModular)); });
  EXPECT_NE(msg.find("<stream>:2:"), std::string::npos) << msg;

  std::istringstream broken("{\"payload\": {\"value\": 1}, \"costs\": [0.5]}\n"
                            "\n{not json\n");
  msg = ErrorOf([&] { ParseJsonl(broken, Options(UtilityKind::kModular)); });
  EXPECT_NE(msg.find(":3:"), std::string::npos) << msg;

  std::istringstream no_cost("{\"payload\": {\"value\": 1}}\n");
  msg = ErrorOf([&] { ParseJsonl(no_cost, Options(UtilityKind::kModular)); });
  EXPECT_NE(msg.find(":1:"), std::string::npos) << msg;

  std::istringstream wrong_dim(
      "{\"payload\": {\"features\": [1, 2]}, \"costs\": [0.5]}\n"
      "{\"payload\": {\"features\": [1]}, \"costs\": [0.5]}\n");
  msg = ErrorOf([&] { ParseJsonl(wrong_dim, Options(UtilityKind::kIvm)); });
  EXPECT_NE(msg.find(":2:"), std::string::npos) << msg;
}

TEST(IngestTest, TokensAndItems) {
  std::istringstream tokens(
      R"({"payload": {"tokens": {"cat": 2, "dog": 1}, "followers": 3}, "costs": [0.1]}
{"payload": {"tokens": {"cat": 1}}, "costs": [0.1]}
)");
  auto data = ParseJsonl(tokens, Options(UtilityKind::kCoverage));
  ASSERT_EQ(data.elements.size(), 2u);
  ASSERT_TRUE(data.words);
  const auto& bag = std::get<TokenBag>(data.elements[0]->payload());
  EXPECT_EQ(bag.followers, 3);
  EXPECT_DOUBLE_EQ(bag.Length(), 3.0);
  // cat: 3 of 4 occurrences.
  const int32_t cat = data.words->Id("cat");
  ASSERT_GE(cat, 0);
  EXPECT_DOUBLE_EQ(data.words->Probability(cat), 0.75);

  std::istringstream items(R"({"payload": {"items": [9, 3, 9]}, "costs": [0.1]})");
  auto sets = ParseJsonl(items, Options(UtilityKind::kBmc));
  EXPECT_EQ(std::get<ItemSet>(sets.elements[0]->payload()).items,
            (std::vector<int64_t>{3, 9}));
}

TEST(IngestTest, Csv) {
  std::istringstream with_costs("c,x,y\n0.2,1.0,2.0\n# skipped\n0.3,3.0,4.0\n");
  auto data = ParseCsv(with_costs, Options(UtilityKind::kIvm));
  ASSERT_EQ(data.elements.size(), 2u);
  EXPECT_DOUBLE_EQ(data.elements[1]->costs()[0], 0.3);
  EXPECT_EQ(std::get<FeatureVector>(data.elements[1]->payload()).values,
            (std::vector<double>{3.0, 4.0}));
  std::istringstream schemed("1.0,2.0\n3.0,4.0\n");
  auto s = ParseCsv(schemed, Options(UtilityKind::kIvm, "fixed:0.5"));
  EXPECT_EQ(std::get<FeatureVector>(s.elements[0]->payload()).values.size(), 2u);
  std::istringstream bad("0.2,1.0\n0.2,abc\n");
  auto msg = ErrorOf([&] { ParseCsv(bad, Options(UtilityKind::kIvm)); });
  EXPECT_NE(msg.find(":2:"), std::string::npos) << msg;
}

TEST(IngestTest, EmptyInputGivesHeaderOnly) {
  std::istringstream in("");
  auto data = ParseJsonl(in, Options(UtilityKind::kModular));
  EXPECT_TRUE(data.elements.empty());
  ExperimentConfig config;
  config.algorithm = Algorithm::kKwPlus;
  config.window = 10;
  auto rows = Replay(data, config);
  EXPECT_TRUE(rows.empty());
  std::ostringstream out;
  WriteMetricsCsv(rows, out);
  EXPECT_EQ(out.str(), "t,algo,utility,size,micros,checkpoints,stored_elements\n");
}

TEST(IngestTest, FileRoundTrip) {
  auto data = Generate(GeneratorSpec::Parse("family=tokens,n=50,vocab=40"), 3);
  const std::string path = ::testing::TempDir() + "roundtrip.jsonl";
  {
    std::ofstream out(path);
    WriteJsonl(data, out);
  }
  IngestOptions options = Options(UtilityKind::kCoverage);
  auto back = Ingest(path, options);
  ASSERT_EQ(back.elements.size(), data.elements.size());
  for (size_t i = 0; i < data.elements.size(); ++i) {
    const auto& a = *data.elements[i];
    const auto& b = *back.elements[i];
    EXPECT_TRUE(std::equal(a.costs().begin(), a.costs().end(), b.costs().begin(),
                           b.costs().end()));
    const auto& ba = std::get<TokenBag>(a.payload());
    const auto& bb = std::get<TokenBag>(b.payload());
    EXPECT_DOUBLE_EQ(ba.Length(), bb.Length());
    EXPECT_EQ(ba.followers, bb.followers);
  }
  // Word probabilities survive the rename to "w<id>".
  const auto& first = std::get<TokenBag>(data.elements[0]->payload());
  const int32_t id = first.counts[0].first;
  const int32_t renamed = back.words->Id("w" + std::to_string(id));
  ASSERT_GE(renamed, 0);
  EXPECT_DOUBLE_EQ(back.words->Probability(renamed), data.words->Probability(id));
  EXPECT_THROW(Ingest(path + ".missing", options), std::runtime_error);
}

TEST(GeneratorTest, DeterministicAndShaped) {
  const auto spec = GeneratorSpec::Parse("family=vectors,n=1000,dim=5,cost=iid:0.02:0.08");
  EXPECT_EQ(spec.utility(), UtilityKind::kIvm);
  auto a = Generate(spec, 7);
  auto b = Generate(spec, 7);
  std::ostringstream sa, sb;
  WriteJsonl(a, sa);
  WriteJsonl(b, sb);
  EXPECT_EQ(sa.str(), sb.str());
  ASSERT_EQ(a.elements.size(), 1000u);
  for (const auto& e : a.elements) {
    const auto& x = std::get<FeatureVector>(e->payload()).values;
    ASSERT_EQ(x.size(), 5u);
    for (double v : x) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 1.0);
    }
    EXPECT_GE(e->costs()[0], 0.02);
    EXPECT_LE(e->costs()[0], 0.08);
  }
  std::ostringstream sc;
  WriteJsonl(Generate(spec, 8), sc);
  EXPECT_NE(sa.str(), sc.str());
  EXPECT_TRUE(Generate(GeneratorSpec::Parse("n=0"), 1).elements.empty());
}

TEST(GeneratorTest, SpecParsing) {
  auto spec = GeneratorSpec::Parse("family=items,n=20,d=2,cost=iid:0.1:0.2+fixed:0.5,length=4");
  EXPECT_EQ(spec.family, Family::kItems);
  EXPECT_EQ(spec.d, 2);
  EXPECT_EQ(spec.cost, "iid:0.1:0.2+fixed:0.5");
  auto data = Generate(spec, 1);
  EXPECT_EQ(data.elements[0]->costs()[1], 0.5);
  auto paren = GeneratorSpec::Parse("cost=uniform(0.02,0.08),n=5");
  EXPECT_EQ(paren.cost, "uniform(0.02,0.08)");
  EXPECT_EQ(paren.n, 5u);
  EXPECT_THROW(GeneratorSpec::Parse("family=nope"), std::invalid_argument);
  EXPECT_THROW(GeneratorSpec::Parse("colour=red"), std::invalid_argument);
}

TEST(ExperimentTest, ParsingAndDefaults) {
  EXPECT_EQ(ParseAlgorithm("kw+"), Algorithm::kKwPlus);
  EXPECT_EQ(ParseAlgorithm("brute"), Algorithm::kBrute);
  EXPECT_THROW(ParseAlgorithm("sieve"), std::invalid_argument);
  EXPECT_THROW(ParseUtility("entropy"), std::invalid_argument);
  EXPECT_EQ(DefaultSlide(5), 1u);
  EXPECT_EQ(DefaultSlide(10000), 1u);
  EXPECT_EQ(DefaultSlide(100000), 10u);
  EXPECT_EQ(DefaultSlide(100001), 11u);
}

TEST(ExperimentTest, ValidateRejects) {
  ExperimentConfig c;
  c.window = 10;
  c.slide = 20;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.slide = 1;
  c.beta = 1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.beta = 0.1;
  c.algorithm = Algorithm::kBrute;
  c.window = 40;
  const auto msg = ErrorOf([&] { c.Validate(); });
  EXPECT_NE(msg.find("25"), std::string::npos) << msg;
  EXPECT_NE(msg.find("ceg"), std::string::npos) << msg;
  c.window = 12;
  EXPECT_NO_THROW(c.Validate());
}

ExperimentConfig SmallRun(Algorithm algorithm) {
  ExperimentConfig c;
  c.algorithm = algorithm;
  c.utility = UtilityKind::kModular;
  c.window = 12;
  c.slide = 3;
  c.generator = "family=modular,n=60,cost=iid:0.1:0.6";
  c.seed = 17;
  return c;
}

TEST(ExperimentTest, EverySolutionIsFeasibleAndInsideTheWindow) {
  for (auto algo : {Algorithm::kKs, Algorithm::kKw, Algorithm::kKwPlus,
                    Algorithm::kCeg, Algorithm::kBrute}) {
    const auto config = SmallRun(algo);
    const auto data = LoadDataset(config);
    const auto rows = Replay(data, config);
    ASSERT_EQ(rows.size(), 20u);
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      EXPECT_EQ(r.t, static_cast<int64_t>(3 * (i + 1)));
      EXPECT_LE(r.cost_max, 1.0 + kFeasibilitySlack);
      const int64_t start = std::max<int64_t>(1, r.t - 11);
      for (int64_t o : r.members) {
        EXPECT_GE(o, start) << AlgorithmName(algo);
        EXPECT_LE(o, r.t) << AlgorithmName(algo);
      }
    }
  }
}

TEST(ExperimentTest, BruteBoundsCeg) {
  const auto data = LoadDataset(SmallRun(Algorithm::kBrute));
  const auto brute = Replay(data, SmallRun(Algorithm::kBrute));
  const auto ceg = Replay(data, SmallRun(Algorithm::kCeg));
  ASSERT_EQ(brute.size(), ceg.size());
  for (size_t i = 0; i < brute.size(); ++i) {
    EXPECT_GE(brute[i].utility + 1e-12, ceg[i].utility);
  }
}

std::string WithoutTiming(const std::vector<SlideMetrics>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << r.t << ',' << r.utility << ',' << r.size << ',' << r.checkpoints
        << ',' << r.stored_elements << '\n';
  }
  return out.str();
}

TEST(ExperimentTest, ReplayIsDeterministic) {
  for (auto algo : {Algorithm::kKw, Algorithm::kKwPlus, Algorithm::kCeg}) {
    auto config = SmallRun(algo);
    config.generator = "family=tokens,n=80,vocab=60,cost=iid:0.1:0.4";
    config.utility = UtilityKind::kCoverage;
    const auto a = Replay(LoadDataset(config), config);
    const auto b = Replay(LoadDataset(config), config);
    EXPECT_EQ(WithoutTiming(a), WithoutTiming(b));
  }
}

TEST(ExperimentTest, WritesCsvFile) {
  auto config = SmallRun(Algorithm::kKwPlus);
  config.output = ::testing::TempDir() + "metrics.csv";
  const auto rows = RunExperiment(config);
  std::ifstream in(config.output);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), rows.size() + 2);
  EXPECT_EQ(lines.front(), "t,algo,utility,size,micros,checkpoints,stored_elements");
  EXPECT_EQ(lines.back().rfind("summary,kwplus,", 0), 0u);
  EXPECT_EQ(lines[1].rfind("3,kwplus,", 0), 0u);
}

TEST(ExperimentTest, FullWindowKwEqualsKs) {
  auto kw = SmallRun(Algorithm::kKw);
  kw.window = 60;
  kw.slide = 1;
  auto ks = kw;
  ks.algorithm = Algorithm::kKs;
  const auto data = LoadDataset(kw);
  const auto a = Replay(data, kw);
  const auto b = Replay(data, ks);
  EXPECT_EQ(a.back().members, b.back().members);
  EXPECT_EQ(a.back().utility, b.back().utility);
}

TEST(ExperimentTest, KwPlusKeepsFewerCheckpointsThanKw) {
  ExperimentConfig kw;
  kw.algorithm = Algorithm::kKw;
  // At T = 1 the newest checkpoint holds one element, so theta and the
  // KW+ index grow with log W while KW keeps about sqrt(W) checkpoints.
  kw.window = 3000;
  kw.generator = "family=modular,n=9000";
  kw.seed = 4;
  auto kwp = kw;
  kwp.algorithm = Algorithm::kKwPlus;
  const auto data = LoadDataset(kw);
  double mean = 0.0;
  const auto rows = Replay(data, kwp);
  for (const auto& r : rows) mean += static_cast<double>(r.checkpoints);
  mean /= static_cast<double>(rows.size());
  const size_t interval = DefaultInterval(3000, 1);
  EXPECT_LT(mean, static_cast<double>((3000 + interval - 1) / interval));
}

}  // namespace
}  // namespace knapwin::harness
