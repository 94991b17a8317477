#include <gtest/gtest.h>

#include "sigsel/error.hpp"
#include "sigsel/signature.hpp"

using namespace sigsel;

namespace {

TrialObservation obs(const std::string& user, Window w, std::map<std::string, std::vector<double>> rows) {
  TrialObservation o;
  o.user_id = user;
  o.window = w;
  for (auto& [name, values] : rows) o.observed.insert(name, TimeSeries(values, w.start));
  return o;
}

}  // namespace

TEST(Aggregate, ElementwiseMean) {
  const std::vector<TrialObservation> in{obs("a", {1, 2}, {{"cpu", {2, 4}}}), obs("b", {1, 2}, {{"cpu", {4, 6}}})};
  const auto agg = aggregate_observations(in, 2);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[0], 3.0);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[1], 5.0);
  EXPECT_EQ(agg.coverage, (std::vector<std::size_t>{2, 2}));
}

TEST(Aggregate, SingleSourceIsIdentity) {
  const std::vector<TrialObservation> in{obs("a", {1, 2}, {{"cpu", {7, 9}}})};
  const auto agg = aggregate_observations(in, 2);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[0], 7.0);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[1], 9.0);
  EXPECT_EQ(agg.coverage, (std::vector<std::size_t>{1, 1}));
}

TEST(Aggregate, GapListsTimestamps) {
  const std::vector<TrialObservation> in{obs("a", {1, 1}, {{"cpu", {7}}})};
  try {
    aggregate_observations(in, 2);
    FAIL();
  } catch (const CoverageGapError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoverageGap);
    EXPECT_EQ(e.gaps(), (std::vector<std::int64_t>{2}));
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
}

TEST(Aggregate, PartialWindowsOverlap) {
  const std::vector<TrialObservation> in{obs("a", {1, 2}, {{"cpu", {1, 2}}}), obs("b", {2, 3}, {{"cpu", {4, 6}}})};
  const auto agg = aggregate_observations(in, 3);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[0], 1.0);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[1], 3.0);
  EXPECT_DOUBLE_EQ(agg.mean.at("cpu")[2], 6.0);
  EXPECT_EQ(agg.coverage, (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Aggregate, AttributeSetsMustAgree) {
  const std::vector<TrialObservation> in{obs("a", {1, 1}, {{"cpu", {1}}}), obs("b", {1, 1}, {{"net", {1}}})};
  try {
    aggregate_observations(in, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AttributeMismatch);
  }
}

TEST(Aggregate, WindowOutsidePeriod) {
  const std::vector<TrialObservation> in{obs("a", {2, 3}, {{"cpu", {1, 2}}})};
  EXPECT_THROW(aggregate_observations(in, 2), Error);
}

TEST(GenerateSignature, Examples) {
  const std::vector<TrialObservation> a{obs("a", {1, 2}, {{"cpu", {3, 5}}})};
  auto sig = generate_signature("p", a, 2);
  EXPECT_DOUBLE_EQ(sig.matrix.at("cpu")[0], 3.0);
  EXPECT_DOUBLE_EQ(sig.matrix.at("cpu")[1], 5.0);

  const std::vector<TrialObservation> b{obs("a", {1, 2}, {{"cpu", {2, 6}}})};
  sig = generate_signature("p", b, 2);
  EXPECT_DOUBLE_EQ(sig.matrix.at("cpu")[0], 1.0);
  EXPECT_DOUBLE_EQ(sig.matrix.at("cpu")[1], 3.0);
  EXPECT_TRUE(sig.flat_attributes.empty());

  const std::vector<TrialObservation> c{obs("a", {1, 2}, {{"cpu", {4, 4}}})};
  sig = generate_signature("p", c, 2);
  EXPECT_DOUBLE_EQ(sig.matrix.at("cpu")[0], 1.0);
  EXPECT_DOUBLE_EQ(sig.matrix.at("cpu")[1], 1.0);
  EXPECT_TRUE(sig.flat_attributes.contains("cpu"));
}

TEST(GenerateSignature, CoverageIsKept) {
  const std::vector<TrialObservation> in{obs("a", {1, 2}, {{"cpu", {2, 6}}}), obs("b", {2, 2}, {{"cpu", {6}}})};
  const auto sig = generate_signature("p", in, 2);
  EXPECT_EQ(sig.provider_id, "p");
  EXPECT_EQ(sig.coverage, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(sig.period(), 2u);
}

TEST(SignatureWindow, Slices) {
  IaaSSignature sig;
  sig.matrix.insert("cpu", TimeSeries({1.0, 1.2, 0.9}));
  auto w = signature_window(sig, 1, 2);
  EXPECT_DOUBLE_EQ(w.at("cpu")[0], 1.0);
  EXPECT_DOUBLE_EQ(w.at("cpu")[1], 1.2);
  w = signature_window(sig, 2, 2);
  EXPECT_EQ(w.start_index(), 2);
  EXPECT_DOUBLE_EQ(w.at("cpu")[0], 1.2);
  EXPECT_DOUBLE_EQ(w.at("cpu")[1], 0.9);
  try {
    signature_window(sig, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(SignatureValue, WrapsOnlyWhenAsked) {
  IaaSSignature sig;
  sig.matrix.insert("cpu", TimeSeries({1.0, 2.0, 3.0}));
  EXPECT_DOUBLE_EQ(sig.value("cpu", 2), 2.0);
  EXPECT_DOUBLE_EQ(sig.value("cpu", 5, true), 2.0);
  EXPECT_DOUBLE_EQ(sig.value("cpu", 6, true), 3.0);
  try {
    (void)sig.value("cpu", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SignatureTooShort);
  }
}
