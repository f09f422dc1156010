#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <skorodist/split_time.hpp>

using namespace skorodist;

TEST(SplitTimeOrder, MinusBeforePlus) {
  EXPECT_EQ(cmp(SplitTime::minus(1), SplitTime::plus(1)), std::strong_ordering::less);
  EXPECT_EQ(cmp(SplitTime::plus(0), SplitTime::minus(1)), std::strong_ordering::less);
  EXPECT_EQ(cmp(SplitTime::plus(2), SplitTime::plus(2)), std::strong_ordering::equal);
}

TEST(SplitTimeOrder, InfinitiesCarryFixedSigns) {
  EXPECT_EQ(SplitTime(-kInf, Sign::minus).sign(), Sign::plus);
  EXPECT_EQ(SplitTime(kInf, Sign::plus).sign(), Sign::minus);
  EXPECT_LT(SplitTime::neg_infinity(), SplitTime::minus(-1e300));
  EXPECT_LT(SplitTime::plus(1e300), SplitTime::pos_infinity());
  EXPECT_THROW(SplitTime(std::nan(""), Sign::plus), InputError);
}

TEST(SplitTimeOrder, TotalOrderOnSamples) {
  std::mt19937_64 rng(3);
  std::vector<SplitTime> s = {SplitTime::neg_infinity(), SplitTime::pos_infinity()};
  std::uniform_int_distribution<int> r(-3, 3);
  for (int i = 0; i < 30; ++i) s.emplace_back(r(rng) * 0.5, i % 2 ? Sign::plus : Sign::minus);
  for (const auto& a : s)
    for (const auto& b : s) {
      const int count = (a < b) + (a == b) + (b < a);
      EXPECT_EQ(count, 1);
      for (const auto& c : s)
        if (a < b && b < c) EXPECT_LT(a, c);
    }
}

TEST(SplitTimeText, RoundTrips) {
  EXPECT_EQ(to_string(SplitTime::minus(1.5)), "1.5-");
  EXPECT_EQ(to_string(SplitTime::plus(1.5)), "1.5+");
  EXPECT_EQ(to_string(SplitTime::neg_infinity()), "-inf");
  EXPECT_EQ(to_string(SplitTime::pos_infinity()), "+inf");
  for (const char* t : {"1.5-", "1.5+", "-2+", "-inf", "+inf", "0.1-"})
    EXPECT_EQ(to_string(parse_split_time(t)), std::string(t));
  EXPECT_THROW(parse_split_time("1.5"), InputError);
  EXPECT_THROW(parse_split_time("abc+"), InputError);
  EXPECT_THROW(parse_split_time("1.5x+"), InputError);
}

TEST(SplitDomain, DoublesEachTime) {
  const auto d = split_domain({0.0, 1.0});
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0], SplitTime::minus(0));
  EXPECT_EQ(d[1], SplitTime::plus(0));
  EXPECT_EQ(d[2], SplitTime::minus(1));
  EXPECT_EQ(d[3], SplitTime::plus(1));
  EXPECT_TRUE(split_domain({}).empty());
  EXPECT_EQ(split_domain({3.0}), (std::vector<SplitTime>{SplitTime::minus(3), SplitTime::plus(3)}));
}

TEST(SplitDomain, StrictlyIncreasing) {
  std::vector<double> times;
  for (int i = 0; i < 50; ++i) times.push_back(i * 0.37 - 4);
  const auto d = split_domain(times);
  EXPECT_EQ(d.size() % 2, 0u);
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_LT(d[i - 1], d[i]);
  EXPECT_THROW(split_domain({1.0, 0.0}), InputError);
  EXPECT_THROW(split_domain({1.0, 1.0}), InputError);
}

TEST(SplitIntervalTest, Membership) {
  const auto iv = SplitInterval::closed(SplitTime::plus(0), SplitTime::minus(1));
  EXPECT_TRUE(interval_contains(iv, SplitTime::minus(0.5)));
  EXPECT_FALSE(interval_contains(iv, SplitTime::plus(1)));
  EXPECT_FALSE(interval_contains(iv, SplitTime::minus(0)));
  EXPECT_TRUE(interval_contains(SplitInterval::open(SplitTime::minus(0), SplitTime::plus(1)), SplitTime::plus(0)));
  EXPECT_THROW(SplitInterval::closed(SplitTime::plus(1), SplitTime::minus(1)), InputError);
}

TEST(SplitIntervalTest, OpenEqualsShiftedClosed) {
  for (double s : {-1.0, 0.0, 0.25})
    for (double t : {0.5, 1.0, 3.0}) {
      const auto open = SplitInterval::open(SplitTime::minus(s), SplitTime::plus(t));
      const auto closed = SplitInterval::closed(SplitTime::plus(s), SplitTime::minus(t));
      for (double r = -2.0; r <= 4.0; r += 0.25)
        for (Sign sg : {Sign::minus, Sign::plus}) {
          const SplitTime tau(r, sg);
          EXPECT_EQ(interval_contains(open, tau), interval_contains(closed, tau));
        }
    }
}
