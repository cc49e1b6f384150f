// Copyright 2026 The discord_lab Authors
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

#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "discord_lab/parallel.h"
#include "discord_lab/random_stream.h"

namespace discord_lab {
namespace {

class ScopedEnv {
 public:
  explicit ScopedEnv(const char* value) {
    if (const char* old = std::getenv(kThreadsEnvVar)) saved_ = old;
    had_ = std::getenv(kThreadsEnvVar) != nullptr;
    if (value) setenv(kThreadsEnvVar, value, 1); else unsetenv(kThreadsEnvVar);
  }
  ~ScopedEnv() {
    if (had_) setenv(kThreadsEnvVar, saved_.c_str(), 1); else unsetenv(kThreadsEnvVar);
  }

 private:
  std::string saved_;
  bool had_ = false;
};

TEST(WorkerCount, ReadsEnvironment) {
  {
    ScopedEnv env("3");
    EXPECT_EQ(worker_count(), 3);
  }
  {
    ScopedEnv env(nullptr);
    EXPECT_GE(worker_count(), 1);
  }
  for (const char* bad : {"0", "-2", "four", "3x"}) {
    ScopedEnv env(bad);
    EXPECT_THROW(worker_count(), std::invalid_argument) << bad;
  }
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (int workers : {1, 2, 5}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 3,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(RandomStream, ReproducibleAndIndependent) {
  RandomStream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  std::set<std::uint64_t> firsts;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    firsts.insert(x);
  }
  EXPECT_NE(RandomStream(42, 0).next_u64(), c.next_u64());
  EXPECT_NE(RandomStream(42, 0).next_u64(), d.next_u64());
  EXPECT_EQ(firsts.size(), 100u);
}

TEST(RandomStream, Uniform01Range) {
  RandomStream rng(1);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

}  // namespace
}  // namespace discord_lab
