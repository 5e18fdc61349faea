#include "nde/cache.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace nde;

TEST(CoeffCache, RecordRoundTrip) {
  for (int n : {0, 1, 7, 30}) {
    EXPECT_EQ(parse_cache_record(cache_record(coeff_B(n))), coeff_B(n));
    EXPECT_EQ(parse_cache_record(cache_record(coeff_D(n))), coeff_D(n));
  }
}

TEST(CoeffCache, FileRoundTrip) {
  auto path = (std::filesystem::temp_directory_path() / "nde_cache_test.txt").string();
  save_cache(path, 12);
  EXPECT_GE(load_cache(path), 26);
  std::remove(path.c_str());
  EXPECT_EQ(load_cache(path), 0);
}

TEST(CoeffCache, RejectsForeignFiles) {
  auto path = (std::filesystem::temp_directory_path() / "nde_cache_bad.txt").string();
  { std::ofstream(path) << "something else 1\n"; }
  EXPECT_THROW(load_cache(path), std::runtime_error);
  std::remove(path.c_str());
  EXPECT_THROW(parse_cache_record("B 3"), std::runtime_error);
}
