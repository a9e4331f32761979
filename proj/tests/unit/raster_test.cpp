/*
 * Copyright 2026 The riley Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "riley/raster.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "riley/error.hpp"
#include "riley/limitset.hpp"

namespace riley {
namespace {

TEST(Raster, ToPixel) {
  Viewport v{-1, 1, -1, 1};
  EXPECT_EQ(to_pixel(v, 100, 100, 0.0), (std::array<int, 2>{50, 50}));
  EXPECT_EQ(to_pixel(v, 100, 100, Complex(-1, 1)), (std::array<int, 2>{0, 0}));
  EXPECT_EQ(to_pixel(v, 100, 100, Complex(1, -1)), (std::array<int, 2>{99, 99}));
  EXPECT_EQ(to_pixel(v, 100, 100, Complex(0.999, 0.999)), (std::array<int, 2>{99, 0}));
  EXPECT_EQ(to_pixel(v, 100, 100, Complex(2, 0)), (std::array<int, 2>{-1, -1}));
}

TEST(Raster, ViewportParse) {
  Viewport v = Viewport::parse("-6,6,-1.5,7");
  EXPECT_EQ(v.x_min, -6.0);
  EXPECT_EQ(v.y_max, 7.0);
  EXPECT_THROW(Viewport::parse("1,2,3"), ValidationError);
  EXPECT_THROW(Viewport::parse("1,1,0,1"), ValidationError);
  EXPECT_THROW(Viewport::parse("a,1,0,1"), ValidationError);
}

TEST(Raster, SizeLimits) {
  EXPECT_THROW(Raster(0, 10), ValidationError);
  EXPECT_THROW(Raster(10, Raster::kMaxSide + 1), ValidationError);
  Raster r(3, 2, {1, 2, 3});
  EXPECT_EQ(r.data().size(), 18u);
  EXPECT_EQ(r.pixel(2, 1), (Rgb{1, 2, 3}));
  r.set(5, 5, {9, 9, 9});
  r.set(2, 1, {7, 8, 9});
  EXPECT_EQ(r.pixel(2, 1), (Rgb{7, 8, 9}));
}

TEST(Raster, PpmEncoding) {
  Raster r(2, 1, {0, 0, 0});
  r.set(1, 0, {255, 10, 20});
  std::string ppm = encode_ppm(r);
  std::string header = "P6\n2 1\n255\n";
  ASSERT_EQ(ppm.size(), header.size() + 6);
  EXPECT_EQ(ppm.substr(0, header.size()), header);
  EXPECT_EQ(static_cast<unsigned char>(ppm[header.size() + 3]), 255);
  EXPECT_EQ(static_cast<unsigned char>(ppm[header.size() + 5]), 20);
  std::ostringstream os;
  write_ppm(os, r);
  EXPECT_EQ(os.str(), ppm);
}

TEST(Raster, CircleIsSymmetric) {
  Viewport v{-2, 2, -2, 2};
  Raster r(101, 101, {255, 255, 255});
  draw_circle(r, v, 0.0, 1.0, {0, 0, 0});
  int marked = 0;
  for (int y = 0; y < 101; ++y)
    for (int x = 0; x < 101; ++x)
      if (r.pixel(x, y)[0] == 0) {
        ++marked;
        EXPECT_EQ(r.pixel(100 - x, y)[0], 0);
        EXPECT_EQ(r.pixel(x, 100 - y)[0], 0);
      }
  EXPECT_GT(marked, 100);
}

TEST(Raster, EmptyCloudIsBlank) {
  LimitSetCloud cloud;
  EXPECT_EQ(rasterize(cloud, Viewport{}, 16, 8), Raster(16, 8, {0, 0, 0}));
}

TEST(Raster, SinglePointLightsCenterPixel) {
  LimitSetCloud cloud;
  cloud.points = {Complex(0, 0)};
  Raster r = rasterize(cloud, Viewport{}, 64, 32);
  for (int y = 0; y < 32; ++y)
    for (int x = 0; x < 64; ++x)
      EXPECT_EQ(r.pixel(x, y)[0] != 0, x == 32 && y == 16) << x << "," << y;
}

TEST(Raster, HitCountsAreLogScaled) {
  LimitSetCloud cloud;
  cloud.points = {Complex(0, 0), Complex(0, 0), Complex(4.9, 4.9)};
  Raster r = rasterize(cloud, Viewport{}, 11, 11);
  EXPECT_EQ(r.pixel(1, 1), (Rgb{0, 0, 0}));
  EXPECT_EQ(r.pixel(5, 5), (Rgb{255, 255, 255}));
  auto one = static_cast<std::uint8_t>(std::lround(255.0 * std::log(2.0) / std::log(3.0)));
  EXPECT_EQ(r.pixel(10, 0), (Rgb{one, one, one}));
}

}  // namespace
}  // namespace riley
