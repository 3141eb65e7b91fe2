// tests/unit/tensor_test.cc

// Copyright 2026  The seldkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "seldkit/tensor.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "../support/oracles.h"
#include "seldkit/error.h"

using seld::ReadTensor;
using seld::Tensor;
using seld::WriteTensor;

TEST_SUITE_BEGIN("tensor");

TEST_CASE("payload size is the product of dims") {
  seld::testing::TempDir tmp("tensor");
  Tensor t;
  t.dims = {2, 7, 64};
  t.data.assign(2 * 7 * 64, 0.0f);
  t.meta.kind = "mel_iv";
  t.meta.order = "T,C,B";
  WriteTensor(t, tmp.path() / "zeros");
  CHECK(std::filesystem::file_size(tmp.path() / "zeros.bin") ==
        2 * 7 * 64 * sizeof(float));  // 896 floats, 3584 bytes
}

TEST_CASE("round trip is bit-exact including the header") {
  seld::testing::TempDir tmp("tensor");
  std::mt19937 rng(17);
  std::uniform_real_distribution<float> dist(-10.0f, 10.0f);
  Tensor t;
  t.dims = {5, 3, 11};
  t.data.resize(t.element_count());
  for (float &x : t.data) x = dist(rng);
  t.meta.kind = "maccdoa";
  t.meta.order = "T,N,C,3";
  t.meta.extra["activity_threshold"] = "0.5";
  WriteTensor(t, tmp.path() / "roundtrip.bin");

  Tensor back = ReadTensor(tmp.path() / "roundtrip.json");
  CHECK(back.dims == t.dims);
  CHECK(back.meta.kind == t.meta.kind);
  CHECK(back.meta.order == t.meta.order);
  CHECK(back.meta.extra == t.meta.extra);
  REQUIRE(back.data.size() == t.data.size());
  CHECK(std::memcmp(back.data.data(), t.data.data(),
                    t.data.size() * sizeof(float)) == 0);
}

TEST_CASE("header/payload mismatch is rejected") {
  seld::testing::TempDir tmp("tensor");
  Tensor t;
  t.dims = {4, 7, 8};
  t.data.assign(t.element_count(), 1.0f);
  t.meta.kind = "mel_gcc";
  t.meta.order = "T,C,B";
  WriteTensor(t, tmp.path() / "broken");

  // Shrink the payload to what 6 channels would need.
  std::filesystem::resize_file(tmp.path() / "broken.bin",
                               4 * 6 * 8 * sizeof(float));
  try {
    ReadTensor(tmp.path() / "broken");
    FAIL("expected an error");
  } catch (const seld::SeldError &e) {
    CHECK(e.kind() == seld::ErrorKind::kIo);
  }
}

TEST_CASE("writer rejects inconsistent dims") {
  seld::testing::TempDir tmp("tensor");
  Tensor t;
  t.dims = {2, 2};
  t.data.assign(5, 0.0f);
  CHECK_THROWS_AS(WriteTensor(t, tmp.path() / "bad"), seld::SeldError);
}

TEST_CASE("fnv1a64 matches the reference vectors") {
  // Published FNV-1a test vectors.
  CHECK(seld::Fnv1a64(std::string("")) == 0xCBF29CE484222325ULL);
  CHECK(seld::Fnv1a64(std::string("a")) == 0xAF63DC4C8601EC8CULL);
  CHECK(seld::Fnv1a64(std::string("foobar")) == 0x85944171F73967E8ULL);
}

TEST_SUITE_END();
