#pragma once

#include <doctest.h>

#include "stconv/error.hpp"

// Checks that `expr` throws stconv::Error with the given code.
#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const stconv::Error& e_) {                          \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());             \
    }                                                            \
    CHECK_MESSAGE(thrown_, "no stconv::Error from " #expr);      \
  } while (0)

namespace testdata {

struct EcCurve {
  const char* label;
  std::array<std::int64_t, 5> ainvs;
};

// the six labelled curves plus a few small-conductor models
inline const EcCurve ec_corpus[] = {
    {"37.a1", {0, 0, 1, -1, 0}},       {"37.b2", {0, 1, 1, -23, -50}},
    {"389.a1", {0, 1, 1, -2, 0}},      {"390.a1", {1, 1, 0, -483, -4293}},
    {"40.a1", {0, 0, 0, -107, -426}},  {"49.a1", {1, -1, 0, -1822, 30393}},
    {"11.a1", {0, -1, 1, -10, -20}},   {"11.a3", {0, -1, 1, 0, 0}},
    {"14.a1", {1, 0, 1, 4, -6}},       {"15.a1", {1, 1, 1, -10, -10}},
};

struct G2Curve {
  const char* label;
  std::vector<std::int64_t> f, h;
};

inline const G2Curve g2_corpus[] = {
    {"277.a.277.1", {0, 0, 0, 0, -1, -1, 0}, {1, 1, 1, 1}},
    {"x5+1", {1, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0}},
    {"sextic", {1, 3, 0, -2, 0, 0, 1}, {0, 1, 0, 0}},
    {"h-cubic", {-1, 2, 1, 0, -3, 1, 2}, {1, 0, 1, 1}},
};

}  // namespace testdata
