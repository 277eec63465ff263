#pragma once

#include <doctest.h>

#include "cuspkit/laurent.hpp"
#include "cuspkit/liecore.hpp"
#include "cuspkit/pbw.hpp"
#include "cuspkit/shuffle.hpp"

namespace doctest {
template <>
struct StringMaker<cuspkit::LaurentPoly> {
  static String convert(const cuspkit::LaurentPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<cuspkit::ShuffleElt> {
  static String convert(const cuspkit::ShuffleElt& x) { return x.to_json().dump().c_str(); }
};
template <>
struct StringMaker<cuspkit::PbwExponent> {
  static String convert(const cuspkit::PbwExponent& a) { return a.to_string().c_str(); }
};
template <>
struct StringMaker<cuspkit::RootVec> {
  static String convert(const cuspkit::RootVec& v) { return v.to_string().c_str(); }
};
}  // namespace doctest
