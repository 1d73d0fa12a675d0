#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace zap::detail {

using MpReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>,
                                             boost::multiprecision::et_off>;
using MpComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<120>>,
    boost::multiprecision::et_off>;

}  // namespace zap::detail
